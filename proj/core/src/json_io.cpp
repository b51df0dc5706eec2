#include "orbigraph/json_io.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <map>

#include "json.hpp"
#include "orbigraph/group.hpp"

namespace orbigraph {

using nlohmann::json;

namespace {

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw malformed_input_error("invalid json");
  return j;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw malformed_input_error(std::string("missing field: ") + key);
  return j.at(key);
}

Id to_id(const json& j, Id bound, const char* what) {
  if (!j.is_number_integer()) throw malformed_input_error(std::string(what) + ": id expected");
  const long long v = j.get<long long>();
  if (v < 0 || v >= bound) throw malformed_input_error(std::string(what) + ": id out of range");
  return static_cast<Id>(v);
}

std::vector<Id> id_vector(const json& j, std::size_t len, Id bound, const char* what) {
  if (!j.is_array() || j.size() != len)
    throw malformed_input_error(std::string(what) + ": wrong length");
  std::vector<Id> out;
  out.reserve(len);
  for (const json& e : j) out.push_back(to_id(e, bound, what));
  return out;
}

// Rectangular table of ids; null entries mean undefined.
std::vector<std::vector<Id>> id_table(const json& j, std::size_t rows, std::size_t cols, Id bound,
                                      const char* what) {
  if (!j.is_array() || j.size() != rows)
    throw malformed_input_error(std::string(what) + ": wrong row count");
  std::vector<std::vector<Id>> out(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = j.at(i);
    if (!row.is_array() || row.size() != cols)
      throw malformed_input_error(std::string(what) + ": ragged row");
    out[i].reserve(cols);
    for (const json& e : row) out[i].push_back(e.is_null() ? undef : to_id(e, bound, what));
  }
  return out;
}

json table_json(const std::vector<std::vector<Id>>& t) {
  json rows = json::array();
  for (const auto& r : t) {
    json row = json::array();
    for (Id v : r) {
      if (v == undef)
        row.push_back(nullptr);
      else
        row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

finite_group parse_group_value(const json& j) {
  if (!j.is_object()) throw malformed_input_error("group: object expected");
  if (j.contains("cyclic")) return cyclic_group(to_id(j.at("cyclic"), 1 << 20, "group.cyclic"));
  if (j.contains("symmetric"))
    return symmetric_group(to_id(j.at("symmetric"), 9, "group.symmetric"));
  if (!j.contains("mul")) throw malformed_input_error("group: cyclic, symmetric or mul expected");

  const json& mul = j.at("mul");
  if (!mul.is_array() || mul.empty()) throw malformed_input_error("group.mul: non-empty table");
  const Id n = static_cast<Id>(mul.size());
  finite_group g;
  g.mul = id_table(mul, n, n, n, "group.mul");
  for (const auto& row : g.mul)
    for (Id v : row)
      if (v == undef) throw malformed_input_error("group.mul: null entry");
  if (j.contains("names")) {
    const json& names = j.at("names");
    if (!names.is_array() || names.size() != static_cast<std::size_t>(n))
      throw malformed_input_error("group.names: wrong length");
    for (const json& s : names) g.names.push_back(s.get<std::string>());
  } else {
    for (Id i = 0; i < n; ++i) g.names.push_back("g" + std::to_string(i));
  }
  // Identity and inverses are derivable from the table; without them the
  // struct cannot be built, so their absence is a malformed table.
  g.identity = undef;
  for (Id e = 0; e < n && g.identity == undef; ++e) {
    bool is_id = true;
    for (Id x = 0; x < n; ++x) is_id = is_id && g.mul[e][x] == x && g.mul[x][e] == x;
    if (is_id) g.identity = e;
  }
  if (g.identity == undef) throw malformed_input_error("group.mul: no identity element");
  g.inv.assign(n, undef);
  for (Id x = 0; x < n; ++x) {
    for (Id y = 0; y < n; ++y)
      if (g.mul[x][y] == g.identity && g.mul[y][x] == g.identity) g.inv[x] = y;
    if (g.inv[x] == undef) throw malformed_input_error("group.mul: missing inverse");
  }
  return g;
}

Id resolve_vertex(const json& j, const directed_graph& g,
                  const std::map<std::string, Id>& by_name) {
  if (j.is_string()) {
    const auto it = by_name.find(j.get<std::string>());
    if (it == by_name.end())
      throw malformed_input_error("unknown vertex name: " + j.get<std::string>());
    return it->second;
  }
  return to_id(j, g.n_vertices, "vertex");
}

Id resolve_edge(const json& j, const directed_graph& g, const std::map<std::string, Id>& by_name) {
  if (j.is_string()) {
    const auto it = by_name.find(j.get<std::string>());
    if (it == by_name.end())
      throw malformed_input_error("unknown edge name: " + j.get<std::string>());
    return it->second;
  }
  return to_id(j, g.n_edges(), "edge");
}

std::map<std::string, Id> name_map(const std::vector<std::string>& names) {
  std::map<std::string, Id> out;
  for (Id i = 0; i < static_cast<Id>(names.size()); ++i) out.emplace(names[i], i);
  return out;
}

finite_groupoid parse_groupoid_value(const json& j) {
  const Id n_units = to_id(field(j, "n_units"), 1 << 20, "n_units");
  if (j.contains("group")) {
    const finite_group k = parse_group_value(j.at("group"));
    if (n_units <= 0) throw malformed_input_error("n_units: positive count expected");
    return build_transitive_groupoid(n_units, k);
  }
  const json& src = field(j, "src");
  if (!src.is_array()) throw malformed_input_error("src: array expected");
  const std::size_t n = src.size();
  finite_groupoid g;
  g.n_units = n_units;
  g.src = id_vector(src, n, n_units, "src");
  g.rng = id_vector(field(j, "rng"), n, n_units, "rng");
  g.inv = id_vector(field(j, "inv"), n, static_cast<Id>(n), "inv");
  g.unit_arrow = id_vector(field(j, "unit_arrow"), n_units, static_cast<Id>(n), "unit_arrow");
  const auto comp = id_table(field(j, "comp"), n, n, static_cast<Id>(n), "comp");
  g.comp.reserve(n * n);
  for (const auto& row : comp) g.comp.insert(g.comp.end(), row.begin(), row.end());
  return g;
}

json groupoid_json_value(const finite_groupoid& g) {
  json j;
  j["n_units"] = g.n_units;
  j["src"] = g.src;
  j["rng"] = g.rng;
  j["inv"] = g.inv;
  j["unit_arrow"] = g.unit_arrow;
  std::vector<std::vector<Id>> comp(g.n_arrows(), std::vector<Id>(g.n_arrows()));
  for (Id i = 0; i < g.n_arrows(); ++i)
    for (Id k = 0; k < g.n_arrows(); ++k) comp[i][k] = g.compose(i, k);
  j["comp"] = table_json(comp);
  return j;
}

directed_graph parse_graph_value(const json& j) {
  directed_graph g;
  const json& vertices = field(j, "vertices");
  if (vertices.is_number_integer()) {
    g.n_vertices = to_id(vertices, 1 << 20, "vertices");
  } else if (vertices.is_array()) {
    g.n_vertices = static_cast<Id>(vertices.size());
    for (const json& s : vertices) {
      if (!s.is_string()) throw malformed_input_error("vertices: name expected");
      g.vertex_names.push_back(s.get<std::string>());
    }
  } else {
    throw malformed_input_error("vertices: count or name array expected");
  }
  const auto vnames = name_map(g.vertex_names);
  const json& edges = field(j, "edges");
  if (!edges.is_array()) throw malformed_input_error("edges: array expected");
  bool any_name = false;
  for (const json& e : edges) {
    if (!e.is_object()) throw malformed_input_error("edges: object expected");
    g.esrc.push_back(resolve_vertex(field(e, "src"), g, vnames));
    g.erng.push_back(resolve_vertex(field(e, "rng"), g, vnames));
    g.edge_names.push_back(e.contains("name") ? e.at("name").get<std::string>() : "");
    any_name = any_name || e.contains("name");
  }
  if (!any_name) g.edge_names.clear();
  return g;
}

json graph_json_value(const directed_graph& g) {
  json j;
  json vertices = json::array();
  for (Id v = 0; v < g.n_vertices; ++v) vertices.push_back(g.vertex_name(v));
  j["vertices"] = std::move(vertices);
  json edges = json::array();
  for (Id e = 0; e < g.n_edges(); ++e) {
    json je;
    je["name"] = g.edge_name(e);
    je["src"] = g.esrc[e];
    je["rng"] = g.erng[e];
    edges.push_back(std::move(je));
  }
  j["edges"] = std::move(edges);
  return j;
}

graph_action parse_graph_action_value(const json& j) {
  graph_action a;
  a.gpd = parse_groupoid_value(field(j, "groupoid"));
  a.graph = parse_graph_value(field(j, "graph"));
  const std::size_t narrows = a.gpd.n_arrows();
  const std::size_t nv = a.graph.n_vertices;
  const std::size_t ne = a.graph.n_edges();
  a.vertex_anchor = id_vector(field(j, "vertex_anchor"), nv, a.gpd.n_units, "vertex_anchor");
  a.vertex_act =
      id_table(field(j, "vertex_act"), narrows, nv, static_cast<Id>(nv), "vertex_act");
  a.edge_act = id_table(field(j, "edge_act"), narrows, ne, static_cast<Id>(ne), "edge_act");
  return a;
}

json graph_action_json_value(const graph_action& a) {
  json j;
  j["groupoid"] = groupoid_json_value(a.gpd);
  j["graph"] = graph_json_value(a.graph);
  j["vertex_anchor"] = a.vertex_anchor;
  j["vertex_act"] = table_json(a.vertex_act);
  j["edge_act"] = table_json(a.edge_act);
  return j;
}

int parse_letter(const json& t, const selfsim_automaton& a,
                 const std::map<std::string, Id>& gnames) {
  if (t.is_number_integer()) {
    const long long v = t.get<long long>();
    if (v == 0 || std::abs(v) > a.n_generators())
      throw malformed_input_error("restriction: letter out of range");
    return static_cast<int>(v);
  }
  if (!t.is_string()) throw malformed_input_error("restriction: letter token expected");
  std::string s = t.get<std::string>();
  bool inverse = false;
  if (!s.empty() && s.front() == '~') {
    inverse = true;
    s.erase(s.begin());
  }
  const auto it = gnames.find(s);
  if (it == gnames.end()) throw malformed_input_error("unknown generator name: " + s);
  return inverse ? -(it->second + 1) : it->second + 1;
}

}  // namespace

finite_groupoid parse_groupoid_json(const std::string& text) {
  return parse_groupoid_value(parse_text(text));
}

directed_graph parse_graph_json(const std::string& text) {
  return parse_graph_value(parse_text(text));
}

graph_action parse_graph_action_json(const std::string& text) {
  return parse_graph_action_value(parse_text(text));
}

selfsim_automaton parse_selfsim_json(const std::string& text) {
  const json j = parse_text(text);
  selfsim_automaton a;
  a.graph = parse_graph_value(field(j, "graph"));
  const auto vnames = name_map(a.graph.vertex_names);
  const json& gens = field(j, "generators");
  if (!gens.is_array()) throw malformed_input_error("generators: array expected");
  for (const json& g : gens) {
    a.gen_names.push_back(field(g, "name").get<std::string>());
    a.gen_src.push_back(resolve_vertex(field(g, "src"), a.graph, vnames));
    a.gen_rng.push_back(resolve_vertex(field(g, "rng"), a.graph, vnames));
  }
  const auto gnames = name_map(a.gen_names);
  const auto enames = name_map(a.graph.edge_names);
  const Id ne = a.graph.n_edges();
  a.out_edge.assign(a.n_generators(), std::vector<Id>(ne, undef));
  a.restriction.assign(a.n_generators(), std::vector<gen_word>(ne));
  const json& trans = field(j, "transitions");
  if (!trans.is_array()) throw malformed_input_error("transitions: array expected");
  for (const json& t : trans) {
    Id g;
    const json& gf = field(t, "gen");
    if (gf.is_string()) {
      const auto it = gnames.find(gf.get<std::string>());
      if (it == gnames.end())
        throw malformed_input_error("unknown generator name: " + gf.get<std::string>());
      g = it->second;
    } else {
      g = to_id(gf, a.n_generators(), "gen");
    }
    const Id e = resolve_edge(field(t, "edge"), a.graph, enames);
    const Id out = resolve_edge(field(t, "out"), a.graph, enames);
    if (a.out_edge[g][e] != undef) throw malformed_input_error("duplicate transition");
    a.out_edge[g][e] = out;
    gen_word w;
    w.src = a.graph.esrc[e];
    w.rng = a.graph.esrc[out];
    const json& rest = field(t, "restriction");
    if (!rest.is_array()) throw malformed_input_error("restriction: array expected");
    for (const json& tok : rest) w.letters.push_back(parse_letter(tok, a, gnames));
    a.restriction[g][e] = std::move(w);
  }
  return a;
}

std::string groupoid_to_json(const finite_groupoid& g) { return groupoid_json_value(g).dump(2); }

std::string graph_to_json(const directed_graph& g) { return graph_json_value(g).dump(2); }

std::string graph_action_to_json(const graph_action& a) {
  return graph_action_json_value(a).dump(2);
}

std::string selfsim_to_json(const selfsim_automaton& a) {
  json j;
  j["graph"] = graph_json_value(a.graph);
  json gens = json::array();
  for (Id g = 0; g < a.n_generators(); ++g) {
    json jg;
    jg["name"] = a.gen_name(g);
    jg["src"] = a.gen_src[g];
    jg["rng"] = a.gen_rng[g];
    gens.push_back(std::move(jg));
  }
  j["generators"] = std::move(gens);
  json trans = json::array();
  for (Id g = 0; g < a.n_generators(); ++g)
    for (Id e = 0; e < a.graph.n_edges(); ++e) {
      if (a.out_edge[g][e] == undef) continue;
      json t;
      t["gen"] = a.gen_name(g);
      t["edge"] = e;
      t["out"] = a.out_edge[g][e];
      json letters = json::array();
      for (int l : a.restriction[g][e].letters)
        letters.push_back(l > 0 ? a.gen_name(l - 1) : "~" + a.gen_name(-l - 1));
      t["restriction"] = std::move(letters);
      trans.push_back(std::move(t));
    }
  j["transitions"] = std::move(trans);
  return j.dump(2);
}

std::string report_to_json(const validation_report& r) {
  json j;
  j["ok"] = r.ok();
  json vs = json::array();
  for (const violation& v : r.violations) {
    json jv;
    jv["rule"] = v.rule;
    jv["witness"] = v.witness;
    jv["detail"] = v.detail;
    vs.push_back(std::move(jv));
  }
  j["violations"] = std::move(vs);
  return j.dump(2);
}

std::string quotient_report_to_json(const quotient_graph_report& r) {
  json j;
  json points = json::array();
  for (const spectrum_point& p : r.points) {
    json jp;
    jp["orbit"] = p.orbit;
    jp["basepoint"] = p.basepoint;
    jp["irrep"] = p.irrep;
    jp["degree"] = p.degree;
    jp["block_size"] = p.block_size;
    points.push_back(std::move(jp));
  }
  j["points"] = std::move(points);
  j["adjacency"] = r.adjacency;
  j["flags"] = {{"locally_finite", r.locally_finite},
                {"no_sources", r.no_sources},
                {"quotient_no_sources", r.quotient_no_sources}};
  j["provenance"] = r.provenance;
  return j.dump(2);
}

std::string bratteli_to_json(const bratteli_diagram& d) {
  json j;
  json levels = json::array();
  for (const bratteli_level& l : d.levels) {
    json jl;
    jl["labels"] = l.labels;
    jl["dims"] = l.dims;
    levels.push_back(std::move(jl));
  }
  j["levels"] = std::move(levels);
  j["edges"] = d.edges;
  return j.dump(2);
}

std::string kappa_to_json(const kappa_check_result& r) {
  json j;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["ok"] = r.ok;
  return j.dump(2);
}

std::string invariants_to_json(const abelian_invariants& g) {
  json j;
  j["rank"] = g.rank;
  json torsion = json::array();
  for (const bigint& d : g.torsion) torsion.push_back(d.str());
  j["torsion"] = std::move(torsion);
  j["pretty"] = invariants_to_string(g);
  return j.dump(2);
}

std::string ktheory_to_json(const graph_k_theory_result& r) {
  json j;
  j["k0"] = json::parse(invariants_to_json(r.k0));
  j["k1"] = json::parse(invariants_to_json(r.k1));
  return j.dump(2);
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace orbigraph
