#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "orbigraph/correspondence.hpp"
#include "orbigraph/dr.hpp"
#include "orbigraph/fixtures.hpp"
#include "orbigraph/json_io.hpp"
#include "orbigraph/selfsim.hpp"
#include "orbigraph/snf.hpp"
#include "orbigraph/spectrum.hpp"

namespace {

using nlohmann::json;
using namespace orbigraph;

constexpr const char* kVersion = "0.1.0";

struct input_source {
  std::string path, fixture, text;

  json manifest() const {
    json j;
    if (!fixture.empty()) {
      j["fixture"] = fixture;
    } else {
      j["path"] = path;
      j["digest"] = fnv1a_hex(text);
    }
    return j;
  }
};

input_source load_source(const std::string& path, const std::string& fixture) {
  input_source src;
  if (!fixture.empty()) {
    const auto names = fixture_names();
    if (std::find(names.begin(), names.end(), fixture) == names.end()) {
      std::string known;
      for (const auto& n : names) known += (known.empty() ? "" : ", ") + n;
      throw malformed_input_error("unknown fixture '" + fixture + "' (known: " + known + ")");
    }
    src.fixture = fixture;
    return src;
  }
  if (path.empty()) throw malformed_input_error("an --input file or --fixture name is required");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw malformed_input_error("cannot read input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  src.path = path;
  src.text = ss.str();
  return src;
}

graph_action load_graph_action(const input_source& s) {
  if (!s.fixture.empty()) {
    if (fixture_is_selfsim(s.fixture))
      throw precondition_error("fixture '" + s.fixture +
                               "' is an automaton; this command needs a graph action");
    return fixture_graph_action(s.fixture);
  }
  return parse_graph_action_json(s.text);
}

selfsim_automaton load_selfsim(const input_source& s) {
  if (!s.fixture.empty()) {
    if (!fixture_is_selfsim(s.fixture))
      throw precondition_error("fixture '" + s.fixture +
                               "' is a graph action; this command needs an automaton");
    return fixture_selfsim(s.fixture);
  }
  return parse_selfsim_json(s.text);
}

graph_action checked_graph_action(const input_source& s) {
  graph_action a = load_graph_action(s);
  validate_graph_action(a).require_ok("graph action");
  return a;
}

selfsim_automaton checked_selfsim(const input_source& s) {
  selfsim_automaton a = load_selfsim(s);
  validate_selfsim(a).require_ok("automaton");
  return a;
}

void emit(const std::string& command, const input_source& src, json flags, json outputs) {
  json m;
  m["command"] = command;
  m["inputs"] = src.manifest();
  m["flags"] = std::move(flags);
  m["tool_version"] = kVersion;
  m["outputs"] = std::move(outputs);
  std::cout << m.dump(2) << "\n";
}

quotient_mode mode_of(const std::string& s) {
  if (s == "fast") return quotient_mode::fast;
  if (s == "oracle") return quotient_mode::oracle;
  return quotient_mode::both;
}

std::vector<std::string> split_tokens(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    const auto b = cur.find_first_not_of(" \t");
    if (b == std::string::npos) {
      if (!cur.empty()) throw malformed_input_error("empty token in '" + s + "'");
      return;
    }
    const auto e = cur.find_last_not_of(" \t");
    out.push_back(cur.substr(b, e - b + 1));
  };
  for (char c : s) {
    if (c == ',') {
      flush();
      cur.clear();
    } else {
      cur += c;
    }
  }
  flush();
  return out;
}

Id resolve_in(const std::vector<std::string>& names, Id bound, const std::string& token,
              const char* what) {
  for (Id i = 0; i < static_cast<Id>(names.size()); ++i)
    if (names[i] == token) return i;
  try {
    const long v = std::stol(token);
    if (v >= 0 && v < bound) return static_cast<Id>(v);
  } catch (...) {
  }
  throw malformed_input_error(std::string("unknown ") + what + ": " + token);
}

Id resolve_vertex_token(const directed_graph& g, const std::string& token) {
  return resolve_in(g.vertex_names, g.n_vertices, token, "vertex");
}

// Word syntax: "@vertex" for a unit word, else comma separated letters,
// each a generator name, ~name for the inverse, or a signed integer.
gen_word parse_word_arg(const selfsim_automaton& a, const std::string& s) {
  if (!s.empty() && s.front() == '@')
    return unit_word(a, resolve_vertex_token(a.graph, s.substr(1)));
  const auto tokens = split_tokens(s);
  if (tokens.empty()) throw malformed_input_error("empty word (use @vertex for a unit word)");
  std::vector<int> letters;
  for (const std::string& t : tokens) {
    bool inverse = false;
    std::string body = t;
    if (body.front() == '~') {
      inverse = true;
      body.erase(body.begin());
    }
    bool named = false;
    for (Id g = 0; g < a.n_generators(); ++g)
      if (a.gen_name(g) == body) {
        letters.push_back(inverse ? -(g + 1) : g + 1);
        named = true;
        break;
      }
    if (named) continue;
    try {
      const int v = std::stoi(t);
      if (v != 0 && std::abs(v) <= a.n_generators()) {
        letters.push_back(v);
        continue;
      }
    } catch (...) {
    }
    throw malformed_input_error("unknown generator letter: " + t);
  }
  // Letters read left to right, rightmost acting first.
  gen_word w;
  w.letters = letters;
  Id at = undef;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    const Id g = std::abs(*it) - 1;
    const Id ls = *it > 0 ? a.gen_src[g] : a.gen_rng[g];
    const Id lr = *it > 0 ? a.gen_rng[g] : a.gen_src[g];
    if (at == undef) w.src = ls;
    else if (ls != at)
      throw malformed_input_error("letters not composable at '" + s + "'");
    at = lr;
  }
  w.rng = at;
  return w;
}

// Path syntax: "@vertex" for the empty path, else comma separated edges
// listed range to source.
graph_path parse_path_arg(const directed_graph& g, const std::string& s) {
  if (!s.empty() && s.front() == '@')
    return graph_path{resolve_vertex_token(g, s.substr(1)), {}};
  const auto tokens = split_tokens(s);
  if (tokens.empty()) throw malformed_input_error("empty path (use @vertex for an empty path)");
  graph_path p;
  for (const std::string& t : tokens)
    p.edges.push_back(resolve_in(g.edge_names, g.n_edges(), t, "edge"));
  p.range_vertex = g.erng[p.edges.front()];
  if (!path_ok(g, p)) throw malformed_input_error("edges do not chain into a path: " + s);
  return p;
}

json path_json(const directed_graph& g, const graph_path& p) {
  json j;
  j["range"] = g.vertex_name(p.range_vertex);
  json edges = json::array();
  std::string label;
  for (Id e : p.edges) {
    edges.push_back(g.edge_name(e));
    label += g.edge_name(e);
  }
  j["edges"] = std::move(edges);
  j["label"] = p.edges.empty() ? "@" + g.vertex_name(p.range_vertex) : label;
  return j;
}

json word_json(const selfsim_automaton& a, const gen_word& w) {
  json j;
  j["src"] = a.graph.vertex_name(w.src);
  j["rng"] = a.graph.vertex_name(w.rng);
  json letters = json::array();
  std::string label;
  for (int l : w.letters) {
    const std::string t = l > 0 ? a.gen_name(l - 1) : "~" + a.gen_name(-l - 1);
    letters.push_back(t);
    label += (label.empty() ? "" : ",") + t;
  }
  j["letters"] = std::move(letters);
  j["label"] = w.letters.empty() ? "@" + a.graph.vertex_name(w.src) : label;
  return j;
}

void warn_fiber_sources(const graph_action& a, Id basepoint) {
  const fiber_graph_result f = fiber_graph(a, a.vertex_anchor[basepoint]);
  if (has_sources(f.graph))
    std::cerr << "warning: the fibre has sources; dimension monotonicity along the diagonal"
                 " is not guaranteed\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite groupoid actions on graphs: validation, spectra, quotient graphs,"
               " intertwiner dimensions, K-theory"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("orbigraph ") + kVersion);

  std::string input_path, fixture;
  app.add_option("--input", input_path, "JSON input file");
  app.add_option("--fixture", fixture, "built-in example input (example-4.3, example-4.6)")
      ->excludes("--input");

  auto* cmd_validate = app.add_subcommand("validate", "check the axioms of an input object");
  std::string validate_type;
  cmd_validate->add_option("--type", validate_type, "object kind")
      ->required()
      ->check(CLI::IsMember({"groupoid", "graph-action", "automaton"}));

  auto* cmd_orbits = app.add_subcommand("orbits", "vertex and edge orbits of a graph action");

  auto* cmd_spectrum =
      app.add_subcommand("spectrum", "irreducible summands of the vertex crossed product");

  auto* cmd_quotient = app.add_subcommand("quotient-graph", "spectrum points with multiplicities");
  std::string quotient_mode_str = "both";
  cmd_quotient->add_option("--mode", quotient_mode_str, "adjacency route")
      ->check(CLI::IsMember({"fast", "oracle", "both"}));

  auto* cmd_kappa =
      app.add_subcommand("kappa-check", "compact-operator dimension bookkeeping identity");

  auto* cmd_drdims = app.add_subcommand("dr-dims", "intertwiner dimension table at a vertex");
  int dr_depth = 3;
  std::string dr_basepoint = "0";
  cmd_drdims->add_option("--depth", dr_depth, "largest tensor power")->check(CLI::Range(0, 8));
  cmd_drdims->add_option("--basepoint", dr_basepoint, "vertex (name or id)");

  auto* cmd_bratteli = app.add_subcommand("dr-bratteli", "core AF structure as a Bratteli diagram");
  int bratteli_levels = 4;
  std::string bratteli_source = "quotient-graph";
  std::string bratteli_mode = "both";
  std::string bratteli_basepoint = "0";
  cmd_bratteli->add_option("--levels", bratteli_levels, "number of levels")
      ->check(CLI::Range(0, 64));
  cmd_bratteli->add_option("--source", bratteli_source, "construction route")
      ->check(CLI::IsMember({"quotient-graph", "dr-fiber"}));
  cmd_bratteli->add_option("--mode", bratteli_mode, "quotient adjacency route")
      ->check(CLI::IsMember({"fast", "oracle", "both"}));
  cmd_bratteli->add_option("--basepoint", bratteli_basepoint, "vertex for dr-fiber (name or id)");

  auto* cmd_ktheory = app.add_subcommand("ktheory", "K-theory of the quotient graph algebra");
  std::string ktheory_mode = "both";
  bool ktheory_as_graph = false;
  cmd_ktheory->add_option("--mode", ktheory_mode, "quotient adjacency route")
      ->check(CLI::IsMember({"fast", "oracle", "both"}));
  cmd_ktheory->add_flag("--as-graph", ktheory_as_graph,
                        "treat the input as a bare graph under the trivial action");

  auto* cmd_dot = app.add_subcommand("export-dot", "raw DOT to stdout");
  std::string dot_what;
  int dot_levels = 4, dot_depth = 2;
  std::string dot_source = "quotient-graph", dot_basepoint = "0";
  cmd_dot->add_option("--what", dot_what, "object to draw")
      ->required()
      ->check(CLI::IsMember({"graph", "quotient", "bratteli", "forest"}));
  cmd_dot->add_option("--levels", dot_levels, "bratteli levels")->check(CLI::Range(0, 64));
  cmd_dot->add_option("--depth", dot_depth, "forest depth")->check(CLI::Range(0, 12));
  cmd_dot->add_option("--source", dot_source, "bratteli route")
      ->check(CLI::IsMember({"quotient-graph", "dr-fiber"}));
  cmd_dot->add_option("--basepoint", dot_basepoint, "vertex for dr-fiber");

  auto* cmd_selfsim = app.add_subcommand("selfsim", "self-similar automaton operations");
  cmd_selfsim->require_subcommand(1);
  cmd_selfsim->fallthrough();
  auto* ss_act = cmd_selfsim->add_subcommand("act", "apply a word to a path");
  std::string ss_word, ss_path;
  ss_act->add_option("--word", ss_word, "word (letters left to right, e.g. g,~h or @v)")
      ->required();
  ss_act->add_option("--path", ss_path, "path (edges range to source, e.g. a,d or @v)")
      ->required();
  auto* ss_orbit = cmd_selfsim->add_subcommand("orbit", "orbit of a path under the generators");
  std::string ss_orbit_path;
  int ss_word_bound = 0;
  ss_orbit->add_option("--path", ss_orbit_path, "starting path")->required();
  ss_orbit->add_option("--word-bound", ss_word_bound, "letter count bound, 0 = saturate")
      ->check(CLI::Range(0, 64));
  auto* ss_equiv = cmd_selfsim->add_subcommand("equiv", "compare two words on all short paths");
  std::string ss_w1, ss_w2;
  int ss_depth = 4;
  ss_equiv->add_option("--word", ss_w1, "first word")->required();
  ss_equiv->add_option("--word2", ss_w2, "second word")->required();
  ss_equiv->add_option("--depth", ss_depth, "path length bound")->check(CLI::Range(0, 12));
  auto* ss_forest = cmd_selfsim->add_subcommand("forest", "induced action on the path forest");
  int ss_forest_depth = 2;
  ss_forest->add_option("--depth", ss_forest_depth, "forest depth")->check(CLI::Range(0, 8));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 4;
  }

  try {
    const input_source src = load_source(input_path, fixture);

    if (app.got_subcommand(cmd_validate)) {
      validation_report rep;
      if (validate_type == "groupoid") {
        const finite_groupoid g =
            src.fixture.empty() ? parse_groupoid_json(src.text)
            : fixture_is_selfsim(src.fixture)
                ? throw precondition_error("automaton fixtures carry no groupoid")
                : fixture_graph_action(src.fixture).gpd;
        rep = validate_groupoid(g);
      } else if (validate_type == "graph-action") {
        rep = validate_graph_action(load_graph_action(src));
      } else {
        rep = validate_selfsim(load_selfsim(src));
      }
      emit("validate", src, json{{"type", validate_type}}, json::parse(report_to_json(rep)));
      if (!rep.ok()) {
        std::cerr << "invalid: " << rep.violations.size() << " violation(s), first rule '"
                  << rep.violations.front().rule << "'\n";
        return 2;
      }
      std::cerr << "valid " << validate_type << "\n";
      return 0;
    }

    if (app.got_subcommand(cmd_orbits)) {
      const graph_action a = checked_graph_action(src);
      json out;
      out["vertex_orbits"] = orbits(a.vertex_action());
      out["edge_orbits"] = orbits(a.edge_action());
      emit("orbits", src, json::object(), out);
      std::cerr << out["vertex_orbits"].size() << " vertex orbit(s), " << out["edge_orbits"].size()
                << " edge orbit(s)\n";
      return 0;
    }

    if (app.got_subcommand(cmd_spectrum)) {
      const graph_action a = checked_graph_action(src);
      const auto points = spectrum(a);
      json jp = json::array();
      std::string sizes;
      for (const spectrum_point& p : points) {
        jp.push_back(json{{"orbit", p.orbit},
                          {"basepoint", p.basepoint},
                          {"irrep", p.irrep},
                          {"degree", p.degree},
                          {"block_size", p.block_size}});
        sizes += (sizes.empty() ? "" : " ") + std::to_string(p.block_size);
      }
      emit("spectrum", src, json::object(), json{{"points", std::move(jp)}});
      std::cerr << points.size() << " point(s), block sizes " << sizes << "\n";
      return 0;
    }

    if (app.got_subcommand(cmd_quotient)) {
      const graph_action a = checked_graph_action(src);
      const quotient_graph_report r = quotient_graph(a, mode_of(quotient_mode_str));
      emit("quotient-graph", src, json{{"mode", quotient_mode_str}},
           json::parse(quotient_report_to_json(r)));
      std::cerr << r.points.size() << " point(s), adjacency via " << r.provenance << "\n";
      return 0;
    }

    if (app.got_subcommand(cmd_kappa)) {
      const graph_action a = checked_graph_action(src);
      const kappa_check_result r = kappa_dimension_check(a);
      emit("kappa-check", src, json::object(), json::parse(kappa_to_json(r)));
      std::cerr << "kappa check: " << r.lhs << (r.ok ? " == " : " != ") << r.rhs << "\n";
      if (!r.ok) {
        std::cerr << "internal check failed: compact-operator dimension identity\n";
        return 3;
      }
      return 0;
    }

    if (app.got_subcommand(cmd_drdims)) {
      const graph_action a = checked_graph_action(src);
      const Id v = resolve_vertex_token(a.graph, dr_basepoint);
      warn_fiber_sources(a, v);
      const auto table = dr_dimension_table(a, v, dr_depth);
      json out;
      out["basepoint"] = v;
      out["depth"] = dr_depth;
      out["table"] = table;
      emit("dr-dims", src, json{{"basepoint", dr_basepoint}, {"depth", dr_depth}}, out);
      std::string diag;
      for (int i = 0; i <= dr_depth; ++i)
        diag += (diag.empty() ? "" : " ") + std::to_string(table[i][i]);
      std::cerr << "diagonal " << diag << "\n";
      return 0;
    }

    if (app.got_subcommand(cmd_bratteli)) {
      const graph_action a = checked_graph_action(src);
      bratteli_diagram d;
      json flags{{"levels", bratteli_levels}, {"source", bratteli_source}};
      if (bratteli_source == "quotient-graph") {
        const quotient_graph_report r = quotient_graph(a, mode_of(bratteli_mode));
        if (!r.quotient_no_sources)
          std::cerr << "warning: the quotient graph has sources; AF dims can vanish\n";
        d = core_bratteli(r, bratteli_levels);
        flags["mode"] = bratteli_mode;
      } else {
        const Id v = resolve_vertex_token(a.graph, bratteli_basepoint);
        warn_fiber_sources(a, v);
        d = core_bratteli_dr_fiber(a, v, bratteli_levels);
        flags["basepoint"] = bratteli_basepoint;
      }
      emit("dr-bratteli", src, std::move(flags), json::parse(bratteli_to_json(d)));
      std::cerr << d.levels.size() << " level(s)\n";
      return 0;
    }

    if (app.got_subcommand(cmd_ktheory)) {
      json flags{{"mode", ktheory_mode}, {"as_graph", ktheory_as_graph}};
      int_matrix adjacency;
      if (ktheory_as_graph) {
        if (!src.fixture.empty())
          throw precondition_error("--as-graph needs an --input graph or adjacency matrix");
        const auto body = src.text.find_first_not_of(" \t\r\n");
        if (body != std::string::npos && src.text[body] == '[') {
          // bare adjacency matrix
          json j;
          try {
            j = json::parse(src.text);
          } catch (const json::parse_error& e) {
            throw malformed_input_error(std::string("adjacency: ") + e.what());
          }
          for (const json& row : j) {
            adjacency.emplace_back();
            if (!row.is_array()) throw malformed_input_error("adjacency: row is not an array");
            for (const json& v : row) {
              if (!v.is_number_integer())
                throw malformed_input_error("adjacency: entry is not an integer");
              adjacency.back().push_back(v.get<long long>());
            }
          }
        } else {
          directed_graph g = parse_graph_json(src.text);
          validate_graph(g).require_ok("graph");
          const quotient_graph_report r =
              quotient_graph(trivial_action_on(g), mode_of(ktheory_mode));
          adjacency = r.adjacency;
        }
      } else {
        const graph_action a = checked_graph_action(src);
        adjacency = quotient_graph(a, mode_of(ktheory_mode)).adjacency;
      }
      const graph_k_theory_result k = graph_k_theory(adjacency);
      json out = json::parse(ktheory_to_json(k));
      out["adjacency"] = adjacency;
      emit("ktheory", src, std::move(flags), std::move(out));
      std::cerr << "K0 = " << invariants_to_string(k.k0) << ", K1 = " << invariants_to_string(k.k1)
                << "\n";
      return 0;
    }

    if (app.got_subcommand(cmd_dot)) {
      std::string dot;
      if (dot_what == "graph") {
        if (!src.fixture.empty() && fixture_is_selfsim(src.fixture))
          dot = graph_to_dot(checked_selfsim(src).graph, "base");
        else
          dot = graph_to_dot(checked_graph_action(src).graph, "base");
      } else if (dot_what == "quotient") {
        dot = quotient_to_dot(quotient_graph(checked_graph_action(src), quotient_mode::both),
                              "quotient");
      } else if (dot_what == "bratteli") {
        const graph_action a = checked_graph_action(src);
        bratteli_diagram d;
        if (dot_source == "quotient-graph")
          d = core_bratteli(quotient_graph(a, quotient_mode::both), dot_levels);
        else
          d = core_bratteli_dr_fiber(a, resolve_vertex_token(a.graph, dot_basepoint), dot_levels);
        dot = bratteli_to_dot(d, "bratteli");
      } else {
        const selfsim_automaton a = checked_selfsim(src);
        dot = graph_to_dot(path_forest(a.graph, dot_depth).graph, "forest");
      }
      std::cout << dot;
      std::cerr << "dot for " << dot_what << "\n";
      return 0;
    }

    if (app.got_subcommand(cmd_selfsim)) {
      const selfsim_automaton a = checked_selfsim(src);
      if (cmd_selfsim->got_subcommand(ss_act)) {
        const gen_word w = parse_word_arg(a, ss_word);
        const graph_path p = parse_path_arg(a.graph, ss_path);
        const act_result r = act_word(a, w, p);
        json out;
        out["path"] = path_json(a.graph, r.path);
        out["restriction"] = word_json(a, r.restriction);
        emit("selfsim-act", src, json{{"word", ss_word}, {"path", ss_path}}, out);
        std::cerr << path_json(a.graph, p)["label"].get<std::string>() << " -> "
                  << out["path"]["label"].get<std::string>() << " with restriction "
                  << out["restriction"]["label"].get<std::string>() << "\n";
        return 0;
      }
      if (cmd_selfsim->got_subcommand(ss_orbit)) {
        const graph_path p = parse_path_arg(a.graph, ss_orbit_path);
        const auto orbit = orbit_of_path(a, p, ss_word_bound);
        json out;
        json items = json::array();
        for (const graph_path& q : orbit) items.push_back(path_json(a.graph, q));
        out["orbit"] = std::move(items);
        out["size"] = orbit.size();
        emit("selfsim-orbit", src, json{{"path", ss_orbit_path}, {"word_bound", ss_word_bound}},
             out);
        std::cerr << "orbit size " << orbit.size() << "\n";
        return 0;
      }
      if (cmd_selfsim->got_subcommand(ss_equiv)) {
        const gen_word w1 = parse_word_arg(a, ss_w1);
        const gen_word w2 = parse_word_arg(a, ss_w2);
        const equivalence_result r = depth_bounded_equivalence(a, w1, w2, ss_depth);
        json out;
        out["equal"] = r.equal;
        out["depth"] = r.depth;
        if (r.witness) out["witness"] = path_json(a.graph, *r.witness);
        emit("selfsim-equiv", src,
             json{{"word", ss_w1}, {"word2", ss_w2}, {"depth", ss_depth}}, out);
        if (r.equal)
          std::cerr << "words agree on all paths of length <= " << ss_depth << "\n";
        else
          std::cerr << "words differ at "
                    << path_json(a.graph, *r.witness)["label"].get<std::string>() << "\n";
        return 0;
      }
      // forest
      const graph_action induced = induced_forest_action(a, ss_forest_depth);
      validate_graph_action(induced).require_ok("induced forest action");
      json out = json::parse(graph_action_to_json(induced));
      out["n_arrows"] = induced.gpd.n_arrows();
      emit("selfsim-forest", src, json{{"depth", ss_forest_depth}}, out);
      std::cerr << induced.graph.n_vertices << " forest vertices, " << induced.gpd.n_arrows()
                << " induced arrows\n";
      return 0;
    }

    throw precondition_error("no subcommand dispatched");
  } catch (const malformed_input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 4;
  } catch (const internal_consistency_error& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return 3;
  } catch (const precondition_error& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
