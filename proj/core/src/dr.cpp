#include "orbigraph/dr.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <sstream>

#include "orbigraph/character.hpp"

namespace orbigraph {

namespace {

using bigint_t = boost::multiprecision::cpp_int;

// Exact rank over the rationals by fraction-free elimination.
long exact_rank(std::vector<std::vector<bigint_t>> m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  long rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t piv = row;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[row], m[piv]);
    for (std::size_t r = row + 1; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      const bigint_t f1 = m[row][col], f2 = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] = m[r][c] * f1 - m[row][c] * f2;
    }
    ++row;
    ++rank;
  }
  return rank;
}

struct fiber_paths {
  directed_graph fiber;                  // local copy of the fibre
  std::vector<Id> vertex_of, edge_of;    // local -> ambient
  isotropy_group iso;                    // isotropy at the unit
  // act_edge[k][local edge] and act_vertex[k][local vertex]
  std::vector<std::vector<Id>> act_edge, act_vertex;
};

fiber_paths make_fiber_paths(const graph_action& a, Id v) {
  const Id u = a.vertex_anchor[v];
  fiber_paths fp;
  const fiber_graph_result fg = fiber_graph(a, u);
  fp.fiber = fg.graph;
  fp.vertex_of = fg.vertex_of;
  fp.edge_of = fg.edge_of;
  fp.iso = isotropy_at(a.gpd, u);

  std::vector<Id> vlocal(a.graph.n_vertices, undef), elocal(a.graph.n_edges(), undef);
  for (Id i = 0; i < static_cast<Id>(fp.vertex_of.size()); ++i) vlocal[fp.vertex_of[i]] = i;
  for (Id i = 0; i < static_cast<Id>(fp.edge_of.size()); ++i) elocal[fp.edge_of[i]] = i;

  const Id k = fp.iso.group.order();
  fp.act_edge.assign(k, std::vector<Id>(fp.edge_of.size(), undef));
  fp.act_vertex.assign(k, std::vector<Id>(fp.vertex_of.size(), undef));
  for (Id i = 0; i < k; ++i) {
    const Id arrow = fp.iso.arrow_of[i];
    for (Id e = 0; e < static_cast<Id>(fp.edge_of.size()); ++e)
      fp.act_edge[i][e] = elocal[a.edge_act[arrow][fp.edge_of[e]]];
    for (Id x = 0; x < static_cast<Id>(fp.vertex_of.size()); ++x)
      fp.act_vertex[i][x] = vlocal[a.vertex_act[arrow][fp.vertex_of[x]]];
  }
  return fp;
}

std::vector<graph_path> fiber_paths_of_length(const fiber_paths& fp, int len) {
  std::vector<Id> all_vertices(fp.fiber.n_vertices);
  for (Id i = 0; i < fp.fiber.n_vertices; ++i) all_vertices[i] = i;
  std::vector<graph_path> out;
  for (auto& p : paths_up_to(fp.fiber, all_vertices, len))
    if (p.length() == len) out.push_back(std::move(p));
  return out;
}

graph_path act_local(const fiber_paths& fp, Id k, const graph_path& p) {
  graph_path out;
  out.range_vertex = fp.act_vertex[k][p.range_vertex];
  out.edges.reserve(p.edges.size());
  for (Id e : p.edges) out.edges.push_back(fp.act_edge[k][e]);
  return out;
}

}  // namespace

long intertwiner_dimension(const graph_action& a, Id v, int m, int n) {
  if (m < 0 || n < 0) throw precondition_error("intertwiner_dimension: negative power");
  const fiber_paths fp = make_fiber_paths(a, v);
  const auto pm = fiber_paths_of_length(fp, m);
  const auto pn = fiber_paths_of_length(fp, n);
  const Id korder = fp.iso.group.order();

  // Burnside on pairs with common source: for each k, fixed paths grouped by
  // source vertex.
  long long total = 0;
  for (Id k = 0; k < korder; ++k) {
    std::vector<long long> fixed_m(fp.fiber.n_vertices, 0), fixed_n(fp.fiber.n_vertices, 0);
    for (const auto& p : pm)
      if (act_local(fp, k, p) == p) ++fixed_m[path_source(fp.fiber, p)];
    for (const auto& p : pn)
      if (act_local(fp, k, p) == p) ++fixed_n[path_source(fp.fiber, p)];
    for (Id x = 0; x < fp.fiber.n_vertices; ++x) total += fixed_m[x] * fixed_n[x];
  }
  if (total % korder != 0)
    throw internal_consistency_error("intertwiner_dimension: Burnside sum not divisible");
  return static_cast<long>(total / korder);
}

long intertwiner_dimension_rank(const graph_action& a, Id v, int m, int n) {
  const fiber_paths fp = make_fiber_paths(a, v);
  const auto pm = fiber_paths_of_length(fp, m);
  const auto pn = fiber_paths_of_length(fp, n);
  const Id korder = fp.iso.group.order();

  std::vector<std::pair<int, int>> pairs;
  std::map<std::pair<int, int>, int> pair_id;
  for (int i = 0; i < static_cast<int>(pm.size()); ++i)
    for (int j = 0; j < static_cast<int>(pn.size()); ++j)
      if (path_source(fp.fiber, pm[i]) == path_source(fp.fiber, pn[j])) {
        pair_id[{i, j}] = static_cast<int>(pairs.size());
        pairs.emplace_back(i, j);
      }

  auto index_of_path = [](const std::vector<graph_path>& v, const graph_path& p) {
    for (int i = 0; i < static_cast<int>(v.size()); ++i)
      if (v[i] == p) return i;
    return -1;
  };

  // Invariant dimension = #pairs - rank of stacked (P_k - I).
  std::vector<std::vector<bigint_t>> stacked;
  for (Id k = 0; k < korder; ++k) {
    if (k == fp.iso.group.identity) continue;
    for (int pidx = 0; pidx < static_cast<int>(pairs.size()); ++pidx) {
      const auto [i, j] = pairs[pidx];
      const int gi = index_of_path(pm, act_local(fp, k, pm[i]));
      const int gj = index_of_path(pn, act_local(fp, k, pn[j]));
      if (gi < 0 || gj < 0)
        throw internal_consistency_error("intertwiner_dimension_rank: action left the path set");
      const int target = pair_id.at({gi, gj});
      if (target == pidx) continue;
      std::vector<bigint_t> row(pairs.size(), 0);
      row[target] += 1;
      row[pidx] -= 1;
      stacked.push_back(std::move(row));
    }
  }
  return static_cast<long>(pairs.size()) - exact_rank(std::move(stacked));
}

std::vector<std::vector<long>> dr_dimension_table(const graph_action& a, Id v, int depth) {
  if (depth < 0) throw precondition_error("dr_dimension_table: negative depth");
  std::vector<std::vector<long>> d(depth + 1, std::vector<long>(depth + 1, 0));
  for (int m = 0; m <= depth; ++m)
    for (int n = m; n <= depth; ++n) {
      d[m][n] = intertwiner_dimension(a, v, m, n);
      d[n][m] = d[m][n];
    }
  const fiber_paths fp = make_fiber_paths(a, v);
  if (!has_sources(fp.fiber))
    for (int m = 0; m + 1 <= depth; ++m)
      if (d[m][m] > d[m + 1][m + 1])
        throw internal_consistency_error("dr_dimension_table: diagonal decreased without sources");
  return d;
}

bratteli_diagram core_bratteli(const quotient_graph_report& r, int levels) {
  if (levels < 0) throw precondition_error("core_bratteli: negative level count");
  const int n = static_cast<int>(r.points.size());
  bratteli_diagram d;
  std::vector<long long> dims(n, 1);
  for (int lvl = 0; lvl <= levels; ++lvl) {
    bratteli_level l;
    for (int i = 0; i < n; ++i) {
      l.labels.push_back("o" + std::to_string(r.points[i].orbit) + ".r" +
                         std::to_string(r.points[i].irrep));
      l.dims.push_back(dims[i]);
    }
    d.levels.push_back(std::move(l));
    if (lvl == levels) break;
    std::vector<long long> next(n, 0);
    std::vector<std::vector<long long>> step(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        step[i][j] = r.adjacency[j][i];  // adjacency transpose
        next[i] += step[i][j] * dims[j];
        if (next[i] < 0 || next[i] > (1LL << 60))
          throw precondition_error("core_bratteli: dimensions overflow at this depth");
      }
    d.edges.push_back(std::move(step));
    dims = std::move(next);
  }
  return d;
}

bratteli_diagram core_bratteli_dr_fiber(const graph_action& a, Id v, int levels) {
  if (levels < 0) throw precondition_error("core_bratteli: negative level count");
  const fiber_paths fp = make_fiber_paths(a, v);
  if (fp.fiber.n_vertices != 1)
    throw precondition_error("core_bratteli: fibre has more than one vertex, unsupported");
  const character_table& t = get_character_table(fp.iso.group);
  const class_function rho = permutation_character(t, fp.act_edge);
  const int ni = t.n_irreps();

  // M[p'][p] = multiplicity of p' in p (x) rho.
  std::vector<std::vector<long long>> m(ni, std::vector<long long>(ni, 0));
  for (int p = 0; p < ni; ++p) {
    const auto mult = decompose_character(t, tensor_character(t, t.rows[p], rho));
    for (int q = 0; q < ni; ++q) m[q][p] = mult[q];
  }

  bratteli_diagram d;
  std::vector<long long> dims(ni, 0);
  dims[0] = 1;  // trivial representation is row 0
  for (int lvl = 0; lvl <= levels; ++lvl) {
    bratteli_level l;
    std::vector<int> present;
    for (int i = 0; i < ni; ++i)
      if (dims[i] > 0) present.push_back(i);
    for (int i : present) {
      l.labels.push_back("pi" + std::to_string(i) + ".d" + std::to_string(t.degrees[i]));
      l.dims.push_back(dims[i]);
    }
    d.levels.push_back(std::move(l));
    if (lvl == levels) break;
    std::vector<long long> next(ni, 0);
    for (int q = 0; q < ni; ++q)
      for (int p = 0; p < ni; ++p) {
        next[q] += m[q][p] * dims[p];
        if (next[q] < 0 || next[q] > (1LL << 60))
          throw precondition_error("core_bratteli: dimensions overflow at this depth");
      }
    std::vector<int> next_present;
    for (int i = 0; i < ni; ++i)
      if (next[i] > 0) next_present.push_back(i);
    std::vector<std::vector<long long>> step(next_present.size(),
                                             std::vector<long long>(present.size(), 0));
    for (std::size_t qi = 0; qi < next_present.size(); ++qi)
      for (std::size_t pi = 0; pi < present.size(); ++pi)
        step[qi][pi] = m[next_present[qi]][present[pi]];
    d.edges.push_back(std::move(step));
    dims = std::move(next);
  }
  return d;
}

std::string bratteli_to_dot(const bratteli_diagram& d, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << (name.empty() ? "bratteli" : name) << " {\n  rankdir=TB;\n";
  for (std::size_t lvl = 0; lvl < d.levels.size(); ++lvl) {
    os << "  { rank=same;";
    for (std::size_t i = 0; i < d.levels[lvl].dims.size(); ++i)
      os << " L" << lvl << "_" << i;
    os << " }\n";
    for (std::size_t i = 0; i < d.levels[lvl].dims.size(); ++i)
      os << "  L" << lvl << "_" << i << " [label=\"" << d.levels[lvl].labels[i] << ":"
         << d.levels[lvl].dims[i] << "\"];\n";
  }
  for (std::size_t lvl = 0; lvl < d.edges.size(); ++lvl)
    for (std::size_t i = 0; i < d.edges[lvl].size(); ++i)
      for (std::size_t j = 0; j < d.edges[lvl][i].size(); ++j)
        if (d.edges[lvl][i][j] != 0)
          os << "  L" << lvl << "_" << j << " -> L" << lvl + 1 << "_" << i << " [label=\""
             << d.edges[lvl][i][j] << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace orbigraph
