#include "orbigraph/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "orbigraph/blocks.hpp"
#include "orbigraph/correspondence.hpp"

namespace orbigraph {

namespace {

struct orbit_ctx {
  std::vector<std::vector<Id>> vorbits;
  std::vector<Id> orbit_of;                 // vertex -> orbit index
  std::vector<isotropy_group> stabs;        // per orbit, at the basepoint
  std::vector<const character_table*> tables;
};

orbit_ctx make_orbit_ctx(const graph_action& a) {
  orbit_ctx ctx;
  const space_action va = a.vertex_action();
  ctx.vorbits = orbits(va);
  ctx.orbit_of.assign(a.graph.n_vertices, undef);
  for (Id o = 0; o < static_cast<Id>(ctx.vorbits.size()); ++o)
    for (Id v : ctx.vorbits[o]) ctx.orbit_of[v] = o;
  for (const auto& orb : ctx.vorbits) {
    ctx.stabs.push_back(stabilizer(va, orb.front()));
    ctx.tables.push_back(&get_character_table(ctx.stabs.back().group));
  }
  return ctx;
}

// Smallest arrow carrying x to y (same anchor fibre assumed reachable).
Id transport_arrow(const graph_action& a, Id x, Id y) {
  for (Id g = 0; g < a.gpd.n_arrows(); ++g)
    if (a.gpd.src[g] == a.vertex_anchor[x] && a.vertex_act[g][x] == y) return g;
  throw internal_consistency_error("transport_arrow: points not in one orbit");
}

}  // namespace

std::vector<spectrum_point> spectrum(const graph_action& a) {
  const orbit_ctx ctx = make_orbit_ctx(a);
  std::vector<spectrum_point> out;
  for (int o = 0; o < static_cast<int>(ctx.vorbits.size()); ++o) {
    const auto& table = *ctx.tables[o];
    for (int r = 0; r < table.n_irreps(); ++r) {
      spectrum_point p;
      p.orbit = o;
      p.basepoint = ctx.vorbits[o].front();
      p.irrep = r;
      p.degree = table.degrees[r];
      p.block_size = static_cast<long>(ctx.vorbits[o].size()) * table.degrees[r];
      out.push_back(p);
    }
  }
  return out;
}

std::vector<edge_orbit_datum> edge_orbit_data(const graph_action& a) {
  const orbit_ctx ctx = make_orbit_ctx(a);
  const space_action ea = a.edge_action();
  std::vector<edge_orbit_datum> out;

  for (const auto& eorb : orbits(ea)) {
    edge_orbit_datum d;
    const Id e0 = eorb.front();
    d.range_orbit = ctx.orbit_of[a.graph.erng[e0]];
    d.source_orbit = ctx.orbit_of[a.graph.esrc[e0]];
    const Id v_base = ctx.vorbits[d.range_orbit].front();

    // Normalize the representative so its range is the orbit basepoint.
    const Id g1 = transport_arrow(a, a.graph.erng[e0], v_base);
    d.rep_edge = a.edge_act[g1][e0];
    if (d.rep_edge == undef)
      throw internal_consistency_error("edge_orbit_data: normalization moved out of the action");

    const isotropy_group& krange = ctx.stabs[d.range_orbit];
    const isotropy_group& ksource = ctx.stabs[d.source_orbit];
    const Id w = a.graph.esrc[d.rep_edge];
    const Id w_base = ctx.vorbits[d.source_orbit].front();
    const Id g2 = transport_arrow(a, w_base, w);

    for (Id k = 0; k < krange.group.order(); ++k) {
      const Id c_arrow = krange.arrow_of[k];
      if (a.edge_act[c_arrow][d.rep_edge] != d.rep_edge) continue;
      d.stab_elements.push_back(k);
      // phi(c) = g2^-1 c g2 lands in the stabilizer of the source basepoint.
      const Id conj = a.gpd.compose(a.gpd.inv[g2], a.gpd.compose(c_arrow, g2));
      const Id ks = ksource.element_of_arrow(a.gpd, conj);
      if (ks == undef || a.vertex_act[conj][w_base] != w_base)
        throw internal_consistency_error("edge_orbit_data: phi left the source stabilizer");
      d.phi.push_back(ks);
    }

    // phi must be an injective homomorphism on the edge stabilizer.
    const Id m = static_cast<Id>(d.stab_elements.size());
    for (Id i = 0; i < m; ++i)
      for (Id j = 0; j < m; ++j) {
        const Id prod = krange.group.mul[d.stab_elements[i]][d.stab_elements[j]];
        const Id pos = static_cast<Id>(std::find(d.stab_elements.begin(), d.stab_elements.end(), prod) -
                                       d.stab_elements.begin());
        if (pos == m) throw internal_consistency_error("edge_orbit_data: stabilizer not closed");
        if (ksource.group.mul[d.phi[i]][d.phi[j]] != d.phi[pos])
          throw internal_consistency_error("edge_orbit_data: phi is not a homomorphism");
        if (i != j && d.phi[i] == d.phi[j])
          throw internal_consistency_error("edge_orbit_data: phi is not injective");
      }
    out.push_back(std::move(d));
  }
  return out;
}

int_matrix character_adjacency(const graph_action& a) {
  const orbit_ctx ctx = make_orbit_ctx(a);
  const auto points = spectrum(a);
  const int np = static_cast<int>(points.size());

  // Offsets of each orbit's irreps in the point list.
  std::vector<int> offset(ctx.vorbits.size(), 0);
  for (int i = 0; i < np; ++i)
    if (points[i].irrep == 0) offset[points[i].orbit] = i;

  std::vector<std::vector<double>> acc(np, std::vector<double>(np, 0.0));
  for (const auto& d : edge_orbit_data(a)) {
    const character_table& tr = *ctx.tables[d.range_orbit];
    const character_table& ts = *ctx.tables[d.source_orbit];
    const double stab_order = static_cast<double>(d.stab_elements.size());
    for (int pi = 0; pi < tr.n_irreps(); ++pi)
      for (int sg = 0; sg < ts.n_irreps(); ++sg) {
        cplx s = 0;
        for (std::size_t idx = 0; idx < d.stab_elements.size(); ++idx)
          s += std::conj(tr.value(pi, d.stab_elements[idx])) * ts.value(sg, d.phi[idx]);
        s /= stab_order;
        if (std::abs(s.imag()) > 1e-6)
          throw internal_consistency_error("character_adjacency: non-real multiplicity");
        acc[offset[d.range_orbit] + pi][offset[d.source_orbit] + sg] += s.real();
      }
  }

  int_matrix out(np, std::vector<long long>(np, 0));
  for (int x = 0; x < np; ++x)
    for (int y = 0; y < np; ++y) {
      const long long v = std::llround(acc[x][y]);
      if (std::abs(acc[x][y] - static_cast<double>(v)) > 1e-6 || v < 0)
        throw internal_consistency_error("character_adjacency: entry not a non-negative integer");
      out[x][y] = v;
    }
  return out;
}

int_matrix oracle_adjacency(const graph_action& a) {
  const orbit_ctx ctx = make_orbit_ctx(a);
  const auto points = spectrum(a);
  const int np = static_cast<int>(points.size());
  const auto cc = correspondence_crossed_product(a);
  const fd_star_algebra& alg = cc.coeff.alg;
  const action_groupoid_result& ag = cc.coeff.ag;

  // Explicit projection of each spectrum point from the character formula:
  // q = (deg/|K|) sum_{x in O} sum_{c in Stab(x)} conj(chi(t_x^-1 c t_x))
  // delta_{(c, x)}.
  std::vector<algebra_element> explicit_q(np, algebra_element(alg.dim, 0.0));
  for (int ip = 0; ip < np; ++ip) {
    const auto& pt = points[ip];
    const character_table& table = *ctx.tables[pt.orbit];
    const isotropy_group& stab = ctx.stabs[pt.orbit];
    const double korder = static_cast<double>(stab.group.order());
    for (Id x : ctx.vorbits[pt.orbit]) {
      const Id tx = transport_arrow(a, pt.basepoint, x);
      for (Id g = 0; g < a.gpd.n_arrows(); ++g) {
        if (a.gpd.src[g] != a.vertex_anchor[x] || a.vertex_act[g][x] != x) continue;
        const Id back = a.gpd.compose(a.gpd.inv[tx], a.gpd.compose(g, tx));
        const Id k = stab.element_of_arrow(a.gpd, back);
        if (k == undef)
          throw internal_consistency_error("oracle_adjacency: conjugated stabilizer mismatch");
        const Id basis = ag.pair_id[g][x];
        explicit_q[ip][basis] +=
            static_cast<double>(pt.degree) / korder * std::conj(table.value(pt.irrep, k));
      }
    }
  }

  // Certify the explicit family (idempotent, self-adjoint, orthogonal,
  // total equal to the unit).
  for (int i = 0; i < np; ++i) {
    if (alg_dist(alg_mul(alg, explicit_q[i], explicit_q[i]), explicit_q[i]) > 1e-8)
      throw internal_consistency_error("oracle_adjacency: explicit projection not idempotent");
    if (alg_dist(alg_star(alg, explicit_q[i]), explicit_q[i]) > 1e-8)
      throw internal_consistency_error("oracle_adjacency: explicit projection not self-adjoint");
    for (int j = i + 1; j < np; ++j)
      if (alg_dist(alg_mul(alg, explicit_q[i], explicit_q[j]), alg_zero(alg)) > 1e-8)
        throw internal_consistency_error("oracle_adjacency: explicit projections not orthogonal");
  }
  {
    algebra_element total = alg_zero(alg);
    for (const auto& q : explicit_q)
      for (Id i = 0; i < alg.dim; ++i) total[i] += q[i];
    if (alg_dist(total, alg_unit(alg)) > 1e-8)
      throw internal_consistency_error("oracle_adjacency: explicit projections do not sum to 1");
  }

  // Independent generic route, then match blocks to spectrum points.
  const block_decomposition blocks = minimal_central_projections(alg);
  if (static_cast<int>(blocks.blocks.size()) != np)
    throw internal_consistency_error("oracle_adjacency: block count differs from spectrum size");
  std::vector<int> block_of(np, -1);
  std::vector<bool> used(np, false);
  for (int i = 0; i < np; ++i) {
    for (int b = 0; b < np; ++b) {
      if (used[b]) continue;
      if (alg_dist(blocks.blocks[b].projection, explicit_q[i]) < 1e-6) {
        block_of[i] = b;
        used[b] = true;
        break;
      }
    }
    if (block_of[i] < 0)
      throw internal_consistency_error("oracle_adjacency: no central block matches a spectrum point");
    if (blocks.blocks[block_of[i]].size != points[i].block_size)
      throw internal_consistency_error("oracle_adjacency: block size disagrees with orbit x degree");
  }

  const corner_context ctx_corner = make_corner_context(cc.mod, alg);
  int_matrix out(np, std::vector<long long>(np, 0));
  for (int x = 0; x < np; ++x)
    for (int y = 0; y < np; ++y) {
      const long d = corner_dimension(ctx_corner, blocks.blocks[block_of[x]].projection,
                                      blocks.blocks[block_of[y]].projection);
      const long long nx = points[x].block_size, ny = points[y].block_size;
      if (d % (nx * ny) != 0)
        throw internal_consistency_error("oracle_adjacency: corner dimension not divisible");
      out[x][y] = d / (nx * ny);
    }
  return out;
}

quotient_graph_report quotient_graph(const graph_action& a, quotient_mode mode) {
  quotient_graph_report rep;
  rep.points = spectrum(a);
  const graph_action_flags f = action_flags(a);
  rep.no_sources = f.no_sources;
  rep.locally_finite = f.locally_finite;

  switch (mode) {
    case quotient_mode::fast:
      rep.adjacency = character_adjacency(a);
      rep.provenance = "fast";
      break;
    case quotient_mode::oracle:
      rep.adjacency = oracle_adjacency(a);
      rep.provenance = "oracle";
      break;
    case quotient_mode::both: {
      const int_matrix fast = character_adjacency(a);
      const int_matrix oracle = oracle_adjacency(a);
      if (fast != oracle) {
        std::ostringstream os;
        os << "quotient_graph: fast and oracle adjacency disagree at";
        for (std::size_t x = 0; x < fast.size(); ++x)
          for (std::size_t y = 0; y < fast.size(); ++y)
            if (fast[x][y] != oracle[x][y])
              os << " (" << x << "," << y << "): " << fast[x][y] << " vs " << oracle[x][y];
        throw internal_consistency_error(os.str());
      }
      rep.adjacency = fast;
      rep.provenance = "both-agree";
      break;
    }
  }
  rep.quotient_no_sources = true;
  for (std::size_t x = 0; x < rep.adjacency.size(); ++x) {
    long long row = 0;
    for (long long v : rep.adjacency[x]) row += v;
    if (row == 0) rep.quotient_no_sources = false;
  }
  return rep;
}

std::string quotient_to_dot(const quotient_graph_report& r, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << (name.empty() ? "quotient" : name) << " {\n";
  for (std::size_t i = 0; i < r.points.size(); ++i)
    os << "  n" << i << " [label=\"orbit" << r.points[i].orbit << ".irrep" << r.points[i].irrep
       << " n=" << r.points[i].block_size << "\"];\n";
  for (std::size_t x = 0; x < r.adjacency.size(); ++x)
    for (std::size_t y = 0; y < r.adjacency[x].size(); ++y)
      if (r.adjacency[x][y] != 0)
        os << "  n" << y << " -> n" << x << " [label=\"" << r.adjacency[x][y] << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace orbigraph
