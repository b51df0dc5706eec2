#ifndef ORBIGRAPH_DR_HPP
#define ORBIGRAPH_DR_HPP

#include <string>
#include <vector>

#include "orbigraph/common.hpp"
#include "orbigraph/graph_action.hpp"
#include "orbigraph/spectrum.hpp"

namespace orbigraph {

// dim of the space of intertwiners between tensor powers m and n of the
// fibre correspondence at unit p(v): isotropy-invariant pairs of fibre paths
// with common source, counted by Burnside's lemma over the isotropy group.
long intertwiner_dimension(const graph_action& a, Id v, int m, int n);

// Same dimension via the rank of the stacked (P_k - I) over the rationals;
// independent of the orbit count route.
long intertwiner_dimension_rank(const graph_action& a, Id v, int m, int n);

// Table d[m][n] for 0 <= m, n <= depth; symmetric with non-negative entries.
std::vector<std::vector<long>> dr_dimension_table(const graph_action& a, Id v, int depth);

struct bratteli_level {
  std::vector<std::string> labels;
  std::vector<long long> dims;
};

struct bratteli_diagram {
  std::vector<bratteli_level> levels;
  // edges[k][i][j] = multiplicity from level-k vertex j to level-(k+1) vertex i.
  std::vector<std::vector<std::vector<long long>>> edges;
};

// Core AF structure from a quotient graph report: level 0 is all ones on the
// spectrum points, each step multiplies by the adjacency transpose.
bratteli_diagram core_bratteli(const quotient_graph_report& r, int levels);

// Core AF structure of a single-vertex fibre through the isotropy
// representation ring: level-k vertices are the irreps appearing in the k-th
// tensor power of the edge permutation representation. Fibres with more than
// one vertex raise precondition_error.
bratteli_diagram core_bratteli_dr_fiber(const graph_action& a, Id v, int levels);

std::string bratteli_to_dot(const bratteli_diagram& d, const std::string& name);

}  // namespace orbigraph

#endif
