#ifndef ORBIGRAPH_CORRESPONDENCE_HPP
#define ORBIGRAPH_CORRESPONDENCE_HPP

#include <utility>
#include <vector>

#include "orbigraph/common.hpp"
#include "orbigraph/graph_action.hpp"
#include "orbigraph/space_action.hpp"
#include "orbigraph/star_algebra.hpp"

namespace orbigraph {

// Convolution algebra of the action groupoid on vertices, with the pair
// decoding kept so module formulas can work in (arrow, vertex) coordinates.
struct vertex_crossed_product_result {
  fd_star_algebra alg;
  action_groupoid_result ag;  // basis i of alg is arrow i of ag.gpd
};

vertex_crossed_product_result vertex_crossed_product(const graph_action& a);

// Finite dimensional correspondence over the vertex crossed product. Basis
// vectors are pairs (g, e) with src-unit of the edge fibre matching rng(g);
// left/right module actions and the inner product land in single basis
// elements (or zero), so everything is stored as index tables.
struct fd_correspondence {
  Id dim = 0;
  std::vector<std::pair<Id, Id>> basis;   // (arrow of G, edge)
  std::vector<std::vector<Id>> left;      // [alg basis][module basis]
  std::vector<std::vector<Id>> right;     // [module basis][alg basis]
  // inner[m1][m2]: algebra basis index of <m1, m2>, undef = 0.
  std::vector<std::vector<Id>> inner;
};

struct correspondence_crossed_product_result {
  vertex_crossed_product_result coeff;
  fd_correspondence mod;
};

correspondence_crossed_product_result correspondence_crossed_product(const graph_action& a);

// Exhaustive bimodule identities on basis vectors: associativity of the two
// actions, commutation, <x, y.a> = <x,y> a, <x,y>* = <y,x>. Quadratic in
// dimension times algebra dimension; meant for tests and small instances.
validation_report verify_correspondence(const correspondence_crossed_product_result& c);

// Dimension bookkeeping for the compact operators on the correspondence:
// lhs = rank of the span of all theta_{xi,eta} acting on the module,
// rhs = sum over arrows a of dim K(H_{rng a}) computed fibrewise from
// source-degrees. Both sides are computed independently.
struct kappa_check_result {
  long long lhs = 0, rhs = 0;
  bool ok = false;
};

kappa_check_result kappa_dimension_check(const graph_action& a);

}  // namespace orbigraph

#endif
