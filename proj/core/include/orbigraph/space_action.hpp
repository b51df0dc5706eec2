#ifndef ORBIGRAPH_SPACE_ACTION_HPP
#define ORBIGRAPH_SPACE_ACTION_HPP

#include <utility>
#include <vector>

#include "orbigraph/common.hpp"
#include "orbigraph/groupoid.hpp"

namespace orbigraph {

// Action of a groupoid on a finite set fibred over its units. act[g][x] is
// defined exactly when src(g) == anchor[x]; undef everywhere else.
struct space_action {
  finite_groupoid gpd;
  std::vector<Id> anchor;              // point -> unit
  std::vector<std::vector<Id>> act;    // act[arrow][point]

  Id n_points() const { return static_cast<Id>(anchor.size()); }
  Id apply(Id g, Id x) const { return act[g][x]; }
};

validation_report validate_space_action(const space_action& a);

// Orbits sorted ascending, ordered by smallest member.
std::vector<std::vector<Id>> orbits(const space_action& a);

// Points fixed by every isotropy arrow over their anchor unit.
std::vector<Id> fixed_points(const space_action& a);

// Stabilizer {g : g.x == x} as a group, with realizing arrow ids.
isotropy_group stabilizer(const space_action& a, Id x);

// Action groupoid: arrows are pairs (g, x) with src(g) == anchor[x],
// src(g,x) = x, rng(g,x) = g.x, (g1, g2.x)(g2, x) = (g1 g2, x).
// Pairs are enumerated g-major, x ascending.
struct action_groupoid_result {
  finite_groupoid gpd;                 // units = points of the space
  std::vector<std::pair<Id, Id>> pairs;  // arrow -> (g, x)
  std::vector<std::vector<Id>> pair_id;  // (g, x) -> arrow, undef when not a pair
};

action_groupoid_result action_groupoid(const space_action& a);

}  // namespace orbigraph

#endif
