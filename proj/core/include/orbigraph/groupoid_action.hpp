#ifndef ORBIGRAPH_GROUPOID_ACTION_HPP
#define ORBIGRAPH_GROUPOID_ACTION_HPP

#include <utility>
#include <vector>

#include "orbigraph/common.hpp"
#include "orbigraph/groupoid.hpp"
#include "orbigraph/space_action.hpp"

namespace orbigraph {

// Action of groupoid G on groupoid H: anchor sends H-arrows to G-units and
// is constant on (src, rng, composites) fibres; each g acts by partial
// groupoid isomorphism from the fibre over src(g) to the fibre over rng(g).
struct groupoid_on_groupoid_action {
  finite_groupoid actor;               // G
  finite_groupoid target;              // H
  std::vector<Id> anchor;              // H-arrow -> G-unit
  std::vector<std::vector<Id>> act;    // act[g][h]

  Id apply(Id g, Id h) const { return act[g][h]; }
  // Anchor restricted to H-units (via their unit arrows).
  Id unit_anchor(Id hu) const { return anchor[target.unit_arrow[hu]]; }
};

validation_report validate_groupoid_action(const groupoid_on_groupoid_action& a);

// The induced action on the unit space of the target.
space_action unit_space_action(const groupoid_on_groupoid_action& a);

// Arrows fixed by all isotropy over their anchor unit, as a groupoid in its
// own right; ids are re-densified, arrow_of/unit_of map back to the target.
struct fixed_subgroupoid_result {
  finite_groupoid gpd;
  std::vector<Id> arrow_of;            // new arrow -> target arrow
  std::vector<Id> unit_of;             // new unit -> target unit
};

fixed_subgroupoid_result fixed_subgroupoid(const groupoid_on_groupoid_action& a);

// Sections of the unit anchor that are invariant under the actor, each given
// as actor-unit -> target-unit. Requires a transitive actor; the returned
// list is ordered by value at the smallest actor unit.
std::vector<std::vector<Id>> invariant_sections(const groupoid_on_groupoid_action& a);

// Crossed product G |x H: arrows are (g, h) with src(g) == anchor[h],
// (g1, h1)(g2, h2) = (g1 g2, (g2^-1 . h1) h2), inverse (g, h)^-1 =
// (g^-1, g . h^-1). Units are the H-units. Pairs enumerated g-major.
struct crossed_product_result {
  finite_groupoid gpd;                 // units = target units
  std::vector<std::pair<Id, Id>> pairs;  // arrow -> (g, h)
};

crossed_product_result crossed_product_groupoid(const groupoid_on_groupoid_action& a);

// Views a space action as an action on the cotrivial groupoid (units only).
groupoid_on_groupoid_action as_cotrivial_action(const space_action& a);

}  // namespace orbigraph

#endif
