#ifndef ORBIGRAPH_GROUPOID_HPP
#define ORBIGRAPH_GROUPOID_HPP

#include <utility>
#include <vector>

#include "orbigraph/common.hpp"
#include "orbigraph/group.hpp"

namespace orbigraph {

// Finite groupoid over a dense unit set. Composition comp[g1][g2] is stored
// as a total table; undef marks non-composable pairs. compose(g1, g2) is the
// arrow "g1 after g2": defined exactly when src(g1) == rng(g2).
struct finite_groupoid {
  Id n_units = 0;
  std::vector<Id> src, rng;             // per arrow
  std::vector<Id> comp;                 // row-major n_arrows x n_arrows
  std::vector<Id> inv;                  // per arrow
  std::vector<Id> unit_arrow;           // per unit

  bool operator==(const finite_groupoid&) const = default;

  Id n_arrows() const { return static_cast<Id>(src.size()); }
  Id compose(Id g1, Id g2) const { return comp[static_cast<std::size_t>(g1) * src.size() + g2]; }
  Id& comp_at(Id g1, Id g2) { return comp[static_cast<std::size_t>(g1) * src.size() + g2]; }

  // Arrows g with src(g) == rng(g) == u, ascending.
  std::vector<Id> isotropy_arrows(Id u) const;
};

// Shape/dangling-id problems throw malformed_input_error; every violated
// axiom is reported with a witness (arrow ids, or unit ids for unit axioms).
validation_report validate_groupoid(const finite_groupoid& g);

// units x K x units with (w,k1,v)(v,k2,u) = (w, k1*k2, u). Arrow ids
// enumerate (rng_unit, element, src_unit) with src fastest. Throws
// precondition_error when units is empty.
finite_groupoid build_transitive_groupoid(Id n_units, const finite_group& k);

// Decodes the arrow id enumeration of build_transitive_groupoid.
struct transitive_arrow {
  Id rng_unit, element, src_unit;
};
transitive_arrow decode_transitive_arrow(Id n_units, const finite_group& k, Id arrow);
Id encode_transitive_arrow(Id n_units, const finite_group& k, transitive_arrow a);

// Orbits of units under "connected by an arrow", each sorted ascending,
// ordered by smallest member.
std::vector<std::vector<Id>> transitive_components(const finite_groupoid& g);

// Isotropy group at a unit, with the arrow ids realizing each element.
struct isotropy_group {
  finite_group group;
  std::vector<Id> arrow_of;   // group element -> arrow id
  Id element_of_arrow(const finite_groupoid& g, Id arrow) const;  // -1 if absent
};

isotropy_group isotropy_at(const finite_groupoid& g, Id u);

}  // namespace orbigraph

#endif
