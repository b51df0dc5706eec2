#ifndef ORBIGRAPH_GROUP_HPP
#define ORBIGRAPH_GROUP_HPP

#include <string>
#include <vector>

#include "orbigraph/common.hpp"

namespace orbigraph {

// Finite group given by its full multiplication table.
struct finite_group {
  std::vector<std::string> names;       // one label per element, may be empty
  std::vector<std::vector<Id>> mul;     // mul[a][b] = a*b
  std::vector<Id> inv;
  Id identity = 0;

  Id order() const { return static_cast<Id>(mul.size()); }
  std::string name_of(Id a) const;
};

// Checks table shape, then the group axioms; shape problems throw
// malformed_input_error, axiom failures land in the report.
validation_report validate_group(const finite_group& g);

finite_group cyclic_group(int n);
finite_group symmetric_group(int n);        // elements = one-line permutations, lexicographic
finite_group direct_product(const finite_group& a, const finite_group& b);

// Element lists of all subgroups, each sorted ascending; the list itself is
// ordered by (size, lexicographic elements). Intended for small groups.
std::vector<std::vector<Id>> all_subgroups(const finite_group& g);

// Subgroup with its own dense table plus the embedding back into the parent.
struct embedded_subgroup {
  finite_group group;
  std::vector<Id> into_parent;  // subgroup element -> parent element
};

embedded_subgroup make_subgroup(const finite_group& g, std::vector<Id> elements);

}  // namespace orbigraph

#endif
