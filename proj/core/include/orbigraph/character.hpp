#ifndef ORBIGRAPH_CHARACTER_HPP
#define ORBIGRAPH_CHARACTER_HPP

#include <complex>
#include <vector>

#include "orbigraph/common.hpp"
#include "orbigraph/group.hpp"

namespace orbigraph {

using cplx = std::complex<double>;

// A class function, one value per conjugacy class.
using class_function = std::vector<cplx>;

struct conj_class {
  Id rep;                    // smallest member
  std::vector<Id> elements;  // ascending
};

// Classes ordered by smallest member; the identity class is first.
std::vector<conj_class> conjugacy_classes(const finite_group& g);

// Full character table. Rows are irreducible characters ordered by
// (degree ascending, value vector descending lexicographically); the trivial
// character is always row 0. Values are certified against orthogonality to
// 1e-6 before the table is returned.
struct character_table {
  std::vector<conj_class> classes;
  std::vector<Id> class_of;               // element -> class index
  std::vector<int> degrees;               // per irrep
  std::vector<class_function> rows;       // irrep x class

  int n_irreps() const { return static_cast<int>(rows.size()); }
  int n_classes() const { return static_cast<int>(classes.size()); }
  cplx value(int irrep, Id element) const { return rows[irrep][class_of[element]]; }
};

// Computed by eigen-analysis of the class-sum algebra with deterministic
// seeding; results are memoized per multiplication table (thread-safe reads)
// and optionally persisted under the directory named by ORBIGRAPH_CACHE_DIR.
// Group order is capped at 512.
const character_table& get_character_table(const finite_group& g);

// <a, b> = (1/|K|) sum_k conj(a(k)) b(k). Both arguments must decompose
// into irreducibles with certified non-negative integer multiplicities;
// anything else throws precondition_error.
long hom_multiplicity(const character_table& t, const class_function& a, const class_function& b);

// Multiplicities of each irreducible in a genuine character.
std::vector<long> decompose_character(const character_table& t, const class_function& a);

// Pointwise product (character of the tensor product).
class_function tensor_character(const character_table& t, const class_function& a,
                                const class_function& b);

// Character of the permutation action k -> fixed points of images[k].
class_function permutation_character(const character_table& t,
                                     const std::vector<std::vector<Id>>& action);

// Pull a class function back along an injective homomorphism sub -> parent;
// the embedding is verified.
class_function restrict_character(const finite_group& parent, const character_table& parent_table,
                                  const class_function& a, const finite_group& sub,
                                  const character_table& sub_table,
                                  const std::vector<Id>& into_parent);

}  // namespace orbigraph

#endif
