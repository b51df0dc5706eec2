#ifndef ORBIGRAPH_STAR_ALGEBRA_HPP
#define ORBIGRAPH_STAR_ALGEBRA_HPP

#include <complex>
#include <vector>

#include "orbigraph/common.hpp"
#include "orbigraph/groupoid.hpp"

namespace orbigraph {

// Finite dimensional *-algebra whose basis multiplies into a single basis
// element or zero (prod undef). Groupoid convolution algebras with counting
// measure have exactly this shape: d_g d_h = d_{gh}, d_g* = d_{g^-1}.
struct fd_star_algebra {
  Id dim = 0;
  std::vector<Id> prod;              // row-major dim x dim, undef = 0
  std::vector<Id> star;              // per basis element
  std::vector<Id> unit_support;      // basis indices that sum to the unit

  Id prod_at(Id i, Id j) const { return prod[static_cast<std::size_t>(i) * dim + j]; }

  // For fixed b both i -> prod[i][b] and i -> prod[b][i] are injective where
  // defined; holds for groupoid algebras, required by the centre solver.
  bool has_cancellation() const;
};

using algebra_element = std::vector<std::complex<double>>;

validation_report validate_star_algebra(const fd_star_algebra& a);

fd_star_algebra groupoid_algebra(const finite_groupoid& g);

algebra_element alg_zero(const fd_star_algebra& a);
algebra_element alg_unit(const fd_star_algebra& a);
algebra_element alg_mul(const fd_star_algebra& a, const algebra_element& x, const algebra_element& y);
algebra_element alg_star(const fd_star_algebra& a, const algebra_element& x);
double alg_dist(const algebra_element& x, const algebra_element& y);

}  // namespace orbigraph

#endif
