#include "orbigraph/star_algebra.hpp"

#include <algorithm>
#include <cmath>

namespace orbigraph {

bool fd_star_algebra::has_cancellation() const {
  for (Id b = 0; b < dim; ++b) {
    std::vector<bool> seen_left(dim, false), seen_right(dim, false);
    for (Id i = 0; i < dim; ++i) {
      const Id ib = prod_at(i, b);
      if (ib != undef) {
        if (seen_left[ib]) return false;
        seen_left[ib] = true;
      }
      const Id bi = prod_at(b, i);
      if (bi != undef) {
        if (seen_right[bi]) return false;
        seen_right[bi] = true;
      }
    }
  }
  return true;
}

validation_report validate_star_algebra(const fd_star_algebra& a) {
  if (a.prod.size() != static_cast<std::size_t>(a.dim) * a.dim)
    throw malformed_input_error("algebra: product table size mismatch");
  if (a.star.size() != static_cast<std::size_t>(a.dim))
    throw malformed_input_error("algebra: star size mismatch");
  for (Id p : a.prod)
    if (p != undef && (p < 0 || p >= a.dim))
      throw malformed_input_error("algebra: dangling basis id in product table");
  for (Id s : a.star)
    if (s < 0 || s >= a.dim) throw malformed_input_error("algebra: dangling basis id in star");
  for (Id u : a.unit_support)
    if (u < 0 || u >= a.dim) throw malformed_input_error("algebra: dangling basis id in unit");

  validation_report rep;
  const std::size_t cap = 256;
  for (Id i = 0; i < a.dim && rep.violations.size() < cap; ++i)
    for (Id j = 0; j < a.dim; ++j) {
      const Id ij = a.prod_at(i, j);
      for (Id k = 0; k < a.dim; ++k) {
        const Id jk = a.prod_at(j, k);
        const Id l = ij == undef ? undef : a.prod_at(ij, k);
        const Id r = jk == undef ? undef : a.prod_at(i, jk);
        if (l != r) {
          rep.add("assoc", {i, j, k}, "(ij)k != i(jk)");
          if (rep.violations.size() >= cap) return rep;
        }
      }
    }
  for (Id i = 0; i < a.dim && rep.violations.size() < cap; ++i) {
    if (a.star[a.star[i]] != i) rep.add("star-involution", {i}, "star not involutive");
    for (Id j = 0; j < a.dim; ++j) {
      const Id ij = a.prod_at(i, j);
      const Id sji = a.prod_at(a.star[j], a.star[i]);
      if ((ij == undef) != (sji == undef) || (ij != undef && a.star[ij] != sji)) {
        rep.add("star-antimultiplicative", {i, j}, "(ij)* != j* i*");
        if (rep.violations.size() >= cap) break;
      }
    }
  }
  // The unit must act as two-sided identity on the basis.
  std::vector<bool> in_unit(a.dim, false);
  for (Id u : a.unit_support) in_unit[u] = true;
  for (Id i = 0; i < a.dim && rep.violations.size() < cap; ++i) {
    Id left_hits = 0, right_hits = 0;
    for (Id u : a.unit_support) {
      const Id ui = a.prod_at(u, i);
      if (ui != undef) {
        ++left_hits;
        if (ui != i) rep.add("unit", {u, i}, "unit summand maps basis element elsewhere");
      }
      const Id iu = a.prod_at(i, u);
      if (iu != undef) {
        ++right_hits;
        if (iu != i) rep.add("unit", {i, u}, "unit summand maps basis element elsewhere");
      }
    }
    if (left_hits != 1 || right_hits != 1)
      rep.add("unit", {i}, "basis element not hit exactly once by the unit");
  }
  return rep;
}

fd_star_algebra groupoid_algebra(const finite_groupoid& g) {
  fd_star_algebra a;
  a.dim = g.n_arrows();
  a.prod = g.comp;
  a.star = g.inv;
  a.unit_support = g.unit_arrow;
  return a;
}

algebra_element alg_zero(const fd_star_algebra& a) { return algebra_element(a.dim, 0.0); }

algebra_element alg_unit(const fd_star_algebra& a) {
  algebra_element u(a.dim, 0.0);
  for (Id i : a.unit_support) u[i] += 1.0;
  return u;
}

algebra_element alg_mul(const fd_star_algebra& a, const algebra_element& x, const algebra_element& y) {
  algebra_element out(a.dim, 0.0);
  for (Id i = 0; i < a.dim; ++i) {
    if (x[i] == 0.0) continue;
    for (Id j = 0; j < a.dim; ++j) {
      if (y[j] == 0.0) continue;
      const Id ij = a.prod_at(i, j);
      if (ij != undef) out[ij] += x[i] * y[j];
    }
  }
  return out;
}

algebra_element alg_star(const fd_star_algebra& a, const algebra_element& x) {
  algebra_element out(a.dim, 0.0);
  for (Id i = 0; i < a.dim; ++i) out[a.star[i]] = std::conj(x[i]);
  return out;
}

double alg_dist(const algebra_element& x, const algebra_element& y) {
  double m = 0;
  for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

}  // namespace orbigraph
