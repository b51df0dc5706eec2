#include "orbigraph/blocks.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numeric>
#include <random>

#include "orbigraph/character.hpp"

namespace orbigraph {

namespace {

constexpr double kIdemTol = 1e-8;

struct union_find {
  std::vector<Id> parent;
  std::vector<bool> zero;

  explicit union_find(Id n) : parent(n), zero(n, false) { std::iota(parent.begin(), parent.end(), 0); }
  Id find(Id x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(Id x, Id y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    if (x > y) std::swap(x, y);
    parent[y] = x;
    zero[x] = zero[x] || zero[y];
  }
};

}  // namespace

// Central elements have coefficients constant on the classes cut out by the
// relations c_i = c_j (both products defined) and c_i = 0 (one-sided); with
// the cancellation property every commutator equation has at most one term
// per side, so union-find with zero forcing is the exact rational solve.
std::vector<std::vector<Id>> center_support_classes(const fd_star_algebra& a) {
  if (!a.has_cancellation())
    throw precondition_error("center: algebra lacks the cancellation property");
  const Id n = a.dim;
  union_find uf(n);
  std::vector<Id> left_inv(static_cast<std::size_t>(n) * n, undef);   // (b, k) -> i, ib = k
  std::vector<Id> right_inv(static_cast<std::size_t>(n) * n, undef);  // (b, k) -> j, bj = k
  for (Id i = 0; i < n; ++i)
    for (Id b = 0; b < n; ++b) {
      const Id ib = a.prod_at(i, b);
      if (ib != undef) left_inv[static_cast<std::size_t>(b) * n + ib] = i;
      const Id bi = a.prod_at(b, i);
      if (bi != undef) right_inv[static_cast<std::size_t>(b) * n + bi] = i;
    }
  for (Id b = 0; b < n; ++b)
    for (Id k = 0; k < n; ++k) {
      const Id i = left_inv[static_cast<std::size_t>(b) * n + k];
      const Id j = right_inv[static_cast<std::size_t>(b) * n + k];
      if (i != undef && j != undef)
        uf.unite(i, j);
      else if (i != undef)
        uf.zero[uf.find(i)] = true;
      else if (j != undef)
        uf.zero[uf.find(j)] = true;
    }
  std::vector<std::vector<Id>> classes;
  std::vector<Id> class_of(n, undef);
  for (Id i = 0; i < n; ++i) {
    const Id r = uf.find(i);
    if (uf.zero[r]) continue;
    if (class_of[r] == undef) {
      class_of[r] = static_cast<Id>(classes.size());
      classes.emplace_back();
    }
    classes[class_of[r]].push_back(i);
  }
  return classes;
}

block_decomposition minimal_central_projections(const fd_star_algebra& a) {
  const auto classes = center_support_classes(a);
  const int nc = static_cast<int>(classes.size());
  if (nc == 0) throw internal_consistency_error("central projections: empty centre");
  const Id dim = a.dim;

  std::vector<Id> class_of(dim, undef);
  for (int c = 0; c < nc; ++c)
    for (Id i : classes[c]) class_of[i] = c;

  // Structure constants of the centre in the class-vector basis, certified
  // constant on classes.
  std::vector<std::vector<std::vector<long>>> n_ijk(nc, std::vector<std::vector<long>>(nc));
  for (int i = 0; i < nc; ++i)
    for (int j = 0; j < nc; ++j) {
      std::vector<long> coeff(dim, 0);
      for (Id x : classes[i])
        for (Id y : classes[j]) {
          const Id xy = a.prod_at(x, y);
          if (xy != undef) ++coeff[xy];
        }
      std::vector<long> byclass(nc, 0);
      for (Id k = 0; k < dim; ++k) {
        if (coeff[k] == 0) continue;
        if (class_of[k] == undef)
          throw internal_consistency_error("central projections: product leaves the centre span");
        byclass[class_of[k]] = coeff[k];
      }
      for (int k = 0; k < nc; ++k)
        for (Id member : classes[k])
          if (coeff[member] != byclass[k])
            throw internal_consistency_error("central projections: product not constant on class");
      n_ijk[i][j] = std::move(byclass);
    }

  // The star permutes classes.
  std::vector<int> star_class(nc);
  for (int c = 0; c < nc; ++c) {
    star_class[c] = class_of[a.star[classes[c].front()]];
    for (Id i : classes[c])
      if (class_of[a.star[i]] != star_class[c])
        throw internal_consistency_error("central projections: star not constant on class");
  }

  // Class coordinates of the unit.
  std::vector<double> unit_coord(nc, 0.0);
  {
    std::vector<long> cnt(dim, 0);
    for (Id u : a.unit_support) ++cnt[u];
    for (Id i = 0; i < dim; ++i)
      if (cnt[i]) {
        if (class_of[i] == undef)
          throw internal_consistency_error("central projections: unit outside the centre");
        unit_coord[class_of[i]] = static_cast<double>(cnt[i]);
      }
  }

  auto center_mul = [&](const std::vector<cplx>& x, const std::vector<cplx>& y) {
    std::vector<cplx> out(nc, 0.0);
    for (int i = 0; i < nc; ++i) {
      if (x[i] == 0.0) continue;
      for (int j = 0; j < nc; ++j) {
        if (y[j] == 0.0) continue;
        for (int k = 0; k < nc; ++k)
          if (n_ijk[i][j][k]) out[k] += x[i] * y[j] * static_cast<double>(n_ijk[i][j][k]);
      }
    }
    return out;
  };

  for (unsigned attempt = 0; attempt < 16; ++attempt) {
    std::mt19937_64 rng(0xb10cdecULL * 2654435761ULL + attempt);
    std::uniform_real_distribution<double> dist(0.25, 1.0);

    // Random self-adjoint central element: conjugate coefficients on classes
    // swapped by star, real on star-fixed classes. Complex coefficients keep
    // conjugate one-dimensional blocks separated.
    std::vector<cplx> t(nc, 0.0);
    for (int c = 0; c < nc; ++c) {
      if (star_class[c] == c) {
        t[c] = cplx(dist(rng) * (rng() & 1 ? 1.0 : -1.0), 0.0);
      } else if (star_class[c] > c) {
        const cplx v(dist(rng) * (rng() & 1 ? 1.0 : -1.0), dist(rng) * (rng() & 1 ? 1.0 : -1.0));
        t[c] = v;
        t[star_class[c]] = std::conj(v);
      }
    }

    // Regular representation of the random element on the centre.
    Eigen::MatrixXcd mz = Eigen::MatrixXcd::Zero(nc, nc);
    for (int i = 0; i < nc; ++i)
      if (t[i] != 0.0)
        for (int j = 0; j < nc; ++j)
          for (int k = 0; k < nc; ++k)
            if (n_ijk[i][j][k]) mz(k, j) += t[i] * static_cast<double>(n_ijk[i][j][k]);

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(mz);
    if (es.info() != Eigen::Success) continue;
    const double scale = 1.0 + es.eigenvalues().norm();
    bool separated = true;
    for (int p = 0; p < nc && separated; ++p)
      for (int q = p + 1; q < nc; ++q)
        if (std::abs(es.eigenvalues()[p] - es.eigenvalues()[q]) < 1e-7 * scale) {
          separated = false;
          break;
        }
    if (!separated) continue;

    // Each eigenvector spans one minimal idempotent direction; rescale so
    // that w.w = w.
    std::vector<std::vector<cplx>> idem;
    bool good = true;
    for (int col = 0; col < nc && good; ++col) {
      std::vector<cplx> w(nc);
      for (int i = 0; i < nc; ++i) w[i] = es.eigenvectors()(i, col);
      const auto ww = center_mul(w, w);
      int piv = 0;
      for (int i = 1; i < nc; ++i)
        if (std::abs(w[i]) > std::abs(w[piv])) piv = i;
      const cplx alpha = ww[piv] / w[piv];
      if (std::abs(alpha) < 1e-10) {
        good = false;
        break;
      }
      for (auto& c : w) c /= alpha;
      idem.push_back(std::move(w));
    }
    if (!good) continue;

    // Certify: idempotent, self-adjoint, orthogonal, summing to the unit.
    auto dist_inf = [](const std::vector<cplx>& x, const std::vector<cplx>& y) {
      double m = 0;
      for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i] - y[i]));
      return m;
    };
    auto star_center = [&](const std::vector<cplx>& x) {
      std::vector<cplx> out(nc, 0.0);
      for (int c = 0; c < nc; ++c) out[star_class[c]] = std::conj(x[c]);
      return out;
    };
    for (int p = 0; p < nc && good; ++p) {
      if (dist_inf(center_mul(idem[p], idem[p]), idem[p]) > kIdemTol) good = false;
      if (good && dist_inf(star_center(idem[p]), idem[p]) > kIdemTol) good = false;
      for (int q = p + 1; q < nc && good; ++q) {
        const auto pq = center_mul(idem[p], idem[q]);
        for (const auto& z : pq)
          if (std::abs(z) > kIdemTol) {
            good = false;
            break;
          }
      }
    }
    if (good) {
      std::vector<cplx> total(nc, 0.0);
      for (const auto& e : idem)
        for (int c = 0; c < nc; ++c) total[c] += e[c];
      for (int c = 0; c < nc; ++c)
        if (std::abs(total[c] - unit_coord[c]) > kIdemTol) {
          good = false;
          break;
        }
    }
    if (!good) continue;

    // Expand to the algebra basis and read block sizes off the trace of
    // right multiplication: tr R_e = sum_g e[unit part at src(g)] = n^2.
    std::vector<Id> right_unit(dim, undef);  // g -> j with prod(g, j) = g
    for (Id g = 0; g < dim; ++g)
      for (Id j = 0; j < dim; ++j)
        if (a.prod_at(g, j) == g) {
          right_unit[g] = j;
          break;
        }
    block_decomposition out;
    for (const auto& e : idem) {
      algebra_block blk;
      blk.projection.assign(dim, 0.0);
      for (int c = 0; c < nc; ++c)
        for (Id i : classes[c]) blk.projection[i] = e[c];
      double tr = 0;
      for (Id g = 0; g < dim; ++g)
        if (right_unit[g] != undef) tr += blk.projection[right_unit[g]].real();
      const double n = std::sqrt(std::max(tr, 0.0));
      const long ni = std::lround(n);
      if (ni < 1 || std::abs(n - static_cast<double>(ni)) > 1e-6) {
        good = false;
        break;
      }
      blk.size = ni;
      out.blocks.push_back(std::move(blk));
    }
    if (!good) continue;

    std::sort(out.blocks.begin(), out.blocks.end(), [&](const algebra_block& x, const algebra_block& y) {
      if (x.size != y.size) return x.size < y.size;
      auto support = [&](const algebra_block& b) {
        for (Id i = 0; i < dim; ++i)
          if (std::abs(b.projection[i]) > 1e-6) return i;
        return dim;
      };
      const Id sx = support(x), sy = support(y);
      if (sx != sy) return sx < sy;
      for (Id i = 0; i < dim; ++i) {
        const cplx cx = x.projection[i], cy = y.projection[i];
        if (std::abs(cx.real() - cy.real()) > 1e-9) return cx.real() > cy.real();
        if (std::abs(cx.imag() - cy.imag()) > 1e-9) return cx.imag() > cy.imag();
      }
      return false;
    });
    return out;
  }
  throw internal_consistency_error("central projections: failed to certify after retries");
}

corner_context make_corner_context(const fd_correspondence& m, const fd_star_algebra& alg) {
  corner_context ctx;
  ctx.mod = &m;
  ctx.alg = &alg;
  ctx.left_inv.assign(static_cast<std::size_t>(m.dim) * m.dim, undef);
  for (Id a = 0; a < alg.dim; ++a)
    for (Id j = 0; j < m.dim; ++j) {
      const Id z = m.left[a][j];
      if (z == undef) continue;
      Id& slot = ctx.left_inv[static_cast<std::size_t>(j) * m.dim + z];
      if (slot != undef)
        throw internal_consistency_error("corner_context: left action not basis-injective");
      slot = a;
    }
  return ctx;
}

long corner_dimension(const corner_context& ctx, const algebra_element& p,
                      const algebra_element& q) {
  const fd_correspondence& m = *ctx.mod;
  std::vector<Id> q_support;
  for (Id a = 0; a < ctx.alg->dim; ++a)
    if (q[a] != 0.0) q_support.push_back(a);

  cplx tr = 0;
  for (Id z = 0; z < m.dim; ++z)
    for (Id a : q_support) {
      const Id j = m.right[z][a];
      if (j == undef) continue;
      const Id ap = ctx.left_inv[static_cast<std::size_t>(j) * m.dim + z];
      if (ap == undef) continue;
      tr += p[ap] * q[a];
    }
  if (std::abs(tr.imag()) > 1e-6)
    throw internal_consistency_error("corner_dimension: non-real trace");
  const long d = std::lround(tr.real());
  if (std::abs(tr.real() - static_cast<double>(d)) > 1e-6)
    throw internal_consistency_error("corner_dimension: non-integral trace");
  if (d < 0) throw internal_consistency_error("corner_dimension: negative trace");
  return d;
}

long corner_dimension(const fd_correspondence& m, const fd_star_algebra& alg,
                      const algebra_element& p, const algebra_element& q) {
  return corner_dimension(make_corner_context(m, alg), p, q);
}

long corner_dimension_rank(const fd_correspondence& m, const fd_star_algebra& alg,
                           const algebra_element& p, const algebra_element& q) {
  // Image matrix of xi -> p.xi.q over the module basis, columnwise.
  Eigen::MatrixXcd img = Eigen::MatrixXcd::Zero(m.dim, m.dim);
  for (Id z = 0; z < m.dim; ++z) {
    // xi.q
    std::vector<cplx> w(m.dim, 0.0);
    for (Id a = 0; a < alg.dim; ++a) {
      if (q[a] == 0.0) continue;
      const Id j = m.right[z][a];
      if (j != undef) w[j] += q[a];
    }
    // p.(xi.q)
    for (Id j = 0; j < m.dim; ++j) {
      if (w[j] == 0.0) continue;
      for (Id a = 0; a < alg.dim; ++a) {
        if (p[a] == 0.0) continue;
        const Id out = m.left[a][j];
        if (out != undef) img(out, z) += p[a] * w[j];
      }
    }
  }
  // The QR threshold is relative to the largest pivot, so a corner that is
  // exactly zero up to eigen-solver noise would otherwise rank the noise.
  if (img.cwiseAbs().maxCoeff() < 1e-9) return 0;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(img);
  qr.setThreshold(1e-7);
  return static_cast<long>(qr.rank());
}

}  // namespace orbigraph
