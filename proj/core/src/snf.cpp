#include "orbigraph/snf.hpp"

#include <algorithm>
#include <utility>

namespace orbigraph {

big_matrix identity_matrix(int n) {
  big_matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

big_matrix mat_mul(const big_matrix& x, const big_matrix& y) {
  if (x.cols != y.rows) throw precondition_error("mat_mul: shape mismatch");
  big_matrix out(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (x.at(i, k) == 0) continue;
      for (int j = 0; j < y.cols; ++j) out.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return out;
}

big_matrix from_int_matrix(const int_matrix& m) {
  const int r = static_cast<int>(m.size());
  const int c = r == 0 ? 0 : static_cast<int>(m[0].size());
  big_matrix out(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(m[i].size()) != c) throw malformed_input_error("ragged matrix");
    for (int j = 0; j < c; ++j) out.at(i, j) = m[i][j];
  }
  return out;
}

namespace {

// Fraction-free determinant (Bareiss); only used to certify unimodularity.
bigint det_bareiss(big_matrix m) {
  if (m.rows != m.cols) throw precondition_error("det: not square");
  const int n = m.rows;
  bigint prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return n == 0 ? bigint(1) : sign * m.at(n - 1, n - 1);
}

struct snf_state {
  big_matrix s, u, v;

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < s.cols; ++j) std::swap(s.at(a, j), s.at(b, j));
    for (int j = 0; j < u.cols; ++j) std::swap(u.at(a, j), u.at(b, j));
  }
  void swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < s.rows; ++i) std::swap(s.at(i, a), s.at(i, b));
    for (int i = 0; i < v.rows; ++i) std::swap(v.at(i, a), v.at(i, b));
  }
  void add_row(int dst, int src, const bigint& f) {  // row dst += f * row src
    for (int j = 0; j < s.cols; ++j) s.at(dst, j) += f * s.at(src, j);
    for (int j = 0; j < u.cols; ++j) u.at(dst, j) += f * u.at(src, j);
  }
  void add_col(int dst, int src, const bigint& f) {
    for (int i = 0; i < s.rows; ++i) s.at(i, dst) += f * s.at(i, src);
    for (int i = 0; i < v.rows; ++i) v.at(i, dst) += f * v.at(i, src);
  }
  void negate_row(int r) {
    for (int j = 0; j < s.cols; ++j) s.at(r, j) = -s.at(r, j);
    for (int j = 0; j < u.cols; ++j) u.at(r, j) = -u.at(r, j);
  }
};

}  // namespace

snf_result smith_normal_form(const big_matrix& m) {
  snf_state st{m, identity_matrix(m.rows), identity_matrix(m.cols)};
  const int n = std::min(m.rows, m.cols);

  for (int t = 0; t < n; ++t) {
    // Smallest |entry| in the trailing block becomes the pivot.
    auto find_pivot = [&]() -> std::pair<int, int> {
      std::pair<int, int> best{-1, -1};
      bigint best_abs = 0;
      for (int i = t; i < st.s.rows; ++i)
        for (int j = t; j < st.s.cols; ++j) {
          if (st.s.at(i, j) == 0) continue;
          const bigint a = abs(st.s.at(i, j));
          if (best.first < 0 || a < best_abs) {
            best = {i, j};
            best_abs = a;
          }
        }
      return best;
    };

    bool settled = false;
    while (!settled) {
      const auto [pi, pj] = find_pivot();
      if (pi < 0) {
        settled = true;  // trailing block is zero
        break;
      }
      st.swap_rows(t, pi);
      st.swap_cols(t, pj);
      bool clean = true;
      for (int i = t + 1; i < st.s.rows; ++i) {
        if (st.s.at(i, t) == 0) continue;
        st.add_row(i, t, -(st.s.at(i, t) / st.s.at(t, t)));
        if (st.s.at(i, t) != 0) clean = false;  // remainder survives, re-pivot
      }
      for (int j = t + 1; j < st.s.cols; ++j) {
        if (st.s.at(t, j) == 0) continue;
        st.add_col(j, t, -(st.s.at(t, j) / st.s.at(t, t)));
        if (st.s.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility repair: fold an offending row in and restart the pivot.
      bool divides = true;
      for (int i = t + 1; i < st.s.rows && divides; ++i)
        for (int j = t + 1; j < st.s.cols && divides; ++j)
          if (st.s.at(i, j) % st.s.at(t, t) != 0) {
            st.add_row(t, i, 1);
            divides = false;
          }
      settled = divides;
    }
    if (st.s.at(t, t) == 0) break;
    if (st.s.at(t, t) < 0) st.negate_row(t);
  }

  snf_result res{std::move(st.u), std::move(st.s), std::move(st.v), {}, 0};
  for (int t = 0; t < n; ++t)
    if (res.s.at(t, t) != 0) {
      res.diagonal.push_back(res.s.at(t, t));
      ++res.rank;
    }

  // Exact certification of the factorization.
  const big_matrix prod = mat_mul(mat_mul(res.u, m), res.v);
  for (int i = 0; i < prod.rows; ++i)
    for (int j = 0; j < prod.cols; ++j) {
      const bigint expect = (i == j && i < res.rank) ? res.diagonal[i] : bigint(0);
      if (prod.at(i, j) != expect) throw internal_consistency_error("snf: U*M*V != S");
      if (prod.at(i, j) != res.s.at(i, j)) throw internal_consistency_error("snf: stale S");
    }
  for (int t = 1; t < res.rank; ++t)
    if (res.diagonal[t] % res.diagonal[t - 1] != 0)
      throw internal_consistency_error("snf: diagonal not a divisibility chain");
  if (abs(det_bareiss(res.u)) != 1 || abs(det_bareiss(res.v)) != 1)
    throw internal_consistency_error("snf: transform not unimodular");
  return res;
}

graph_k_theory_result graph_k_theory(const int_matrix& adjacency) {
  const int np = static_cast<int>(adjacency.size());
  if (np == 0) throw precondition_error("graph_k_theory: empty vertex set");
  for (int x = 0; x < np; ++x) {
    if (static_cast<int>(adjacency[x].size()) != np)
      throw malformed_input_error("graph_k_theory: adjacency not square");
    bool incoming = false;
    for (int y = 0; y < np; ++y) {
      if (adjacency[x][y] < 0) throw malformed_input_error("graph_k_theory: negative entry");
      incoming = incoming || adjacency[x][y] > 0;
    }
    if (!incoming) throw precondition_error("graph_k_theory: graph has a source");
  }

  big_matrix m(np, np);  // I - A^T
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < np; ++j) m.at(i, j) = (i == j ? 1 : 0) - adjacency[j][i];

  const snf_result snf = smith_normal_form(m);
  graph_k_theory_result out;
  out.k0.rank = np - snf.rank;
  for (const bigint& d : snf.diagonal)
    if (d > 1) out.k0.torsion.push_back(d);
  out.k1.rank = np - snf.rank;  // kernel of an endomorphism of Z^n is free
  return out;
}

std::string invariants_to_string(const abelian_invariants& g) {
  std::string out;
  auto append = [&](const std::string& part) {
    if (!out.empty()) out += " + ";
    out += part;
  };
  if (g.rank == 1) append("Z");
  if (g.rank > 1) append("Z^" + std::to_string(g.rank));
  for (const bigint& d : g.torsion) append("Z/" + d.str());
  if (out.empty()) out = "0";
  return out;
}

}  // namespace orbigraph
