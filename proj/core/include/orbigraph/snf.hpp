#ifndef ORBIGRAPH_SNF_HPP
#define ORBIGRAPH_SNF_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "orbigraph/common.hpp"
#include "orbigraph/spectrum.hpp"

namespace orbigraph {

using bigint = boost::multiprecision::cpp_int;

// Dense arbitrary-precision integer matrix.
struct big_matrix {
  int rows = 0, cols = 0;
  std::vector<bigint> a;  // row-major

  big_matrix() = default;
  big_matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
  bigint& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const bigint& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

big_matrix identity_matrix(int n);
big_matrix mat_mul(const big_matrix& x, const big_matrix& y);
big_matrix from_int_matrix(const int_matrix& m);

// U * M * V = S with U, V unimodular and S diagonal, s_i | s_{i+1}, s_i >= 0.
// The factorization is verified exactly before returning (product identity
// and |det U| = |det V| = 1).
struct snf_result {
  big_matrix u, s, v;
  std::vector<bigint> diagonal;  // nonzero entries of S
  int rank = 0;
};

snf_result smith_normal_form(const big_matrix& m);

// Z^rank + sum Z/torsion_i with torsion entries >= 2 in a divisibility chain.
struct abelian_invariants {
  long rank = 0;
  std::vector<bigint> torsion;
};

struct graph_k_theory_result {
  abelian_invariants k0, k1;
};

// K-theory of the graph algebra of a finite graph with no sources, from the
// Smith normal form of I - A^T (adjacency convention: a[x][y] = number of
// edges with range x and source y). A graph with a source or an empty vertex
// set raises precondition_error.
graph_k_theory_result graph_k_theory(const int_matrix& adjacency);

std::string invariants_to_string(const abelian_invariants& g);

}  // namespace orbigraph

#endif
