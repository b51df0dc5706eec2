#ifndef ORBIGRAPH_BLOCKS_HPP
#define ORBIGRAPH_BLOCKS_HPP

#include <vector>

#include "orbigraph/common.hpp"
#include "orbigraph/correspondence.hpp"
#include "orbigraph/star_algebra.hpp"

namespace orbigraph {

// One matrix block of a finite dimensional *-algebra: its minimal central
// projection (coefficients over the algebra basis) and its size n (block
// isomorphic to n x n matrices).
struct algebra_block {
  algebra_element projection;
  long size = 0;
};

struct block_decomposition {
  std::vector<algebra_block> blocks;  // ordered by (size, smallest support id)
};

// Minimal central projections via the centre of the algebra: the centre is
// solved exactly (sparse two-term relations with zero forcing), projections
// come from eigen-analysis of a random self-adjoint central element and are
// certified idempotent, self-adjoint, orthogonal and summing to the unit
// within 1e-8; block sizes are certified integer squares. Deterministic
// seeding with bounded retries; persistent failure raises
// internal_consistency_error.
block_decomposition minimal_central_projections(const fd_star_algebra& a);

// Basis indicator vectors of the centre, one per class of tied coefficients.
std::vector<std::vector<Id>> center_support_classes(const fd_star_algebra& a);

// Precomputed inverse of the left action: for module indices (j, z) the
// unique algebra basis element a with left[a][j] == z, or undef.
struct corner_context {
  const fd_correspondence* mod = nullptr;
  const fd_star_algebra* alg = nullptr;
  std::vector<Id> left_inv;  // j * dim + z
};
corner_context make_corner_context(const fd_correspondence& m, const fd_star_algebra& alg);

// Dimension of p.M.q for central projections p, q, computed as the trace of
// xi -> p.xi.q on the module and certified near-integer. The trace equals
// the rank because the map is a linear idempotent.
long corner_dimension(const corner_context& ctx, const algebra_element& p,
                      const algebra_element& q);
long corner_dimension(const fd_correspondence& m, const fd_star_algebra& alg,
                      const algebra_element& p, const algebra_element& q);

// Same corner dimension as an explicit matrix rank (column-pivoted QR).
// Quadratic-space; intended as a cross-check on small instances.
long corner_dimension_rank(const fd_correspondence& m, const fd_star_algebra& alg,
                           const algebra_element& p, const algebra_element& q);

}  // namespace orbigraph

#endif
