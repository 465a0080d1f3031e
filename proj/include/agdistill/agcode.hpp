// Evaluation codes C_L(D, a*P_inf), dual residue vectors (local components
// of a differential in Omega(-B)), and classical distance bounds.
#pragma once

#include <cstdint>
#include <vector>

#include "agdistill/curve.hpp"
#include "agdistill/linalg.hpp"

namespace agd {

struct EvaluationCode {
  const Curve* curve = nullptr;
  unsigned a = 0;
  std::vector<Place> places;
  Mat gen;  // l(a*P_inf) x n
  std::size_t code_rank = 0;
};

struct ResidueVector {
  std::vector<fe> values;                 // length n''
  std::vector<std::size_t> zero_support;  // indices with value 0, <= g many
};

EvaluationCode build_code(const Curve& curve, unsigned a,
                          const std::vector<Place>& places);

// A nonzero v with sum_i v_i x(P_i) = 0 for every x in L(deg7AE * P_inf),
// deg7AE = n''-2+g. Generic route: first kernel vector of the evaluation
// matrix under the fixed elimination order. Hermitian fast route (used when
// `reserved` is the reserved affine place): v_i = h(P_i) with
// h = x + x(P*) in L((g+1)P_inf - P*), exact by the residue theorem since
// res_P(dx/(x^{q0^2}-x)) = 1 at every affine place. Every returned vector is
// re-verified against sampled L-space rows.
ResidueVector dual_residue_vector(const Curve& curve, unsigned deg7AE,
                                  const std::vector<Place>& places,
                                  std::uint64_t seed,
                                  const Place* reserved = nullptr);

// Goppa bound on the dual distance: d^perp >= a - (2g-2).
inline long dual_distance_bound(long a, long g) { return a - (2 * g - 2); }

// Basis (rows, over all n columns) of the subcode of `code` vanishing on the
// punctured coordinate set; dimension a - k + 1 - g.
Mat vanishing_subbasis(const Field& F, const EvaluationCode& code,
                       const std::vector<std::size_t>& punct);

}  // namespace agd
