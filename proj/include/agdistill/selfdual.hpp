// Self-dual bases of F_{2^s} over F_2 (tr(alpha_i alpha_j) = delta_ij) and
// the qudit<->qubit coordinate maps they induce. Basis ordering is
// significant: it fixes the qubit labeling of the gate decomposition.
#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "agdistill/field.hpp"

namespace agd {

struct SelfDualBasis {
  std::shared_ptr<const Field> field;
  std::vector<fe> alphas;  // alpha_0 .. alpha_{s-1}
};

// The published ten-element self-dual basis for s=10 (modulus x^10+x^3+1).
SelfDualBasis paper_basis_s10();

bool is_self_dual(const SelfDualBasis& basis);

// Random invertible basis + symmetric congruence reduction of its Gram
// matrix over F_2 (find T with T M T^t = I, pivoting on odd diagonal
// entries; restart on a new random basis when none exists). Deterministic
// given seed.
SelfDualBasis find_self_dual_basis(std::shared_ptr<const Field> field,
                                   std::uint64_t seed,
                                   int max_restarts = 1000);

// b_i = trace(alpha_i * beta); inverse of from_bits.
std::vector<int> to_bits(fe beta, const SelfDualBasis& basis);
fe from_bits(const std::vector<int>& bits, const SelfDualBasis& basis);

// Alias of to_bits: one F_q syndrome entry expands into s qubit-stabilizer
// measurement bits.
std::vector<int> syndrome_to_bits(fe v, const SelfDualBasis& basis);

}  // namespace agd
