// Quantum CSS(X, G_0; Z, G^perp) view of a triorthogonal matrix: parameters,
// logical Z operators, syndrome map, and small-scale distance certification.
#pragma once

#include <cstdint>
#include <vector>

#include "agdistill/linalg.hpp"
#include "agdistill/triortho.hpp"

namespace agd {

struct QuantumCodeParams {
  std::size_t n = 0;        // physical qudits
  std::size_t k = 0;        // logical qudits
  long d_lower = 0;         // certified bound a-k-(2g-2)
  unsigned t = 0;           // decoding radius, <= (d_lower-g-1)/2
  std::size_t qubits_physical = 0;  // n*s
  std::size_t qubits_logical = 0;   // k*s
};

// t defaults to the largest radius the bound allows; pass t_override to
// lower it. Throws when the bound admits no positive t.
QuantumCodeParams quantum_params(const TriorthogonalMatrix& T,
                                 unsigned genus, unsigned t_override = 0);

// Rows g-hat^a with g-hat^a_i = tau_a^{-1} sigma_i g^a_i; <g^a, g-hat^b> =
// delta_ab.
Mat logical_z_ops(const TriorthogonalMatrix& T);

// G_0 * e.
std::vector<fe> syndrome(const TriorthogonalMatrix& T,
                         const std::vector<fe>& e);

// r acts trivially on the codespace iff G * r = 0.
bool is_stabilizer_equiv(const TriorthogonalMatrix& T,
                         const std::vector<fe>& r);

// True iff every (delta-1)-subset of columns of G0 is linearly independent
// (certifies distance of the dual code >= delta). Cost-capped.
bool certify_dual_distance(const Field& F, const Mat& G0, unsigned delta,
                           std::uint64_t max_subsets = 50'000'000);

}  // namespace agd
