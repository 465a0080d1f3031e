// Boolean phase-polynomial analysis of b -> tr((sum b_i alpha_i)^e):
// algebraic normal form, Clifford-hierarchy certification, the Z/CZ/CCZ
// gate decomposition, and the measurement-based CCZ extraction check.
// Qubit indices are 1-based in reports.
#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <vector>

#include "agdistill/selfdual.hpp"

namespace agd {

struct BooleanPhasePoly {
  unsigned s = 0;
  int constant = 0;
  std::set<unsigned> z;                         // degree-1 monomials
  std::set<std::array<unsigned, 2>> cz;         // degree-2, ascending
  std::set<std::array<unsigned, 3>> ccz;        // degree-3, ascending
};

struct GateDecomposition {
  BooleanPhasePoly poly;
  std::size_t c = 0;  // |CCZ set|
};

enum class HierarchyLevel { pauli, clifford, third_level };

// f(b) = trace(from_bits(b)^exponent), 2^s entries.
std::vector<int> phase_table(const SelfDualBasis& basis, unsigned exponent);

// Moebius transform; throws (named degree violation) when any monomial of
// degree >= 4 appears.
BooleanPhasePoly anf(const std::vector<int>& table, unsigned s);

// ANF degree without the cubic cap (hierarchy certification helper).
unsigned anf_degree(const std::vector<int>& table, unsigned s);

int eval_poly(const BooleanPhasePoly& p, std::uint32_t b);

GateDecomposition decomposition(const SelfDualBasis& basis);

// Degree <= 1: Pauli level (exponents 1,2,4); degree 2: Clifford non-Pauli
// (3,5,6); degree 3: third level (7). Cross-checked by finite differences.
HierarchyLevel hierarchy_certificate(const SelfDualBasis& basis,
                                     unsigned exponent);

// Symbolic check of the teleportation correction rules: for every outcome
// on the qubits outside `triple`, restricting the polynomial and applying
// rules 1-4 leaves exactly the CCZ monomial on `triple`.
bool ccz_extraction_check(const GateDecomposition& decomp,
                          const std::array<unsigned, 3>& triple);

// Heuristic search over random self-dual bases for a low CCZ count.
struct SearchResult {
  SelfDualBasis basis;
  std::size_t c = 0;
};
SearchResult search_min_ccz(std::shared_ptr<const Field> field,
                            std::size_t budget, std::uint64_t seed);

}  // namespace agd
