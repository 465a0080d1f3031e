// The construction pipeline: residue vector -> seventh roots -> twisted
// evaluation code -> puncture zero coordinates -> row-reduced triorthogonal
// matrix [I_k | G_1 ; 0 | G_0], sigma/tau weights, plus verification of the
// triorthogonality definition and of the transversality identity.
#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "agdistill/agcode.hpp"
#include "agdistill/curve.hpp"
#include "agdistill/linalg.hpp"

namespace agd {

struct Provenance {
  std::string curve_desc;
  unsigned a = 0;
  unsigned k = 0;
  std::uint64_t seed = 0;
  std::vector<std::uint32_t> place_ids;  // N kept places, final column order
  std::vector<std::uint32_t> col_perm;   // empty = identity (defensive only)
};

struct TriorthogonalMatrix {
  std::shared_ptr<const Field> field;
  std::size_t n = 0, k = 0, m = 0, N = 0;
  // Stored over the last n columns of the reduced matrix; the first k
  // columns are the recorded identity/zero block. Top k rows = G_1,
  // bottom m-k rows = G_0.
  Mat rows;
  std::vector<fe> sigma;  // sigma_i = w_{i+k}^5, all nonzero
  std::vector<fe> tau;    // tau_a  = w_a^5, all nonzero
  std::vector<fe> w;      // length N
  Provenance prov;

  Mat g1() const;  // k x n
  Mat g0() const;  // (m-k) x n
};

struct ConstructedCode {
  Curve curve;
  TriorthogonalMatrix T;
  std::vector<Place> kept_places;  // length N, final column order
};

ConstructedCode construct(const Curve& curve, unsigned a, unsigned k,
                          std::uint64_t seed);

struct VerifyMode {
  bool exhaustive = true;
  std::size_t trials = 0;  // sampled mode: random triples and pairs
  std::uint64_t seed = 0;
};

struct TriReport {
  bool ok = true;
  std::size_t triples_checked = 0;
  std::size_t pairs_checked = 0;
  std::optional<std::array<std::size_t, 3>> bad_triple;
  std::optional<std::array<std::size_t, 2>> bad_pair;
};

// Condition (1): sum_i (g^a)^4 (g^b)^2 (g^c) = [1 <= a=b=c <= k];
// condition (2): sum_i sigma_i g^a g^b = tau_a [1 <= a=b <= k].
// Sampled mode always includes every diagonal case.
TriReport is_triorthogonal(const TriorthogonalMatrix& T, const VerifyMode& mode);

// For random u in F_q^m and f = u*G: sum_i f_i^7 = sum_{a<=k} u_a^7.
bool transversality_check(const TriorthogonalMatrix& T, std::size_t trials,
                          std::uint64_t seed);

// Deterministic counter-based stream: mix of (seed, counter) usable as an
// independent RNG state per trial/sample. Shared by triortho and distill.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t counter);

}  // namespace agd
