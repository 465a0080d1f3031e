// Syndrome decoder for G_0^perp (the dual AG code C_Omega(D_short, A') with
// A' = a*P_inf - P_1 - ... - P_k) within radius t, in the basic
// locator/evaluator style, plus a brute-force oracle for validation.
//
// The lift trick: with R = T_mat * G_0 the RREF of G_0 and pivot columns J,
// every x in rowspace(G_0) satisfies x = x[J] * T_mat * G_0, so the
// functional <w-twisted ev(f_i g_j), e> equals x[J] . (T_mat * S) where
// S = G_0 e is the raw syndrome. Only the J-restricted twisted product
// evaluations are precomputed.
#pragma once

#include <cstdint>
#include <vector>

#include "agdistill/csscode.hpp"
#include "agdistill/triortho.hpp"

namespace agd {

struct DecoderConfig {
  unsigned t = 0;
  unsigned degA1 = 0;
  std::size_t n = 0;
  std::size_t n_loc = 0;  // |monomial basis of L(degA1*P_inf)|
  std::size_t n_cof = 0;  // dim L(A' - A1)
  Mat loc_eval;           // n_loc x n: locator monomials at the n places
  Mat prodJ;              // (n_loc*n_cof) x |J|: twisted f_i*g_j at pivots
  Mat T_mat;              // (m-k) x (m-k): RREF row transform of G_0
  std::vector<std::size_t> pivot_cols;  // J
  Mat G0;                 // copy for the value solve
  std::vector<fe> w_tail; // w_{k+1..N}
  const Field* field = nullptr;
};

struct DecodeResult {
  std::vector<fe> e_hat;
  bool matched = false;  // syndrome(e_hat) == input syndrome
};

// degA1: smallest integer with degA1+1-g > t and
// degA1 < (a-k) - (2g-2) - t; pass preset_degA1 != 0 to force a value
// (checked against the same conditions).
DecoderConfig build_decoder(const ConstructedCode& code, unsigned t,
                            unsigned preset_degA1 = 0);

DecodeResult decode(const DecoderConfig& cfg, const std::vector<fe>& S);

// Minimal-weight coset leader by enumeration, for small instances only.
DecodeResult oracle_decode(const TriorthogonalMatrix& T,
                           const std::vector<fe>& S, unsigned radius,
                           std::uint64_t budget_cap = 200'000'000);

}  // namespace agd
