#include "agdistill/agcode.hpp"

#include <random>
#include <stdexcept>

namespace agd {

EvaluationCode build_code(const Curve& curve, unsigned a,
                          const std::vector<Place>& places) {
  const unsigned g = curve.genus();
  if (a >= places.size() || a < g || (2 * g >= 1 && a + 1 < 2 * g)) {
    throw std::invalid_argument("build_code: need max(g, 2g-1) <= a < n");
  }
  EvaluationCode code;
  code.curve = &curve;
  code.a = a;
  code.places = places;
  code.gen = curve.evaluation_matrix(a, places);
  code.code_rank = rank(curve.field(), code.gen);
  if (code.code_rank != a + 1 - g) {
    throw std::logic_error("build_code: rank != a+1-g");
  }
  return code;
}

namespace {

// Exact orthogonality re-check of a residue vector against sampled (or all)
// rows of the evaluation matrix; throws on any violation.
void verify_residue(const Curve& curve, unsigned deg7AE,
                    const std::vector<Place>& places,
                    const std::vector<fe>& v, std::uint64_t seed) {
  const Field& F = curve.field();
  const auto basis = curve.rr_basis(deg7AE);
  std::mt19937_64 rng(seed ^ 0x7e57ab1e5eedull);
  const std::size_t checks = std::min<std::size_t>(basis.size(), 100);
  for (std::size_t t = 0; t < checks; ++t) {
    const auto& elem =
        basis.size() <= 100 ? basis[t] : basis[rng() % basis.size()];
    fe acc = 0;
    for (std::size_t i = 0; i < places.size(); ++i) {
      if (v[i]) acc ^= F.mul(v[i], curve.evaluate(elem, places[i]));
    }
    if (acc != 0) {
      throw std::logic_error("dual_residue_vector: orthogonality check failed");
    }
  }
}

}  // namespace

ResidueVector dual_residue_vector(const Curve& curve, unsigned deg7AE,
                                  const std::vector<Place>& places,
                                  std::uint64_t seed, const Place* reserved) {
  const Field& F = curve.field();
  ResidueVector out;

  if (curve.kind() == CurveKind::hermitian && reserved != nullptr) {
    // Closed form: h = x + x(P*) lies in L((g+1)P_inf - P*); its values at
    // the evaluation places are the local components of h * dx/(x^{q0^2}-x).
    out.values.reserve(places.size());
    for (const auto& p : places) {
      out.values.push_back(F.add(p.x, reserved->x));
    }
  } else {
    Mat M = curve.evaluation_matrix(deg7AE, places);
    Mat K = kernel_basis(F, M);
    if (K.rows == 0) {
      throw std::runtime_error("dual_residue_vector: trivial kernel");
    }
    out.values.assign(K.row(0), K.row(0) + K.cols);
  }

  bool all_zero = true;
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    if (out.values[i] == 0) {
      out.zero_support.push_back(i);
    } else {
      all_zero = false;
    }
  }
  if (all_zero) throw std::runtime_error("dual_residue_vector: zero vector");
  if (out.zero_support.size() > curve.genus()) {
    throw std::logic_error("dual_residue_vector: zero support exceeds genus");
  }

  verify_residue(curve, deg7AE, places, out.values, seed);
  return out;
}

Mat vanishing_subbasis(const Field& F, const EvaluationCode& code,
                       const std::vector<std::size_t>& punct) {
  const unsigned g = code.curve->genus();
  const long bound = dual_distance_bound(code.a, g);
  if (static_cast<long>(punct.size()) >= bound) {
    throw std::invalid_argument("vanishing_subbasis: |punct| >= dual bound");
  }
  // Coefficient vectors c with (c * gen) zero on the punctured columns:
  // right kernel of the transposed punctured column block.
  Mat cols(punct.size(), code.gen.rows);
  for (std::size_t r = 0; r < punct.size(); ++r) {
    for (std::size_t j = 0; j < code.gen.rows; ++j) {
      cols.at(r, j) = code.gen.at(j, punct[r]);
    }
  }
  Mat K = kernel_basis(F, cols);
  const std::size_t expect = code.a - punct.size() + 1 - g;
  if (K.rows != expect) {
    throw std::logic_error("vanishing_subbasis: dimension mismatch");
  }
  Mat out(K.rows, code.gen.cols);
  for (std::size_t r = 0; r < K.rows; ++r) {
    for (std::size_t j = 0; j < code.gen.rows; ++j) {
      if (K.at(r, j)) F.axpy(out.row(r), code.gen.row(j), out.cols, K.at(r, j));
    }
  }
  return out;
}

}  // namespace agd
