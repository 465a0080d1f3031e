#include <doctest.h>

#include <cstdint>
#include <vector>

#include "agdistill/linalg.hpp"

using namespace agd;

namespace {
std::uint64_t rng_state = 0x9e3779b97f4a7c15ull;
std::uint64_t rnd() {
  std::uint64_t z = (rng_state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}
Mat random_mat(const Field& F, std::size_t r, std::size_t c) {
  Mat M(r, c);
  for (fe& v : M.a) v = static_cast<fe>(rnd() % F.q());
  return M;
}
}  // namespace

TEST_CASE("rref of the identity is the identity with full rank") {
  Field F(5, Field::default_modulus(5));
  Mat M(4, 4);
  for (std::size_t i = 0; i < 4; ++i) M.at(i, i) = 1;
  const Mat orig = M;
  auto res = rref(F, M);
  CHECK(res.rank == 4);
  CHECK(res.pivot_cols == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(M.a == orig.a);
}

TEST_CASE("Vandermonde ranks") {
  Field F(5, Field::default_modulus(5));
  // rows x^0..x^2 evaluated at 5 distinct points: rank 3.
  const fe pts[] = {1, 2, 3, 4, 5};
  Mat M(3, 5);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 5; ++c)
      M.at(r, c) = F.pow(pts[c], r);
  CHECK(rank(F, M) == 3);
  // 6 monomial rows at the same 5 points: rank capped at 5.
  Mat M2(6, 5);
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 5; ++c)
      M2.at(r, c) = F.pow(pts[c], r);
  CHECK(rank(F, M2) == 5);
}

TEST_CASE("rref transform accumulates T with R = T * M") {
  Field F(8, Field::default_modulus(8));
  const Mat M0 = random_mat(F, 6, 9);
  Mat M = M0;
  Mat T;
  rref(F, M, &T);
  CHECK(T.rows == 6);
  CHECK(T.cols == 6);
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 9; ++c) {
      fe acc = 0;
      for (std::size_t j = 0; j < 6; ++j)
        acc = static_cast<fe>(acc ^ F.mul(T.at(r, j), M0.at(j, c)));
      CHECK(acc == M.at(r, c));
    }
}

TEST_CASE("kernel basis spans the right null space; rank-nullity") {
  Field F(5, Field::default_modulus(5));
  for (int it = 0; it < 50; ++it) {
    const Mat M = random_mat(F, 4, 7);
    const std::size_t rk = rank(F, M);
    const Mat K = kernel_basis(F, M);
    CHECK(K.rows == 7 - rk);
    for (std::size_t v = 0; v < K.rows; ++v) {
      std::vector<fe> x(K.row(v), K.row(v) + 7);
      for (fe y : mat_vec(F, M, x)) CHECK(y == 0);
    }
    // kernel rows are independent
    CHECK(rank(F, K) == K.rows);
  }
}

TEST_CASE("first kernel vector is deterministic across calls") {
  Field F(5, Field::default_modulus(5));
  const Mat M = random_mat(F, 3, 8);
  const Mat K1 = kernel_basis(F, M);
  const Mat K2 = kernel_basis(F, M);
  CHECK(K1.a == K2.a);
}

TEST_CASE("solve: consistent systems solved, inconsistent rejected") {
  Field F(8, Field::default_modulus(8));
  for (int it = 0; it < 50; ++it) {
    const Mat M = random_mat(F, 5, 8);
    std::vector<fe> x(8);
    for (fe& v : x) v = static_cast<fe>(rnd() % F.q());
    const std::vector<fe> b = mat_vec(F, M, x);
    auto sol = solve(F, M, b);
    REQUIRE(sol.has_value());
    CHECK(mat_vec(F, M, *sol) == b);
  }
  // Overdetermined inconsistent system: [1;1] x = (1, 2).
  Mat M(2, 1);
  M.at(0, 0) = 1;
  M.at(1, 0) = 1;
  CHECK(!solve(F, M, {1, 2}).has_value());
}

TEST_CASE("mat_vec zero cases") {
  Field F(5, Field::default_modulus(5));
  const Mat M = random_mat(F, 3, 4);
  CHECK(mat_vec(F, M, {0, 0, 0, 0}) == std::vector<fe>{0, 0, 0});
}
