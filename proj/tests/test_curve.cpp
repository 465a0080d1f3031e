#include <doctest.h>

#include <vector>

#include "agdistill/curve.hpp"

using namespace agd;

TEST_CASE("rational backend: places and bases") {
  Curve C = Curve::rational(Field::make(5));
  CHECK(C.genus() == 0);
  CHECK(C.descriptor() == "rational:s=5");
  const auto places = C.affine_places();
  REQUIRE(places.size() == 32);
  for (std::size_t i = 0; i < 32; ++i) {
    CHECK(places[i].x == i);  // mask-ascending canonical order
    CHECK(places[i].y == 0);
  }
  const auto basis = C.rr_basis(4);
  REQUIRE(basis.size() == 5);
  for (unsigned i = 0; i < 5; ++i) {
    CHECK(basis[i].i == i);
    CHECK(basis[i].j == 0);
  }
}

TEST_CASE("hermitian q0=4: 64 places on the curve, genus 6") {
  Curve C = Curve::hermitian(Field::make(4), 4);
  CHECK(C.genus() == 6);
  const Field& F = C.field();
  const auto places = C.affine_places();
  REQUIRE(places.size() == 64);  // q0^3
  for (const Place& P : places) {
    // y^4 + y = x^5
    CHECK(F.add(F.pow(P.y, 4), P.y) == F.pow(P.x, 5));
  }
  // m = 2g-1 = 11: dimension 11+1-6 = 6 (monomials with 4i+5j <= 11)
  CHECK(C.rr_basis(11).size() == 6);
}

TEST_CASE("hermitian q0=32: exactly q0^3 = 32768 affine places") {
  Curve C = Curve::hermitian(Field::make(10), 32);
  CHECK(C.genus() == 496);
  CHECK(C.affine_places().size() == 32768);
  // paper-scale Riemann-Roch dimension
  CHECK(C.rr_basis(2232).size() == 2232 + 1 - 496);
}

TEST_CASE("rr_basis dimension formula and Riemann inequality") {
  Curve H = Curve::hermitian(Field::make(8), 16);
  const unsigned g = H.genus();
  CHECK(g == 120);
  for (unsigned m = 2 * g - 1; m < 2 * g - 1 + 20; ++m)
    CHECK(H.rr_basis(m).size() == m + 1 - g);
  for (unsigned m = 0; m < 2 * g - 1; ++m) {
    const long lower = static_cast<long>(m) + 1 - static_cast<long>(g);
    CHECK(static_cast<long>(H.rr_basis(m).size()) >= lower);
  }
  Curve R = Curve::rational(Field::make(5));
  for (unsigned m = 0; m < 20; ++m) CHECK(R.rr_basis(m).size() == m + 1);
}

TEST_CASE("rr_basis is ordered by pole order with valid exponents") {
  Curve H = Curve::hermitian(Field::make(8), 16);
  const auto basis = H.rr_basis(300);
  unsigned prev = 0;
  for (const auto& e : basis) {
    CHECK(e.j <= 15);
    const unsigned pole = e.i * 16 + e.j * 17;
    CHECK(pole <= 300);
    CHECK(pole >= prev);
    prev = pole;
  }
}

TEST_CASE("evaluate: monomials at places") {
  Curve H = Curve::hermitian(Field::make(4), 4);
  const Field& F = H.field();
  const auto places = H.affine_places();
  const Place& P = places[37];
  CHECK(H.evaluate({0, 0}, P) == 1);
  CHECK(H.evaluate({1, 0}, P) == P.x);
  CHECK(H.evaluate({2, 1}, P) == F.mul(F.sq(P.x), P.y));
}

TEST_CASE("evaluation_matrix: ranks and edge cases") {
  Curve R = Curve::rational(Field::make(5));
  const auto all = R.affine_places();
  // m=1 over all 32 places: 2 x 32, rank 2
  Mat M = R.evaluation_matrix(1, all);
  CHECK(M.rows == 2);
  CHECK(M.cols == 32);
  CHECK(rank(R.field(), M) == 2);
  // more monomials than places: rank = #places
  std::vector<Place> five(all.begin(), all.begin() + 5);
  CHECK(rank(R.field(), R.evaluation_matrix(6, five)) == 5);
  // injectivity below the place count
  CHECK(rank(R.field(), R.evaluation_matrix(3, five)) == 4);
  // empty place list
  CHECK(R.evaluation_matrix(3, {}).cols == 0);
  // duplicate places rejected
  std::vector<Place> dup = {all[0], all[0]};
  CHECK_THROWS(R.evaluation_matrix(1, dup));
}

TEST_CASE("descriptor strings roundtrip") {
  CHECK(Curve::from_descriptor("rational:s=5").descriptor() ==
        "rational:s=5");
  CHECK(Curve::from_descriptor("hermitian:q0=4").descriptor() ==
        "hermitian:q0=4");
  CHECK(Curve::from_descriptor("hermitian:q0=16").genus() == 120);
  CHECK_THROWS(Curve::from_descriptor("elliptic:j=0"));
}
