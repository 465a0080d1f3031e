#include <doctest.h>

#include <cstdint>
#include <vector>

#include "agdistill/csscode.hpp"

using namespace agd;

namespace {
ConstructedCode small_instance() {
  Curve C = Curve::rational(Field::make(5));
  return construct(C, 4, 1, 1);
}

// Minimal stand-in carrying only the fields quantum_params reads.
TriorthogonalMatrix param_stub(unsigned a, unsigned k, std::size_t n) {
  TriorthogonalMatrix T;
  T.field = Field::make(5);
  T.n = n;
  T.k = k;
  T.m = 1;
  T.prov.a = a;
  T.prov.k = k;
  return T;
}
}  // namespace

TEST_CASE("parameter formulas at all three scales") {
  ConstructedCode code = small_instance();
  QuantumCodeParams qp = quantum_params(code.T, 0);
  CHECK(qp.n == 30);
  CHECK(qp.k == 1);
  CHECK(qp.d_lower == 5);
  CHECK(qp.t == 2);
  CHECK(qp.qubits_physical == 150);
  CHECK(qp.qubits_logical == 5);

  QuantumCodeParams mid = quantum_params(param_stub(500, 100, 4000), 120);
  CHECK(mid.d_lower == 162);
  CHECK(mid.t == 20);  // (162-120-1)/2 = 20.5 -> 20

  QuantumCodeParams big = quantum_params(param_stub(2232, 620, 32000), 496);
  CHECK(big.d_lower == 622);
  CHECK(big.t == 62);

  // t override downward; upward rejected
  CHECK(quantum_params(code.T, 0, 1).t == 1);
  CHECK_THROWS(quantum_params(code.T, 0, 3));
  // bound admits no positive t -> rejected
  CHECK_THROWS(quantum_params(param_stub(10, 1, 100), 8));
}

TEST_CASE("logical Z operators are dual to the G_1 rows") {
  ConstructedCode code = small_instance();
  const TriorthogonalMatrix& T = code.T;
  const Field& F = *T.field;
  Mat hat = logical_z_ops(T);
  Mat G1 = T.g1(), G0 = T.g0();
  REQUIRE(hat.rows == T.k);
  for (std::size_t a = 0; a < T.k; ++a)
    for (std::size_t b = 0; b < T.k; ++b) {
      fe acc = 0;
      for (std::size_t i = 0; i < T.n; ++i)
        acc = static_cast<fe>(acc ^ F.mul(G1.at(a, i), hat.at(b, i)));
      CHECK(acc == (a == b ? 1 : 0));
    }
  // rows of G_0 pair to zero with every logical
  for (std::size_t c = 0; c < T.m - T.k; ++c)
    for (std::size_t b = 0; b < T.k; ++b) {
      fe acc = 0;
      for (std::size_t i = 0; i < T.n; ++i)
        acc = static_cast<fe>(acc ^ F.mul(G0.at(c, i), hat.at(b, i)));
      CHECK(acc == 0);
    }
}

TEST_CASE("syndrome map: zero, linearity, null vectors") {
  ConstructedCode code = small_instance();
  const TriorthogonalMatrix& T = code.T;
  const Field& F = *T.field;
  CHECK(syndrome(T, std::vector<fe>(T.n, 0)) ==
        std::vector<fe>(T.m - T.k, 0));
  CHECK_THROWS(syndrome(T, std::vector<fe>(T.n + 1, 0)));

  std::uint64_t st = 99;
  auto rnd = [&st]() {
    st = st * 6364136223846793005ull + 1442695040888963407ull;
    return st >> 33;
  };
  std::vector<fe> e1(T.n), e2(T.n), sum(T.n);
  for (std::size_t i = 0; i < T.n; ++i) {
    e1[i] = static_cast<fe>(rnd() % 32);
    e2[i] = static_cast<fe>(rnd() % 32);
    sum[i] = static_cast<fe>(e1[i] ^ e2[i]);
  }
  const auto s1 = syndrome(T, e1), s2 = syndrome(T, e2);
  auto s12 = syndrome(T, sum);
  for (std::size_t i = 0; i < s12.size(); ++i)
    CHECK(s12[i] == (s1[i] ^ s2[i]));

  // a right-null vector of G_0 has zero syndrome
  Mat K = kernel_basis(F, T.g0());
  REQUIRE(K.rows > 0);
  std::vector<fe> nv(K.row(0), K.row(0) + T.n);
  CHECK(syndrome(T, nv) == std::vector<fe>(T.m - T.k, 0));
}

TEST_CASE("stabilizer equivalence") {
  ConstructedCode code = small_instance();
  const TriorthogonalMatrix& T = code.T;
  const Field& F = *T.field;
  CHECK(is_stabilizer_equiv(T, std::vector<fe>(T.n, 0)));
  // a logical operator is not equivalent to identity
  Mat hat = logical_z_ops(T);
  std::vector<fe> g1hat(hat.row(0), hat.row(0) + T.n);
  CHECK(!is_stabilizer_equiv(T, g1hat));
  // any vector in the right null space of the full G is
  Mat K = kernel_basis(F, T.rows);
  REQUIRE(K.rows == T.n - T.m);
  for (std::size_t r = 0; r < K.rows; ++r) {
    std::vector<fe> v(K.row(r), K.row(r) + T.n);
    CHECK(is_stabilizer_equiv(T, v));
  }
}

TEST_CASE("dual distance certification on the small instance") {
  ConstructedCode code = small_instance();
  const TriorthogonalMatrix& T = code.T;
  const Field& F = *T.field;
  Mat G0 = T.g0();
  CHECK(certify_dual_distance(F, G0, 1));  // vacuous
  CHECK(certify_dual_distance(F, G0, 5));  // all C(30,4) subsets
  CHECK(!certify_dual_distance(F, G0, static_cast<unsigned>(T.n) + 2));
  // cost cap triggers
  CHECK_THROWS(certify_dual_distance(F, G0, 5, 10));
}

TEST_CASE("X-distance claim at small scale: weight in span(G)\\span(G_0)") {
  // Scaling a vector preserves weight, so it suffices to scan g_1 + z over
  // all z in span(G_0): 31^4 cosets representatives.
  ConstructedCode code = small_instance();
  const TriorthogonalMatrix& T = code.T;
  const Field& F = *T.field;
  Mat G1 = T.g1(), G0 = T.g0();
  REQUIRE(T.m - T.k == 4);
  std::size_t min_wt = T.n;
  std::vector<fe> v(T.n);
  for (std::uint32_t c0 = 0; c0 < 32; ++c0)
    for (std::uint32_t c1 = 0; c1 < 32; ++c1)
      for (std::uint32_t c2 = 0; c2 < 32; ++c2)
        for (std::uint32_t c3 = 0; c3 < 32; ++c3) {
          const fe cs[4] = {static_cast<fe>(c0), static_cast<fe>(c1),
                            static_cast<fe>(c2), static_cast<fe>(c3)};
          std::size_t wt = 0;
          for (std::size_t i = 0; i < T.n; ++i) {
            fe x = G1.at(0, i);
            for (int r = 0; r < 4; ++r)
              x = static_cast<fe>(x ^ F.mul(cs[r], G0.at(r, i)));
            wt += x != 0;
          }
          if (wt < min_wt) min_wt = wt;
        }
  CHECK(min_wt >= 5);  // certified d_Z
}
