#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "agdistill/distill.hpp"

using namespace agd;

namespace {
ConstructedCode small_instance() {
  Curve C = Curve::rational(Field::make(5));
  return construct(C, 4, 1, 1);
}
}  // namespace

TEST_CASE("sample_error models") {
  Field F(5, Field::default_modulus(5));
  ErrorModel off;
  off.p = 0;
  CHECK(sample_error(F, off, 20, 1) == std::vector<fe>(20, 0));

  ErrorModel full;
  full.kind = ErrorModel::Kind::fixed_weight;
  full.weight = 20;
  for (fe v : sample_error(F, full, 20, 2)) CHECK(v != 0);

  ErrorModel two = full;
  two.weight = 2;
  for (std::uint64_t st = 0; st < 100; ++st) {
    unsigned wt = 0;
    for (fe v : sample_error(F, two, 30, st)) wt += v != 0;
    CHECK(wt == 2);
  }
  ErrorModel over = full;
  over.weight = 21;
  CHECK_THROWS(sample_error(F, over, 20, 0));

  // iid p = 0.5 over 10^4 coordinates: support within 3 sigma
  ErrorModel half;
  half.p = 0.5;
  unsigned support = 0;
  for (fe v : sample_error(F, half, 10000, 7)) support += v != 0;
  CHECK(std::abs(static_cast<double>(support) - 5000.0) < 3 * 50.0);
}

TEST_CASE("analytic bound and threshold proxy arithmetic") {
  CHECK(analytic_bound(30, 2, 0, 1) == 0);
  CHECK(analytic_bound(2, 2, 0.5, 1) == 0);  // t+1 > n
  CHECK(analytic_bound(30, 2, 0.05, 1) ==
        doctest::Approx(4060 * 0.05 * 0.05 * 0.05).epsilon(1e-12));
  CHECK(analytic_bound(30, 2, 0.9, 1) == 1.0);  // clamped
  const double pth = threshold_proxy(30, 2, 1);
  CHECK(pth > 0);
  CHECK(pth < 1);
}

TEST_CASE("overhead report") {
  ConstructedCode code = small_instance();
  OverheadReport o = overhead_report(code.T, 70);
  CHECK(o.zeta == 70.0 * 30);
  CHECK(o.xi == 1.0);
  CHECK(o.ratio == 70.0 * 30);
  TriorthogonalMatrix empty;
  empty.k = 0;
  CHECK_THROWS(overhead_report(empty, 1));
}

TEST_CASE("within-radius trials always succeed") {
  ConstructedCode code = small_instance();
  DecoderConfig dec = build_decoder(code, 2);
  ErrorModel m;
  m.kind = ErrorModel::Kind::fixed_weight;
  m.weight = 2;
  SimulationReport r = simulate(code.T, dec, m, 10000, 1, 4);
  CHECK(r.block_failures == 0);
  CHECK(r.epsilon == 0);
}

TEST_CASE("p = 0 never fails") {
  ConstructedCode code = small_instance();
  DecoderConfig dec = build_decoder(code, 2);
  ErrorModel m;
  m.p = 0;
  SimulationReport r = simulate(code.T, dec, m, 1000, 1, 2);
  CHECK(r.block_failures == 0);
}

TEST_CASE("reports are byte-identical across worker counts") {
  ConstructedCode code = small_instance();
  DecoderConfig dec = build_decoder(code, 2);
  ErrorModel m;
  m.p = 0.08;
  SimulationReport r1 = simulate(code.T, dec, m, 20000, 42, 1);
  SimulationReport r4 = simulate(code.T, dec, m, 20000, 42, 4);
  SimulationReport r7 = simulate(code.T, dec, m, 20000, 42, 7);
  CHECK(report_json(r1) == report_json(r4));
  CHECK(report_json(r1) == report_json(r7));
  CHECK(report_csv(r1) == report_csv(r4));
  CHECK(r1.ci_low <= r1.epsilon);
  CHECK(r1.epsilon <= r1.ci_high);
}

TEST_CASE("a logical operator as the residual counts as a failure") {
  ConstructedCode code = small_instance();
  const TriorthogonalMatrix& T = code.T;
  Mat hat = logical_z_ops(T);
  std::vector<fe> e(hat.row(0), hat.row(0) + T.n);
  // ghat has zero G_0 syndrome, so decode returns 0, the residual is the
  // logical itself and the trial fails.
  CHECK(syndrome(T, e) == std::vector<fe>(T.m - T.k, 0));
  CHECK(!is_stabilizer_equiv(T, e));
}

TEST_CASE("trials = 0 rejected") {
  ConstructedCode code = small_instance();
  DecoderConfig dec = build_decoder(code, 2);
  CHECK_THROWS(simulate(code.T, dec, ErrorModel{}, 0, 1, 1));
}
