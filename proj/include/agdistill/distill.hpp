// Monte-Carlo simulation of the distillation protocol at the qudit Z-error
// level: sample error, decode from syndrome, count block failures (residual
// not in G^perp), compare against the analytic union bound. Per-trial
// randomness comes from counter-based substreams (seed xor trial index), so
// reports are independent of the worker count.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "agdistill/decoder.hpp"

namespace agd {

struct ErrorModel {
  enum class Kind { iid, fixed_weight } kind = Kind::iid;
  double p = 0;         // iid per-qudit flip probability
  unsigned weight = 0;  // fixed_weight exact weight
};

struct SimulationReport {
  std::uint64_t trials = 0;
  std::uint64_t block_failures = 0;
  double epsilon = 0;  // failure fraction
  double ci_low = 0, ci_high = 0;  // Wilson 95%
  double analytic = 0;
  double p_threshold_proxy = 0;
  double p = 0;  // 0 for fixed_weight
  unsigned weight = 0;
  std::string model;
  std::size_t n = 0, k = 0;
  unsigned t = 0;
  double c_conv = 1;
  std::uint64_t seed = 0;
};

std::vector<fe> sample_error(const Field& F, const ErrorModel& model,
                             std::size_t n, std::uint64_t stream);

// e <- sample; S <- G_0 e; e_hat <- decode(S); success iff G(e + e_hat) = 0.
bool run_trial(const TriorthogonalMatrix& T, const DecoderConfig& decoder,
               const ErrorModel& model, std::uint64_t stream);

SimulationReport simulate(const TriorthogonalMatrix& T,
                          const DecoderConfig& decoder,
                          const ErrorModel& model, std::uint64_t trials,
                          std::uint64_t seed, unsigned workers);

// min(1, C(n,t+1) (C_conv p)^{t+1}) via log-gamma.
double analytic_bound(std::size_t n, unsigned t, double p, double c_conv);

// Threshold proxy 1 / (C_conv 2^{(n/(t+1)) h((t+1)/n)}).
double threshold_proxy(std::size_t n, unsigned t, double c_conv);

struct OverheadReport {
  double zeta = 0;   // C_conv * n input states
  double xi = 0;     // k output states
  double ratio = 0;  // C_conv * n / k
};
OverheadReport overhead_report(const TriorthogonalMatrix& T, double c_conv);

std::string report_json(const SimulationReport& r);
std::string report_csv(const SimulationReport& r);

}  // namespace agd
