#include "agdistill/distill.hpp"

#include <atomic>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace agd {
namespace {

// Small deterministic per-trial generator over a splitmix64-mixed state.
struct TrialRng {
  std::uint64_t state;
  explicit TrialRng(std::uint64_t stream) : state(stream) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  double uniform() { return (next() >> 11) * 0x1.0p-53; }
};

}  // namespace

std::vector<fe> sample_error(const Field& F, const ErrorModel& model,
                             std::size_t n, std::uint64_t stream) {
  TrialRng rng(stream);
  std::vector<fe> e(n, 0);
  const std::uint32_t nz = F.q() - 1;
  if (model.kind == ErrorModel::Kind::iid) {
    for (std::size_t i = 0; i < n; ++i) {
      if (rng.uniform() < model.p) {
        e[i] = static_cast<fe>(1 + rng.next() % nz);
      }
    }
  } else {
    if (model.weight > n) throw std::invalid_argument("sample_error: weight > n");
    // Floyd-style distinct support sampling, then uniform nonzero values.
    std::vector<std::size_t> support;
    for (std::size_t j = n - model.weight; j < n; ++j) {
      const std::size_t r = rng.next() % (j + 1);
      bool seen = false;
      for (std::size_t v : support) seen = seen || v == r;
      support.push_back(seen ? j : r);
    }
    for (std::size_t idx : support) e[idx] = static_cast<fe>(1 + rng.next() % nz);
  }
  return e;
}

bool run_trial(const TriorthogonalMatrix& T, const DecoderConfig& decoder,
               const ErrorModel& model, std::uint64_t stream) {
  const std::vector<fe> e = sample_error(*T.field, model, T.n, stream);
  const std::vector<fe> S = syndrome(T, e);
  const DecodeResult d = decode(decoder, S);
  std::vector<fe> residual(T.n);
  for (std::size_t i = 0; i < T.n; ++i) residual[i] = e[i] ^ d.e_hat[i];
  return is_stabilizer_equiv(T, residual);
}

SimulationReport simulate(const TriorthogonalMatrix& T,
                          const DecoderConfig& decoder,
                          const ErrorModel& model, std::uint64_t trials,
                          std::uint64_t seed, unsigned workers) {
  if (trials < 1) throw std::invalid_argument("simulate: trials < 1");
  if (workers < 1) workers = 1;

  std::atomic<std::uint64_t> failures{0};
  std::atomic<std::uint64_t> cursor{0};
  auto worker = [&]() {
    std::uint64_t local = 0;
    for (;;) {
      const std::uint64_t begin = cursor.fetch_add(1024);
      if (begin >= trials) break;
      const std::uint64_t end = std::min(trials, begin + 1024);
      for (std::uint64_t i = begin; i < end; ++i) {
        if (!run_trial(T, decoder, model, mix_seed(seed, i))) ++local;
      }
    }
    failures += local;
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < workers; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  SimulationReport r;
  r.trials = trials;
  r.block_failures = failures;
  r.epsilon = static_cast<double>(r.block_failures) / trials;
  const double z = 1.959963984540054;
  const double nn = static_cast<double>(trials);
  const double ph = r.epsilon;
  const double den = 1 + z * z / nn;
  const double mid = ph + z * z / (2 * nn);
  const double rad = z * std::sqrt(ph * (1 - ph) / nn + z * z / (4 * nn * nn));
  r.ci_low = std::max(0.0, (mid - rad) / den);
  r.ci_high = std::min(1.0, (mid + rad) / den);
  r.p = model.kind == ErrorModel::Kind::iid ? model.p : 0.0;
  r.weight = model.kind == ErrorModel::Kind::fixed_weight ? model.weight : 0;
  r.model = model.kind == ErrorModel::Kind::iid ? "iid" : "fixed_weight";
  r.n = T.n;
  r.k = T.k;
  r.t = decoder.t;
  r.c_conv = 1;
  r.seed = seed;
  r.analytic = model.kind == ErrorModel::Kind::iid
                   ? analytic_bound(T.n, decoder.t, model.p, r.c_conv)
                   : 0.0;
  r.p_threshold_proxy = threshold_proxy(T.n, decoder.t, r.c_conv);
  return r;
}

double analytic_bound(std::size_t n, unsigned t, double p, double c_conv) {
  if (p <= 0) return 0;
  if (t + 1 > n) return 0;
  const double lchoose = std::lgamma(static_cast<double>(n) + 1) -
                         std::lgamma(static_cast<double>(t) + 2) -
                         std::lgamma(static_cast<double>(n - t));
  const double lg = lchoose + (t + 1) * std::log(c_conv * p);
  return std::min(1.0, std::exp(lg));
}

double threshold_proxy(std::size_t n, unsigned t, double c_conv) {
  const double x = static_cast<double>(t + 1) / static_cast<double>(n);
  const double h = -x * std::log2(x) - (1 - x) * std::log2(1 - x);
  return 1.0 / (c_conv * std::pow(2.0, (static_cast<double>(n) / (t + 1)) * h));
}

OverheadReport overhead_report(const TriorthogonalMatrix& T, double c_conv) {
  if (T.k == 0) throw std::invalid_argument("overhead_report: k = 0");
  OverheadReport o;
  o.zeta = c_conv * static_cast<double>(T.n);
  o.xi = static_cast<double>(T.k);
  o.ratio = o.zeta / o.xi;
  return o;
}

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

std::string report_json(const SimulationReport& r) {
  std::ostringstream os;
  os << "{\n"
     << "  \"schema\": \"agdistill-simulation-v1\",\n"
     << "  \"model\": \"" << r.model << "\",\n"
     << "  \"p\": " << fmt(r.p) << ",\n"
     << "  \"weight\": " << r.weight << ",\n"
     << "  \"trials\": " << r.trials << ",\n"
     << "  \"block_failures\": " << r.block_failures << ",\n"
     << "  \"epsilon\": " << fmt(r.epsilon) << ",\n"
     << "  \"ci95_low\": " << fmt(r.ci_low) << ",\n"
     << "  \"ci95_high\": " << fmt(r.ci_high) << ",\n"
     << "  \"analytic_bound\": " << fmt(r.analytic) << ",\n"
     << "  \"p_threshold_proxy\": " << fmt(r.p_threshold_proxy) << ",\n"
     << "  \"n\": " << r.n << ",\n"
     << "  \"k\": " << r.k << ",\n"
     << "  \"t\": " << r.t << ",\n"
     << "  \"c_conv\": " << fmt(r.c_conv) << ",\n"
     << "  \"seed\": " << r.seed << "\n"
     << "}\n";
  return os.str();
}

std::string report_csv(const SimulationReport& r) {
  std::ostringstream os;
  os << "model,p,weight,trials,block_failures,epsilon,ci95_low,ci95_high,"
        "analytic_bound,p_threshold_proxy,n,k,t,c_conv,seed\n"
     << r.model << ',' << fmt(r.p) << ',' << r.weight << ',' << r.trials << ','
     << r.block_failures << ',' << fmt(r.epsilon) << ',' << fmt(r.ci_low)
     << ',' << fmt(r.ci_high) << ',' << fmt(r.analytic) << ','
     << fmt(r.p_threshold_proxy) << ',' << r.n << ',' << r.k << ',' << r.t
     << ',' << fmt(r.c_conv) << ',' << r.seed << "\n";
  return os.str();
}

}  // namespace agd
