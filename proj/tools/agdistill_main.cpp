// Command-line surface: construct artifacts, verify them, decompose the
// phase polynomial into Z/CZ/CCZ gates, and run Monte-Carlo simulations.
// Exit codes: 0 pass, 1 verification failure, 2 usage/parameter error.
#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <thread>

#include "agdistill/csscode.hpp"
#include "agdistill/decoder.hpp"
#include "agdistill/distill.hpp"
#include "agdistill/manifest.hpp"
#include "agdistill/phasepoly.hpp"
#include "agdistill/statecheck.hpp"
#include "agdistill/triortho.hpp"

namespace {

using agd::fe;
using ordered_json = nlohmann::ordered_json;

unsigned default_workers() {
  if (const char* env = std::getenv("AGDISTILL_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// Smallest locator degree admitted by the Riemann bound at radius t.
unsigned pick_degA1(unsigned a, unsigned k, unsigned g, unsigned t) {
  const long hi = static_cast<long>(a) - k - (2L * g - 2) - t;
  for (long deg = 0; deg < hi; ++deg)
    if (deg + 1 - static_cast<long>(g) > static_cast<long>(t))
      return static_cast<unsigned>(deg);
  throw std::invalid_argument("no locator degree: t too large for the code");
}

int cmd_construct(const std::string& preset, std::string curve_desc,
                  unsigned a, unsigned k, std::uint64_t seed,
                  const std::string& out, bool gzip) {
  if (preset == "small") {
    curve_desc = "rational:s=5";
    a = 4;
    k = 1;
  } else if (preset == "paper") {
    curve_desc = "hermitian:q0=32";
    a = 2232;
    k = 620;
  } else if (!preset.empty()) {
    std::cerr << "unknown preset: " << preset << "\n";
    return 2;
  }
  if (curve_desc.empty() || a == 0 || k == 0) {
    std::cerr << "construct requires --preset or --curve/--a/--k\n";
    return 2;
  }
  agd::Curve curve = agd::Curve::from_descriptor(curve_desc);
  agd::ConstructedCode code = agd::construct(curve, a, k, seed);
  agd::QuantumCodeParams qp = agd::quantum_params(code.T, curve.genus());
  const unsigned degA1 = pick_degA1(a, k, curve.genus(), qp.t);
  agd::ArtifactManifest man = agd::make_manifest(code, qp.t, degA1);
  agd::save_manifest(man, out, gzip);
  agd::OverheadReport oh = agd::overhead_report(code.T, 1.0);
  std::cout << "curve   " << curve_desc << "\n"
            << "n       " << code.T.n << "\n"
            << "k       " << code.T.k << "\n"
            << "m       " << code.T.m << "\n"
            << "d_lower " << qp.d_lower << "\n"
            << "t       " << qp.t << "\n"
            << "degA1   " << degA1 << "\n"
            << "overhead n/k = " << oh.ratio << "\n"
            << "wrote   " << out << "\n";
  return 0;
}

int cmd_verify(const std::string& path, const std::string& mode,
               std::size_t trials, std::uint64_t seed, bool states) {
  agd::ArtifactManifest man = agd::load_manifest(path);
  agd::ConstructedCode code = agd::restore_code(man);
  agd::VerifyMode vm;
  vm.exhaustive = mode == "exhaustive";
  vm.trials = trials;
  vm.seed = seed;
  agd::TriReport rep = agd::is_triorthogonal(code.T, vm);
  const std::size_t tv_trials = vm.exhaustive ? 100 : std::max<std::size_t>(
                                                          1, trials / 10);
  const bool tv = agd::transversality_check(code.T, tv_trials, seed);

  ordered_json j;
  j["artifact"] = path;
  j["mode"] = mode;
  j["triorthogonal"] = rep.ok;
  j["triples_checked"] = rep.triples_checked;
  j["pairs_checked"] = rep.pairs_checked;
  if (rep.bad_triple)
    j["counterexample_triple"] = {(*rep.bad_triple)[0], (*rep.bad_triple)[1],
                                  (*rep.bad_triple)[2]};
  if (rep.bad_pair)
    j["counterexample_pair"] = {(*rep.bad_pair)[0], (*rep.bad_pair)[1]};
  j["transversality"] = tv;
  j["transversality_trials"] = tv_trials;
  bool ok = rep.ok && tv;
  if (states) {
    const double du = agd::teleport_u_check(seed);
    const double dc = agd::teleport_ccz_check(seed);
    const double dt = agd::twirl_check(seed);
    j["teleport_u_dev"] = du;
    j["teleport_ccz_dev"] = dc;
    j["twirl_offdiag"] = dt;
    ok = ok && du < 1e-10 && dc < 1e-10 && dt < 1e-12;
  }
  j["pass"] = ok;
  std::cout << j.dump(2) << "\n";
  return ok ? 0 : 1;
}

ordered_json decomposition_json(const agd::GateDecomposition& d,
                                const agd::SelfDualBasis& basis) {
  ordered_json j;
  std::vector<std::string> bhex;
  for (fe x : basis.alphas) bhex.push_back(basis.field->to_hex(x));
  j["s"] = basis.field->s();
  j["modulus"] = basis.field->modulus();
  j["basis"] = bhex;
  j["constant"] = d.poly.constant;
  j["z"] = d.poly.z;
  j["cz"] = d.poly.cz;
  j["ccz"] = d.poly.ccz;
  j["c"] = d.c;
  return j;
}

int cmd_decompose(const std::string& which, const std::string& file,
                  std::size_t budget, std::uint64_t seed,
                  const std::string& out) {
  agd::SelfDualBasis basis;
  if (which == "paper") {
    basis = agd::paper_basis_s10();
  } else if (which == "search") {
    basis = agd::search_min_ccz(agd::Field::make(10), budget, seed).basis;
  } else if (which == "file") {
    std::ifstream in(file);
    if (!in) {
      std::cerr << "cannot open basis file: " << file << "\n";
      return 2;
    }
    ordered_json j = ordered_json::parse(in);
    auto F = agd::Field::make(j.at("s").get<unsigned>(),
                              j.at("modulus").get<std::uint32_t>());
    basis.field = F;
    for (const auto& h : j.at("basis"))
      basis.alphas.push_back(F->from_hex(h.get<std::string>()));
    if (!agd::is_self_dual(basis)) {
      std::cerr << "basis in " << file << " is not self-dual\n";
      return 1;
    }
  } else {
    std::cerr << "unknown --basis: " << which << "\n";
    return 2;
  }
  agd::GateDecomposition d = agd::decomposition(basis);
  ordered_json j = decomposition_json(d, basis);
  std::cout << j.dump(2) << "\n";
  if (!out.empty()) {
    std::ofstream os(out);
    os << j.dump(2) << "\n";
  }
  return 0;
}

int cmd_simulate(const std::string& path, double p, long weight,
                 std::uint64_t trials, std::uint64_t seed, unsigned workers,
                 const std::string& json_path, const std::string& csv_path) {
  if (trials == 0) {
    std::cerr << "simulate requires --trials >= 1\n";
    return 2;
  }
  if ((p > 0) == (weight >= 0)) {
    std::cerr << "simulate requires exactly one of --p or --weight\n";
    return 2;
  }
  agd::ArtifactManifest man = agd::load_manifest(path);
  agd::ConstructedCode code = agd::restore_code(man);
  agd::DecoderConfig dec = agd::build_decoder(code, man.t, man.degA1);
  agd::ErrorModel model;
  if (p > 0) {
    model.kind = agd::ErrorModel::Kind::iid;
    model.p = p;
  } else {
    model.kind = agd::ErrorModel::Kind::fixed_weight;
    model.weight = static_cast<unsigned>(weight);
  }
  agd::SimulationReport rep =
      agd::simulate(code.T, dec, model, trials, seed, workers);
  const std::string js = agd::report_json(rep);
  std::cout << js;
  if (!json_path.empty()) std::ofstream(json_path) << js;
  if (!csv_path.empty()) std::ofstream(csv_path) << agd::report_csv(rep);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"triorthogonal-code construction, verification, and simulation"};
  app.require_subcommand(1);

  std::string preset, curve_desc, out_path, artifact, mode = "exhaustive";
  std::string basis_kind = "paper", basis_file, decomp_out;
  std::string json_path, csv_path;
  unsigned a = 0, k = 0, workers = default_workers();
  std::uint64_t seed = 0, trials = 0;
  std::size_t vtrials = 0, budget = 100;
  double p = 0;
  long weight = -1;
  bool gzip = false, states = false;

  auto* c = app.add_subcommand("construct", "build an artifact manifest");
  c->add_option("--preset", preset, "small | paper");
  c->add_option("--curve", curve_desc, "rational:s=<s> | hermitian:q0=<q0>");
  c->add_option("--a", a, "divisor degree");
  c->add_option("--k", k, "logical qudits");
  c->add_option("--seed", seed, "construction seed (default 0)");
  c->add_option("--out", out_path, "output path")->required();
  c->add_flag("--gzip", gzip, "gzip the manifest");

  auto* v = app.add_subcommand("verify", "check a stored artifact");
  v->add_option("artifact", artifact, "manifest path")->required();
  v->add_option("--mode", mode, "exhaustive | sampled");
  v->add_option("--trials", vtrials, "sampled-mode trials");
  v->add_option("--seed", seed, "sampling seed (default 0)");
  v->add_flag("--states", states, "also run the dense-state checks");

  auto* d = app.add_subcommand("decompose", "emit the Z/CZ/CCZ gate sets");
  d->add_option("--basis", basis_kind, "paper | search | file");
  d->add_option("--file", basis_file, "basis JSON (with --basis file)");
  d->add_option("--budget", budget, "search budget");
  d->add_option("--seed", seed, "search seed (default 0)");
  d->add_option("--out", decomp_out, "also write the JSON here");

  auto* s = app.add_subcommand("simulate", "Monte-Carlo block-failure rate");
  s->add_option("artifact", artifact, "manifest path")->required();
  s->add_option("--p", p, "iid error rate");
  s->add_option("--weight", weight, "fixed error weight");
  s->add_option("--trials", trials, "number of trials")->required();
  s->add_option("--seed", seed, "stream seed (default 0)");
  s->add_option("--workers", workers, "thread count");
  s->add_option("--json", json_path, "write the JSON report here");
  s->add_option("--csv", csv_path, "write the CSV report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (c->parsed())
      return cmd_construct(preset, curve_desc, a, k, seed, out_path, gzip);
    if (v->parsed()) return cmd_verify(artifact, mode, vtrials, seed, states);
    if (d->parsed())
      return cmd_decompose(basis_kind, basis_file, budget, seed, decomp_out);
    if (s->parsed())
      return cmd_simulate(artifact, p, weight, trials, seed, workers,
                          json_path, csv_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
