#include "agdistill/statecheck.hpp"

#include <bit>
#include <complex>
#include <random>
#include <vector>

#include "agdistill/field.hpp"

namespace agd {
namespace {

using cd = std::complex<double>;
using vec = std::vector<cd>;

double norm2(const vec& v) {
  double s = 0;
  for (const cd& x : v) s += std::norm(x);
  return s;
}

void normalize(vec& v) {
  const double n = std::sqrt(norm2(v));
  for (cd& x : v) x /= n;
}

vec random_state(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  vec v(dim);
  for (cd& x : v) x = {g(rng), g(rng)};
  normalize(v);
  return v;
}

// ||a - e^{i phi} b|| minimized over the global phase phi.
double phase_aligned_dev(const vec& a, const vec& b) {
  cd ov = 0;
  for (std::size_t i = 0; i < a.size(); ++i) ov += std::conj(b[i]) * a[i];
  const cd phase = std::abs(ov) > 0 ? ov / std::abs(ov) : cd(1, 0);
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - phase * b[i]);
  return std::sqrt(s);
}

}  // namespace

double teleport_u_check(std::uint64_t seed) {
  const auto Fp = Field::make(5);
  const Field& F = *Fp;
  const std::size_t q = F.q();

  // u_gamma = (-1)^{tr(gamma^7)}: the diagonal of U (real, so U^dag = U).
  std::vector<double> u(q);
  for (std::size_t g = 0; g < q; ++g) {
    u[g] = F.trace(F.pow(static_cast<fe>(g), 7)) ? -1.0 : 1.0;
  }

  std::mt19937_64 rng(seed);
  double worst = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const vec psi = random_state(q, rng);
    vec expect(q);
    for (std::size_t g = 0; g < q; ++g) expect[g] = u[g] * psi[g];

    // |M> (x) |psi> with |M> = U|+_q>, then SUM (control = magic register,
    // target = input register): |g, h> -> |g, h + g>.
    vec st(q * q, 0);
    const double amp = 1.0 / std::sqrt(static_cast<double>(q));
    for (std::size_t g = 0; g < q; ++g) {
      for (std::size_t h = 0; h < q; ++h) {
        st[g * q + (h ^ g)] += amp * u[g] * psi[h];
      }
    }

    // Measure the input register: outcome beta selects the branch
    // sum_g u_g psi_{beta+g} |g>; correction U X^beta U on the magic
    // register must reproduce U|psi> for every outcome.
    for (std::size_t beta = 0; beta < q; ++beta) {
      vec branch(q);
      for (std::size_t g = 0; g < q; ++g) branch[g] = st[g * q + beta];
      if (norm2(branch) < 1e-14) continue;  // outcome has zero probability
      vec out(q, 0);
      for (std::size_t g = 0; g < q; ++g) {
        // U X^beta U |g> = u_g u_{g+beta} |g+beta>
        out[g ^ beta] += u[g] * u[g ^ beta] * branch[g];
      }
      normalize(out);
      worst = std::max(worst, phase_aligned_dev(out, expect));
    }
  }
  return worst;
}

double teleport_ccz_check(std::uint64_t seed) {
  const std::size_t q = 8;  // 3 qubits
  auto ccz = [](std::size_t x) { return (x & 7) == 7 ? -1.0 : 1.0; };

  std::mt19937_64 rng(seed ^ 0xccull);
  double worst = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const vec psi = random_state(q, rng);
    vec expect(q);
    for (std::size_t x = 0; x < q; ++x) expect[x] = ccz(x) * psi[x];

    // |CCZ> (x) |psi>, transversal CNOTs (controls = input bits, targets =
    // magic bits), measure the input register.
    vec st(q * q, 0);
    const double amp = 1.0 / std::sqrt(8.0);
    for (std::size_t g = 0; g < q; ++g) {
      for (std::size_t h = 0; h < q; ++h) {
        st[g * q + (h ^ g)] += amp * ccz(g) * psi[h];
      }
    }
    for (std::size_t b = 0; b < q; ++b) {
      vec branch(q);
      for (std::size_t g = 0; g < q; ++g) branch[g] = st[g * q + b];
      if (norm2(branch) < 1e-14) continue;
      vec out(q, 0);
      for (std::size_t g = 0; g < q; ++g) {
        // (CCZ X^b CCZ)|g> = ccz(g) ccz(g+b) |g+b>
        out[g ^ b] += ccz(g) * ccz(g ^ b) * branch[g];
      }
      normalize(out);
      worst = std::max(worst, phase_aligned_dev(out, expect));
    }
  }
  return worst;
}

double twirl_check(std::uint64_t seed) {
  const std::size_t q = 8;
  auto ccz = [](std::size_t x) { return (x & 7) == 7 ? -1.0 : 1.0; };

  // Orthonormal basis |M_b> = Z^b |CCZ>.
  std::vector<vec> M(q, vec(q));
  const double amp = 1.0 / std::sqrt(8.0);
  for (std::size_t b = 0; b < q; ++b) {
    for (std::size_t x = 0; x < q; ++x) {
      const int par = std::popcount(b & x) & 1;
      M[b][x] = amp * ccz(x) * (par ? -1.0 : 1.0);
    }
  }

  std::mt19937_64 rng(seed ^ 0x7717ull);
  std::normal_distribution<double> g;
  double worst = 0;
  for (int trial = 0; trial < 100; ++trial) {
    // Random density rho = A A^dag / tr.
    std::vector<vec> A(q, vec(q));
    for (auto& row : A) {
      for (cd& x : row) x = {g(rng), g(rng)};
    }
    std::vector<vec> rho(q, vec(q, 0));
    double tr = 0;
    for (std::size_t i = 0; i < q; ++i) {
      for (std::size_t j = 0; j < q; ++j) {
        cd acc = 0;
        for (std::size_t l = 0; l < q; ++l) acc += A[i][l] * std::conj(A[j][l]);
        rho[i][j] = acc;
      }
      tr += rho[i][i].real();
    }
    for (auto& row : rho) {
      for (cd& x : row) x /= tr;
    }

    // rho' = (1/8) sum_d S_d rho S_d, S_d = CCZ X^d CCZ (real symmetric):
    // S_d |x> = ccz(x) ccz(x+d) |x+d>.
    std::vector<vec> rho2(q, vec(q, 0));
    for (std::size_t d = 0; d < q; ++d) {
      for (std::size_t i = 0; i < q; ++i) {
        for (std::size_t j = 0; j < q; ++j) {
          const double si = ccz(i) * ccz(i ^ d);
          const double sj = ccz(j) * ccz(j ^ d);
          rho2[i ^ d][j ^ d] += si * sj * rho[i][j] / 8.0;
        }
      }
    }

    // Off-diagonals in the |M_b> basis.
    for (std::size_t b = 0; b < q; ++b) {
      for (std::size_t c = 0; c < q; ++c) {
        if (b == c) continue;
        cd acc = 0;
        for (std::size_t i = 0; i < q; ++i) {
          for (std::size_t j = 0; j < q; ++j) {
            acc += std::conj(M[b][i]) * rho2[i][j] * M[c][j];
          }
        }
        worst = std::max(worst, std::abs(acc));
      }
    }
  }
  return worst;
}

}  // namespace agd
