#include "agdistill/csscode.hpp"

#include <stdexcept>

namespace agd {

QuantumCodeParams quantum_params(const TriorthogonalMatrix& T, unsigned genus,
                                 unsigned t_override) {
  QuantumCodeParams p;
  p.n = T.n;
  p.k = T.k;
  const long a = T.prov.a;
  const long g = genus;
  p.d_lower = a - static_cast<long>(T.k) - (2 * g - 2);
  if (p.d_lower <= 0) throw std::invalid_argument("quantum_params: d bound <= 0");
  const long t_max = (p.d_lower - g - 1) / 2;
  if (t_max < 1) {
    throw std::invalid_argument("quantum_params: no positive decoding radius");
  }
  p.t = static_cast<unsigned>(t_max);
  if (t_override != 0) {
    if (t_override > p.t) {
      throw std::invalid_argument("quantum_params: t above the bound");
    }
    p.t = t_override;
  }
  const unsigned s = T.field->s();
  p.qubits_physical = p.n * s;
  p.qubits_logical = p.k * s;
  return p;
}

Mat logical_z_ops(const TriorthogonalMatrix& T) {
  const Field& F = *T.field;
  Mat L(T.k, T.n);
  for (std::size_t a = 0; a < T.k; ++a) {
    const fe tau_inv = F.inv(T.tau[a]);
    for (std::size_t i = 0; i < T.n; ++i) {
      L.at(a, i) = F.mul(tau_inv, F.mul(T.sigma[i], T.rows.at(a, i)));
    }
  }
  return L;
}

std::vector<fe> syndrome(const TriorthogonalMatrix& T,
                         const std::vector<fe>& e) {
  if (e.size() != T.n) throw std::invalid_argument("syndrome: length mismatch");
  const Field& F = *T.field;
  std::vector<fe> S(T.m - T.k, 0);
  for (std::size_t r = T.k; r < T.m; ++r) {
    const fe* row = T.rows.row(r);
    fe acc = 0;
    for (std::size_t i = 0; i < T.n; ++i) {
      if (row[i] && e[i]) acc ^= F.mul(row[i], e[i]);
    }
    S[r - T.k] = acc;
  }
  return S;
}

bool is_stabilizer_equiv(const TriorthogonalMatrix& T,
                         const std::vector<fe>& r) {
  const Field& F = *T.field;
  for (std::size_t row = 0; row < T.m; ++row) {
    const fe* g = T.rows.row(row);
    fe acc = 0;
    for (std::size_t i = 0; i < T.n; ++i) {
      if (g[i] && r[i]) acc ^= F.mul(g[i], r[i]);
    }
    if (acc != 0) return false;
  }
  return true;
}

namespace {

// Rank of the chosen column subset of G0 (small: |subset| x rows).
bool columns_independent(const Field& F, const Mat& G0,
                         const std::vector<std::size_t>& cols) {
  Mat M(cols.size(), G0.rows);
  for (std::size_t r = 0; r < cols.size(); ++r) {
    for (std::size_t j = 0; j < G0.rows; ++j) M.at(r, j) = G0.at(j, cols[r]);
  }
  return rank(F, M) == cols.size();
}

}  // namespace

bool certify_dual_distance(const Field& F, const Mat& G0, unsigned delta,
                           std::uint64_t max_subsets) {
  if (delta <= 1) return true;
  const std::size_t w = delta - 1;
  if (w > G0.cols) return false;

  // Count C(cols, w) against the cost cap before enumerating.
  long double count = 1;
  for (std::size_t i = 0; i < w; ++i) {
    count = count * static_cast<long double>(G0.cols - i) / (i + 1);
    if (count > static_cast<long double>(max_subsets)) {
      throw std::runtime_error("certify_dual_distance: cost cap exceeded");
    }
  }

  std::vector<std::size_t> idx(w);
  for (std::size_t i = 0; i < w; ++i) idx[i] = i;
  while (true) {
    if (!columns_independent(F, G0, idx)) return false;
    // next combination
    std::size_t i = w;
    while (i > 0 && idx[i - 1] == G0.cols - w + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < w; ++j) idx[j] = idx[j - 1] + 1;
  }
  return true;
}

}  // namespace agd
