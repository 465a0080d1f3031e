#include "agdistill/decoder.hpp"

#include <stdexcept>

namespace agd {

DecoderConfig build_decoder(const ConstructedCode& code, unsigned t,
                            unsigned preset_degA1) {
  const Curve& curve = code.curve;
  const Field& F = curve.field();
  const TriorthogonalMatrix& T = code.T;
  const long g = curve.genus();
  const long a = T.prov.a;
  const long k = static_cast<long>(T.k);

  const long d_lower = a - k - (2 * g - 2);
  const long t_max = (d_lower - g - 1) / 2;
  if (t < 1 || static_cast<long>(t) > t_max) {
    throw std::invalid_argument("build_decoder: t outside (0, (d-g-1)/2]");
  }

  // Eq. conditions: degA1 + 1 - g > t (so l(A1) > t by Riemann) and
  // degA1 < (a-k) - (2g-2) - t.
  const long lo = g + t;          // smallest degree with degA1+1-g >= t+1
  const long hi = d_lower - t;    // exclusive upper bound
  long degA1;
  if (preset_degA1 != 0) {
    degA1 = preset_degA1;
    if (degA1 < lo || degA1 >= hi) {
      throw std::invalid_argument("build_decoder: preset degA1 infeasible");
    }
  } else {
    degA1 = lo;
    if (degA1 >= hi) throw std::invalid_argument("build_decoder: no feasible degA1");
  }

  DecoderConfig cfg;
  cfg.field = &F;
  cfg.t = t;
  cfg.degA1 = static_cast<unsigned>(degA1);
  cfg.n = T.n;
  cfg.w_tail.assign(T.w.begin() + k, T.w.end());

  const std::vector<Place> short_places(code.kept_places.begin() + k,
                                        code.kept_places.end());

  // Locator basis L(degA1 * P_inf) evaluated on the n places.
  const auto loc_basis = curve.rr_basis(cfg.degA1);
  cfg.n_loc = loc_basis.size();
  cfg.loc_eval = Mat(cfg.n_loc, cfg.n);
  for (std::size_t r = 0; r < cfg.n_loc; ++r) {
    for (std::size_t c = 0; c < cfg.n; ++c) {
      cfg.loc_eval.at(r, c) = curve.evaluate(loc_basis[r], short_places[c]);
    }
  }

  // Cofactor basis of L(A' - A1) = functions in L((a-degA1)P_inf) vanishing
  // at the k punctured places, as coefficient rows over the ambient
  // monomials.
  const auto amb_basis = curve.rr_basis(static_cast<unsigned>(a - degA1));
  Mat punct_eval(k, amb_basis.size());
  for (long r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < amb_basis.size(); ++c) {
      punct_eval.at(r, c) = curve.evaluate(amb_basis[c], code.kept_places[r]);
    }
  }
  const Mat cof_coeff = kernel_basis(F, punct_eval);
  cfg.n_cof = cof_coeff.rows;
  if (cfg.n_cof == 0) throw std::runtime_error("build_decoder: empty cofactor space");

  // RREF of G_0 with its row transform.
  cfg.G0 = T.g0();
  Mat R = cfg.G0;
  const RrefResult rr = rref(F, R, &cfg.T_mat);
  if (rr.rank != T.m - T.k) {
    throw std::runtime_error("build_decoder: G_0 rank deficient");
  }
  cfg.pivot_cols = rr.pivot_cols;

  // prodJ: twisted values of f_i * g_j at the pivot columns.
  const std::size_t nj = cfg.pivot_cols.size();
  Mat amb_J(amb_basis.size(), nj);
  for (std::size_t r = 0; r < amb_basis.size(); ++r) {
    for (std::size_t c = 0; c < nj; ++c) {
      amb_J.at(r, c) =
          curve.evaluate(amb_basis[r], short_places[cfg.pivot_cols[c]]);
    }
  }
  Mat cof_J(cfg.n_cof, nj);
  for (std::size_t r = 0; r < cfg.n_cof; ++r) {
    for (std::size_t j = 0; j < amb_basis.size(); ++j) {
      if (cof_coeff.at(r, j)) {
        F.axpy(cof_J.row(r), amb_J.row(j), nj, cof_coeff.at(r, j));
      }
    }
  }
  cfg.prodJ = Mat(cfg.n_loc * cfg.n_cof, nj);
  for (std::size_t i = 0; i < cfg.n_loc; ++i) {
    for (std::size_t j = 0; j < cfg.n_cof; ++j) {
      fe* row = cfg.prodJ.row(i * cfg.n_cof + j);
      for (std::size_t c = 0; c < nj; ++c) {
        const fe tw = cfg.w_tail[cfg.pivot_cols[c]];
        row[c] = F.mul(tw, F.mul(cfg.loc_eval.at(i, cfg.pivot_cols[c]),
                                 cof_J.at(j, c)));
      }
    }
  }
  return cfg;
}

DecodeResult decode(const DecoderConfig& cfg, const std::vector<fe>& S) {
  const Field& F = *cfg.field;
  DecodeResult res;
  res.e_hat.assign(cfg.n, 0);

  bool zero = true;
  for (fe v : S) {
    if (v) {
      zero = false;
      break;
    }
  }
  if (zero) {
    res.matched = true;
    return res;
  }

  const std::vector<fe> TS = mat_vec(F, cfg.T_mat, S);

  // M_{ij} = <twisted ev(f_i g_j), e> = prodJ[(i,j)] . TS[pivot rows].
  Mat M(cfg.n_loc, cfg.n_cof);
  for (std::size_t i = 0; i < cfg.n_loc; ++i) {
    for (std::size_t j = 0; j < cfg.n_cof; ++j) {
      const fe* row = cfg.prodJ.row(i * cfg.n_cof + j);
      fe acc = 0;
      for (std::size_t c = 0; c < cfg.pivot_cols.size(); ++c) {
        if (row[c] && TS[c]) acc ^= F.mul(row[c], TS[c]);
      }
      M.at(i, j) = acc;
    }
  }

  // Locator theta = sum c_i f_i from the left kernel of M.
  Mat MT(cfg.n_cof, cfg.n_loc);
  for (std::size_t i = 0; i < cfg.n_loc; ++i) {
    for (std::size_t j = 0; j < cfg.n_cof; ++j) MT.at(j, i) = M.at(i, j);
  }
  const Mat K = kernel_basis(F, MT);
  if (K.rows == 0) return res;  // best effort: e_hat = 0, matched = false
  const fe* c = K.row(0);

  std::vector<std::size_t> cand;
  for (std::size_t pl = 0; pl < cfg.n; ++pl) {
    fe th = 0;
    for (std::size_t i = 0; i < cfg.n_loc; ++i) {
      if (c[i] && cfg.loc_eval.at(i, pl)) {
        th ^= F.mul(c[i], cfg.loc_eval.at(i, pl));
      }
    }
    if (th == 0) cand.push_back(pl);
  }
  if (cand.empty()) return res;

  // Solve G_0 restricted to the candidate columns against S.
  Mat A(cfg.G0.rows, cand.size());
  for (std::size_t r = 0; r < cfg.G0.rows; ++r) {
    for (std::size_t j = 0; j < cand.size(); ++j) {
      A.at(r, j) = cfg.G0.at(r, cand[j]);
    }
  }
  const auto x = solve(F, A, S);
  if (!x) return res;
  for (std::size_t j = 0; j < cand.size(); ++j) res.e_hat[cand[j]] = (*x)[j];
  res.matched = true;
  return res;
}

namespace {

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t w = idx.size();
  std::size_t i = w;
  while (i > 0 && idx[i - 1] == n - w + i - 1) --i;
  if (i == 0) return false;
  ++idx[i - 1];
  for (std::size_t j = i; j < w; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

}  // namespace

DecodeResult oracle_decode(const TriorthogonalMatrix& T,
                           const std::vector<fe>& S, unsigned radius,
                           std::uint64_t budget_cap) {
  const Field& F = *T.field;
  const std::size_t n = T.n;
  const std::uint32_t nz = F.q() - 1;

  long double budget = 0;
  {
    long double comb = 1, vals = 1;
    for (unsigned w = 0; w <= radius; ++w) {
      budget += comb * vals;
      comb = comb * (n - w) / (w + 1);
      vals *= nz;
    }
  }
  if (budget > static_cast<long double>(budget_cap)) {
    throw std::runtime_error("oracle_decode: budget exceeded");
  }

  DecodeResult res;
  res.e_hat.assign(n, 0);
  const Mat G0 = T.g0();

  for (unsigned w = 0; w <= radius; ++w) {
    if (w == 0) {
      bool zero = true;
      for (fe v : S) zero = zero && v == 0;
      if (zero) {
        res.matched = true;
        return res;
      }
      continue;
    }
    std::vector<std::size_t> idx(w);
    for (std::size_t i = 0; i < w; ++i) idx[i] = i;
    std::vector<fe> vals(w, 1);
    do {
      // Enumerate all nonzero value assignments on this support.
      std::fill(vals.begin(), vals.end(), 1);
      while (true) {
        std::vector<fe> Sp(G0.rows, 0);
        for (std::size_t r = 0; r < G0.rows; ++r) {
          fe acc = 0;
          for (std::size_t j = 0; j < w; ++j) {
            acc ^= F.mul(G0.at(r, idx[j]), vals[j]);
          }
          Sp[r] = acc;
        }
        if (Sp == S) {
          std::fill(res.e_hat.begin(), res.e_hat.end(), 0);
          for (std::size_t j = 0; j < w; ++j) res.e_hat[idx[j]] = vals[j];
          res.matched = true;
          return res;
        }
        std::size_t j = 0;
        while (j < w && vals[j] == nz) {
          vals[j] = 1;
          ++j;
        }
        if (j == w) break;
        ++vals[j];
      }
    } while (next_combination(idx, n));
  }
  return res;  // matched = false
}

}  // namespace agd
