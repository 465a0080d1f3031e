#include "agdistill/triortho.hpp"

#include <stdexcept>

namespace agd {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t counter) {
  std::uint64_t z = seed ^ (counter * 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

Mat TriorthogonalMatrix::g1() const {
  Mat M(k, n);
  for (std::size_t r = 0; r < k; ++r) {
    std::copy(rows.row(r), rows.row(r) + n, M.row(r));
  }
  return M;
}

Mat TriorthogonalMatrix::g0() const {
  Mat M(m - k, n);
  for (std::size_t r = k; r < m; ++r) {
    std::copy(rows.row(r), rows.row(r) + n, M.row(r - k));
  }
  return M;
}

ConstructedCode construct(const Curve& curve, unsigned a, unsigned k,
                          std::uint64_t seed) {
  const Field& F = curve.field();
  const unsigned g = curve.genus();
  if (!F.root7_supported()) {
    throw std::invalid_argument("construct: s = 0 (mod 3) unsupported");
  }
  if (a < 3 * g + 2) throw std::invalid_argument("construct: a >= 3g+2 violated");
  if (k < 1 || k > a - 3 * g - 1) {
    throw std::invalid_argument("construct: a-3g-1 >= k > 0 violated");
  }

  // Evaluation set: all affine places except one reserved place (the last in
  // canonical order); divisors live at P_inf.
  std::vector<Place> places = curve.affine_places();
  const Place reserved = places.back();
  places.pop_back();
  const std::size_t npp = places.size();  // n''
  const long e = static_cast<long>(npp) - 2 + g - 7l * a;
  if (e < 0) {
    throw std::invalid_argument("construct: e = n''-2+g-7a >= 0 violated");
  }
  const unsigned deg7AE = static_cast<unsigned>(npp) - 2 + g;

  const ResidueVector v = dual_residue_vector(
      curve, deg7AE, places, seed,
      curve.kind() == CurveKind::hermitian ? &reserved : nullptr);

  // Puncture the zero support; N places remain (n''-g <= N <= n'').
  std::vector<Place> kept;
  std::vector<fe> w;
  for (std::size_t i = 0; i < npp; ++i) {
    if (v.values[i] != 0) {
      kept.push_back(places[i]);
      w.push_back(F.root7(v.values[i]));
    }
  }
  const std::size_t N = kept.size();
  if (N + g < npp || N > npp) {
    throw std::logic_error("construct: N outside [n''-g, n'']");
  }
  const std::size_t m = a + 1 - g;
  if (k >= m || m > N) throw std::invalid_argument("construct: k < m <= N violated");

  // Twisted generator G~: rows = L(a*P_inf) monomials, column i scaled w_i.
  const auto basis = curve.rr_basis(a);
  if (basis.size() != m) throw std::logic_error("construct: l(a*P_inf) != a+1-g");
  Mat G(m, N);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < N; ++c) {
      G.at(r, c) = F.mul(w[c], curve.evaluate(basis[r], kept[c]));
    }
  }

  // Row-reduce to [I_k | G_1 ; 0 | G_0] with the first k columns as pivots.
  // The theory makes any k columns independent here; defensive column
  // permutation (recorded) keeps malformed parameters loud.
  std::vector<std::uint32_t> col_perm;
  for (std::size_t piv = 0; piv < k; ++piv) {
    std::size_t pr = piv;
    std::size_t pc = piv;
    bool found = false;
    for (pc = piv; pc < N && !found; ++pc) {
      for (pr = piv; pr < m; ++pr) {
        if (G.at(pr, pc) != 0) {
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) throw std::runtime_error("construct: rank deficiency");
    if (pc != piv) {
      if (col_perm.empty()) {
        col_perm.resize(N);
        for (std::size_t i = 0; i < N; ++i) col_perm[i] = i;
      }
      for (std::size_t r = 0; r < m; ++r) std::swap(G.at(r, piv), G.at(r, pc));
      std::swap(kept[piv], kept[pc]);
      std::swap(w[piv], w[pc]);
      std::swap(col_perm[piv], col_perm[pc]);
    }
    if (pr != piv) {
      for (std::size_t c = 0; c < N; ++c) std::swap(G.at(piv, c), G.at(pr, c));
    }
    const fe scale = F.inv(G.at(piv, piv));
    if (scale != 1) {
      for (std::size_t c = 0; c < N; ++c) {
        G.at(piv, c) = F.mul(G.at(piv, c), scale);
      }
    }
    for (std::size_t r = 0; r < m; ++r) {
      if (r != piv && G.at(r, piv) != 0) {
        F.axpy(G.row(r), G.row(piv), N, G.at(r, piv));
      }
    }
  }

  ConstructedCode out{curve, {}, kept};
  TriorthogonalMatrix& T = out.T;
  T.field = curve.field_ptr();
  T.N = N;
  T.k = k;
  T.m = m;
  T.n = N - k;
  T.rows = Mat(m, T.n);
  for (std::size_t r = 0; r < m; ++r) {
    std::copy(G.row(r) + k, G.row(r) + N, T.rows.row(r));
  }
  T.w = w;
  T.sigma.resize(T.n);
  for (std::size_t i = 0; i < T.n; ++i) T.sigma[i] = F.pow(w[k + i], 5);
  T.tau.resize(k);
  for (std::size_t a2 = 0; a2 < k; ++a2) T.tau[a2] = F.pow(w[a2], 5);
  for (fe x : T.sigma) {
    if (x == 0) throw std::logic_error("construct: zero sigma");
  }
  for (fe x : T.tau) {
    if (x == 0) throw std::logic_error("construct: zero tau");
  }

  T.prov.curve_desc = curve.descriptor();
  T.prov.a = a;
  T.prov.k = k;
  T.prov.seed = seed;
  T.prov.col_perm = col_perm;
  T.prov.place_ids.reserve(N);
  for (const auto& p : kept) T.prov.place_ids.push_back(p.id);
  return out;
}

namespace {

// sum_i (g^a)^4 (g^b)^2 (g^c) over the stored n columns.
fe triple_sum(const Field& F, const TriorthogonalMatrix& T, std::size_t a,
              std::size_t b, std::size_t c) {
  const fe* ra = T.rows.row(a);
  const fe* rb = T.rows.row(b);
  const fe* rc = T.rows.row(c);
  const fe* exp = F.exp_table();
  const std::uint16_t* log = F.log_table();
  const std::uint32_t ord = F.q() - 1;
  fe acc = 0;
  for (std::size_t i = 0; i < T.n; ++i) {
    if (ra[i] && rb[i] && rc[i]) {
      acc ^= exp[(4u * log[ra[i]] + 2u * log[rb[i]] + log[rc[i]]) % ord];
    }
  }
  return acc;
}

fe pair_sum(const Field& F, const TriorthogonalMatrix& T, std::size_t a,
            std::size_t b) {
  const fe* ra = T.rows.row(a);
  const fe* rb = T.rows.row(b);
  fe acc = 0;
  for (std::size_t i = 0; i < T.n; ++i) {
    if (ra[i] && rb[i] && T.sigma[i]) {
      acc ^= F.mul(T.sigma[i], F.mul(ra[i], rb[i]));
    }
  }
  return acc;
}

bool check_triple(const Field& F, const TriorthogonalMatrix& T, std::size_t a,
                  std::size_t b, std::size_t c, TriReport& rep) {
  const fe want = (a == b && b == c && a < T.k) ? 1 : 0;
  ++rep.triples_checked;
  if (triple_sum(F, T, a, b, c) != want) {
    rep.ok = false;
    rep.bad_triple = {{a, b, c}};
    return false;
  }
  return true;
}

bool check_pair(const Field& F, const TriorthogonalMatrix& T, std::size_t a,
                std::size_t b, TriReport& rep) {
  const fe want = (a == b && a < T.k) ? T.tau[a] : 0;
  ++rep.pairs_checked;
  if (pair_sum(F, T, a, b) != want) {
    rep.ok = false;
    rep.bad_pair = {{a, b}};
    return false;
  }
  return true;
}

}  // namespace

TriReport is_triorthogonal(const TriorthogonalMatrix& T,
                           const VerifyMode& mode) {
  const Field& F = *T.field;
  TriReport rep;
  if (mode.exhaustive) {
    for (std::size_t a = 0; a < T.m; ++a) {
      for (std::size_t b = 0; b < T.m; ++b) {
        for (std::size_t c = 0; c < T.m; ++c) {
          if (!check_triple(F, T, a, b, c, rep)) return rep;
        }
      }
    }
    for (std::size_t a = 0; a < T.m; ++a) {
      for (std::size_t b = 0; b < T.m; ++b) {
        if (!check_pair(F, T, a, b, rep)) return rep;
      }
    }
    return rep;
  }
  // Sampled mode: mandatory diagonal cases first, then uniform samples.
  for (std::size_t a = 0; a < T.k; ++a) {
    if (!check_triple(F, T, a, a, a, rep)) return rep;
    if (!check_pair(F, T, a, a, rep)) return rep;
  }
  for (std::size_t t = 0; t < mode.trials; ++t) {
    std::uint64_t r = mix_seed(mode.seed, t);
    const std::size_t a = r % T.m;
    const std::size_t b = (r >> 21) % T.m;
    const std::size_t c = (r >> 42) % T.m;
    if (!check_triple(F, T, a, b, c, rep)) return rep;
    std::uint64_t r2 = mix_seed(mode.seed ^ 0xfeedfacecafeull, t);
    if (!check_pair(F, T, r2 % T.m, (r2 >> 21) % T.m, rep)) return rep;
  }
  return rep;
}

bool transversality_check(const TriorthogonalMatrix& T, std::size_t trials,
                          std::uint64_t seed) {
  const Field& F = *T.field;
  std::vector<fe> f(T.n);
  for (std::size_t t = 0; t < trials; ++t) {
    std::uint64_t st = mix_seed(seed, t);
    std::vector<fe> u(T.m);
    for (auto& v : u) {
      st = st * 6364136223846793005ull + 1442695040888963407ull;
      v = static_cast<fe>((st >> 33) % F.q());
    }
    std::fill(f.begin(), f.end(), 0);
    for (std::size_t r = 0; r < T.m; ++r) {
      if (u[r]) F.axpy(f.data(), T.rows.row(r), T.n, u[r]);
    }
    fe lhs = 0;
    for (fe x : f) lhs ^= F.pow(x, 7);
    fe rhs = 0;
    for (std::size_t a = 0; a < T.k; ++a) rhs ^= F.pow(u[a], 7);
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace agd
