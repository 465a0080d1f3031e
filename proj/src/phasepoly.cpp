#include "agdistill/phasepoly.hpp"

#include <bit>
#include <stdexcept>

#include "agdistill/triortho.hpp"  // mix_seed

namespace agd {
namespace {

// In-place Moebius transform: result[mask] = ANF coefficient of the
// monomial prod_{i in mask} b_i.
std::vector<int> moebius(std::vector<int> f, unsigned s) {
  for (unsigned i = 0; i < s; ++i) {
    const std::uint32_t bit = 1u << i;
    for (std::uint32_t m = 0; m < f.size(); ++m) {
      if (m & bit) f[m] ^= f[m ^ bit];
    }
  }
  return f;
}

}  // namespace

std::vector<int> phase_table(const SelfDualBasis& basis, unsigned exponent) {
  const Field& F = *basis.field;
  const unsigned s = F.s();
  std::vector<int> table(1u << s);
  for (std::uint32_t b = 0; b < table.size(); ++b) {
    // b's bit i is the coefficient of alpha_i.
    fe gamma = 0;
    for (unsigned i = 0; i < s; ++i) {
      if (b >> i & 1) gamma ^= basis.alphas[i];
    }
    table[b] = F.trace(F.pow(gamma, exponent));
  }
  return table;
}

unsigned anf_degree(const std::vector<int>& table, unsigned s) {
  const auto coeff = moebius(table, s);
  unsigned deg = 0;
  for (std::uint32_t m = 0; m < coeff.size(); ++m) {
    if (coeff[m]) deg = std::max<unsigned>(deg, std::popcount(m));
  }
  return deg;
}

BooleanPhasePoly anf(const std::vector<int>& table, unsigned s) {
  if (table.size() != (1u << s)) throw std::invalid_argument("anf: bad table");
  const auto coeff = moebius(table, s);
  BooleanPhasePoly p;
  p.s = s;
  p.constant = coeff[0];
  for (std::uint32_t m = 1; m < coeff.size(); ++m) {
    if (!coeff[m]) continue;
    std::vector<unsigned> idx;
    for (unsigned i = 0; i < s; ++i) {
      if (m >> i & 1) idx.push_back(i + 1);  // 1-based qubit labels
    }
    switch (idx.size()) {
      case 1: p.z.insert(idx[0]); break;
      case 2: p.cz.insert({idx[0], idx[1]}); break;
      case 3: p.ccz.insert({idx[0], idx[1], idx[2]}); break;
      default:
        throw std::runtime_error("anf: monomial of degree >= 4");
    }
  }
  return p;
}

int eval_poly(const BooleanPhasePoly& p, std::uint32_t b) {
  auto bit = [&](unsigned q) { return static_cast<int>(b >> (q - 1) & 1); };
  int v = p.constant;
  for (unsigned q : p.z) v ^= bit(q);
  for (const auto& m : p.cz) v ^= bit(m[0]) & bit(m[1]);
  for (const auto& m : p.ccz) v ^= bit(m[0]) & bit(m[1]) & bit(m[2]);
  return v;
}

GateDecomposition decomposition(const SelfDualBasis& basis) {
  GateDecomposition d;
  d.poly = anf(phase_table(basis, 7), basis.field->s());
  d.c = d.poly.ccz.size();
  return d;
}

HierarchyLevel hierarchy_certificate(const SelfDualBasis& basis,
                                     unsigned exponent) {
  const unsigned s = basis.field->s();
  const auto table = phase_table(basis, exponent);
  const unsigned deg = anf_degree(table, s);
  if (deg > 3) throw std::logic_error("hierarchy: degree above third level");

  // Finite-difference cross-check: deg(D_c f) <= deg-1 for sampled c.
  for (std::uint32_t c : {1u, 3u, (1u << s) - 1}) {
    std::vector<int> diff(table.size());
    for (std::uint32_t x = 0; x < table.size(); ++x) {
      diff[x] = table[x] ^ table[x ^ c];
    }
    const unsigned dd = anf_degree(diff, s);
    if (deg > 0 && dd > deg - 1) {
      throw std::logic_error("hierarchy: finite-difference degree mismatch");
    }
  }

  if (deg <= 1) return HierarchyLevel::pauli;
  if (deg == 2) return HierarchyLevel::clifford;
  return HierarchyLevel::third_level;
}

bool ccz_extraction_check(const GateDecomposition& decomp,
                          const std::array<unsigned, 3>& triple) {
  const BooleanPhasePoly& p = decomp.poly;
  if (!p.ccz.count(triple)) {
    throw std::invalid_argument("ccz_extraction_check: triple not in CCZ set");
  }
  const unsigned s = p.s;
  auto in_triple = [&](unsigned q) {
    return q == triple[0] || q == triple[1] || q == triple[2];
  };
  std::vector<unsigned> measured;
  for (unsigned q = 1; q <= s; ++q) {
    if (!in_triple(q)) measured.push_back(q);
  }

  for (std::uint32_t out = 0; out < (1u << measured.size()); ++out) {
    auto o = [&](unsigned q) -> int {  // measurement outcome of qubit q
      for (std::size_t i = 0; i < measured.size(); ++i) {
        if (measured[i] == q) return out >> i & 1;
      }
      throw std::logic_error("ccz_extraction_check: not a measured qubit");
    };

    // Residual monomials over the triple, toggled by restriction and by the
    // correction rules; target is exactly the triple's own CCZ term.
    std::set<std::vector<unsigned>> residual;
    auto toggle = [&](std::vector<unsigned> m) {
      if (!residual.insert(m).second) residual.erase(m);
    };

    for (unsigned q : p.z) {
      if (in_triple(q)) {
        toggle({q});  // restriction
        toggle({q});  // rule 1: wholly-contained Z re-applied
      }
    }
    for (const auto& m : p.cz) {
      const bool a_in = in_triple(m[0]), b_in = in_triple(m[1]);
      if (a_in && b_in) {
        toggle({m[0], m[1]});
        toggle({m[0], m[1]});  // rule 1: wholly-contained CZ re-applied
      } else if (a_in || b_in) {
        const unsigned t = a_in ? m[0] : m[1];
        const unsigned r = a_in ? m[1] : m[0];
        if (o(r)) {
          toggle({t});  // restriction leaves Z_t
          toggle({t});  // rule 2: Z on the CZ partner
        }
      }
    }
    for (const auto& m : p.ccz) {
      std::vector<unsigned> in, outq;
      for (unsigned q : m) (in_triple(q) ? in : outq).push_back(q);
      if (in.size() == 3) {
        toggle(in);  // the target CCZ itself survives restriction
      } else if (in.size() == 2 && o(outq[0])) {
        toggle(in);  // restriction leaves CZ
        toggle(in);  // rule 3: CZ across the two in-triple legs
      } else if (in.size() == 1 && o(outq[0]) && o(outq[1])) {
        toggle(in);  // restriction leaves Z
        toggle(in);  // rule 4: Z when both measured legs read 1
      }
    }

    const std::vector<unsigned> want(triple.begin(), triple.end());
    if (residual.size() != 1 || *residual.begin() != want) return false;
  }
  return true;
}

SearchResult search_min_ccz(std::shared_ptr<const Field> field,
                            std::size_t budget, std::uint64_t seed) {
  SearchResult best;
  best.c = SIZE_MAX;
  if (field->s() == 10 && field->modulus() == Field::default_modulus(10)) {
    best.basis = paper_basis_s10();
    best.c = decomposition(best.basis).c;
  }
  for (std::size_t i = 0; i < budget; ++i) {
    SelfDualBasis b = find_self_dual_basis(field, mix_seed(seed, i));
    const std::size_t c = decomposition(b).c;
    if (c < best.c) {
      best.basis = b;
      best.c = c;
    }
  }
  if (best.c == SIZE_MAX) throw std::invalid_argument("search_min_ccz: budget 0");
  return best;
}

}  // namespace agd
