#include "agdistill/selfdual.hpp"

#include <stdexcept>

namespace agd {
namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Invertibility of the s x s bit matrix whose rows are the element masks.
bool masks_independent(const std::vector<fe>& v, unsigned s) {
  std::vector<std::uint32_t> rows(v.begin(), v.end());
  std::size_t r = 0;
  for (int bit = static_cast<int>(s) - 1; bit >= 0 && r < rows.size(); --bit) {
    std::size_t piv = r;
    while (piv < rows.size() && !(rows[piv] >> bit & 1)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && (rows[i] >> bit & 1)) rows[i] ^= rows[r];
    }
    ++r;
  }
  return r == v.size();
}

}  // namespace

SelfDualBasis paper_basis_s10() {
  SelfDualBasis b;
  b.field = Field::make(10);
  b.alphas = {0x1b5, 0x3c8, 0x3a6, 0x3df, 0x2b3,
              0x08e, 0x0c4, 0x0a4, 0x089, 0x0d1};
  return b;
}

bool is_self_dual(const SelfDualBasis& basis) {
  const Field& F = *basis.field;
  const unsigned s = F.s();
  if (basis.alphas.size() != s) return false;
  if (!masks_independent(basis.alphas, s)) return false;
  for (unsigned i = 0; i < s; ++i) {
    for (unsigned j = 0; j < s; ++j) {
      if (F.trace(F.mul(basis.alphas[i], basis.alphas[j])) !=
          (i == j ? 1 : 0)) {
        return false;
      }
    }
  }
  return true;
}

SelfDualBasis find_self_dual_basis(std::shared_ptr<const Field> field,
                                   std::uint64_t seed, int max_restarts) {
  const Field& F = *field;
  const unsigned s = F.s();
  std::uint64_t rng = seed ^ 0xa5a5a5a5deadbeefull;

  for (int attempt = 0; attempt < max_restarts; ++attempt) {
    std::vector<fe> b(s);
    do {
      for (auto& v : b) v = static_cast<fe>(splitmix64(rng) % F.q());
    } while (!masks_independent(b, s));

    // Symmetric congruence reduction of the Gram matrix tr(b_i b_j), applied
    // directly to the basis vectors: b_r <- b_r + b_i performs the matching
    // row and column operation at once, so the Gram matrix stays the Gram
    // matrix of the current vectors. Diagonal entries are tr(b_i^2) = tr(b_i).
    bool ok = true;
    for (unsigned i = 0; i < s; ++i) {
      unsigned piv = i;
      while (piv < s && F.trace(b[piv]) == 0) ++piv;
      if (piv == s) {
        ok = false;  // alternating residual block; restart with a new basis
        break;
      }
      std::swap(b[i], b[piv]);
      for (unsigned r = 0; r < s; ++r) {
        if (r != i && F.trace(F.mul(b[r], b[i])) == 1) b[r] ^= b[i];
      }
    }
    if (!ok) continue;

    SelfDualBasis out{field, b};
    if (is_self_dual(out)) return out;
  }
  throw std::runtime_error("find_self_dual_basis: search budget exhausted");
}

std::vector<int> to_bits(fe beta, const SelfDualBasis& basis) {
  const Field& F = *basis.field;
  std::vector<int> bits(F.s());
  for (unsigned i = 0; i < F.s(); ++i) {
    bits[i] = F.trace(F.mul(basis.alphas[i], beta));
  }
  return bits;
}

fe from_bits(const std::vector<int>& bits, const SelfDualBasis& basis) {
  if (bits.size() != basis.field->s()) {
    throw std::invalid_argument("from_bits: size mismatch");
  }
  fe acc = 0;
  for (unsigned i = 0; i < bits.size(); ++i) {
    if (bits[i]) acc ^= basis.alphas[i];
  }
  return acc;
}

std::vector<int> syndrome_to_bits(fe v, const SelfDualBasis& basis) {
  return to_bits(v, basis);
}

}  // namespace agd
