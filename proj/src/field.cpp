#include "agdistill/field.hpp"

#include <numeric>
#include <stdexcept>

namespace agd {
namespace {

// Carry-less product of two <= 16-bit polynomials.
std::uint32_t clmul(std::uint32_t a, std::uint32_t b) {
  std::uint32_t r = 0;
  while (b) {
    r ^= a * (b & 1);
    a <<= 1;
    b >>= 1;
  }
  return r;
}

std::uint32_t poly_mod(std::uint32_t a, std::uint32_t m, unsigned deg_m) {
  for (int d = 31; d >= static_cast<int>(deg_m); --d) {
    if (a >> d & 1) a ^= m << (d - deg_m);
  }
  return a;
}

std::uint32_t poly_mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t m,
                          unsigned deg_m) {
  return poly_mod(clmul(a, b), m, deg_m);
}

std::uint32_t poly_gcd(std::uint32_t a, std::uint32_t b) {
  auto deg = [](std::uint32_t v) {
    return v ? 31 - __builtin_clz(v) : -1;
  };
  while (b) {
    while (deg(a) >= deg(b)) {
      a ^= b << (deg(a) - deg(b));
      if (!a) return b;
    }
    std::swap(a, b);
  }
  return a;
}

// Irreducibility over F_2: m | x^{2^s} - x and, for every prime r | s,
// gcd(x^{2^{s/r}} - x, m) = 1.
bool is_irreducible(std::uint32_t m, unsigned s) {
  auto frob = [&](unsigned times) {  // x^{2^times} mod m
    std::uint32_t t = 0b10;
    for (unsigned i = 0; i < times; ++i) t = poly_mulmod(t, t, m, s);
    return t;
  };
  if (frob(s) != 0b10) return false;
  unsigned rem = s;
  for (unsigned r = 2; r <= rem; ++r) {
    if (rem % r != 0) continue;
    while (rem % r == 0) rem /= r;
    if (poly_gcd(frob(s / r) ^ 0b10, m) != 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> ps;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace

std::uint32_t Field::default_modulus(unsigned s) {
  switch (s) {
    case 2: return 0x7;       // x^2+x+1
    case 3: return 0xb;       // x^3+x+1
    case 4: return 0x13;      // x^4+x+1
    case 5: return 0x25;      // x^5+x^2+1
    case 6: return 0x43;      // x^6+x+1
    case 7: return 0x83;      // x^7+x+1
    case 8: return 0x11d;     // x^8+x^4+x^3+x^2+1
    case 9: return 0x211;     // x^9+x^4+1
    case 10: return 0x409;    // x^10+x^3+1
    case 11: return 0x805;    // x^11+x^2+1
    case 12: return 0x1053;   // x^12+x^6+x^4+x+1
    case 13: return 0x201b;   // x^13+x^4+x^3+x+1
    default:
      throw std::invalid_argument("no default modulus for s=" +
                                  std::to_string(s));
  }
}

std::shared_ptr<const Field> Field::make(unsigned s) {
  return std::make_shared<const Field>(s, default_modulus(s));
}

std::shared_ptr<const Field> Field::make(unsigned s, std::uint32_t modulus) {
  return std::make_shared<const Field>(s, modulus);
}

Field::Field(unsigned s, std::uint32_t modulus)
    : s_(s), modulus_(modulus), q_(1u << s) {
  if (s < 2 || s > 13) throw std::invalid_argument("field: s out of range");
  if (!(modulus >> s & 1) || !(modulus & 1) || modulus >= (2u << s)) {
    throw std::invalid_argument("field: modulus must have bits s and 0 set");
  }
  if (!is_irreducible(modulus, s)) {
    throw std::invalid_argument("field: modulus is reducible");
  }

  // Generator by order testing: g has order q-1 iff g^{(q-1)/p} != 1 for
  // every prime p | q-1.
  const std::uint32_t ord = q_ - 1;
  const auto primes = prime_factors(ord);
  auto raw_pow = [&](std::uint32_t a, std::uint32_t e) {
    std::uint32_t r = 1;
    while (e) {
      if (e & 1) r = poly_mulmod(r, a, modulus_, s_);
      a = poly_mulmod(a, a, modulus_, s_);
      e >>= 1;
    }
    return r;
  };
  generator_ = 0;
  for (std::uint32_t g = 2; g < q_; ++g) {
    bool primitive = true;
    for (auto p : primes) {
      if (raw_pow(g, ord / p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      generator_ = static_cast<fe>(g);
      break;
    }
  }
  if (generator_ == 0) throw std::logic_error("field: no generator found");

  exp_.assign(2 * ord, 0);
  log_.assign(q_, 0);
  std::uint32_t v = 1;
  for (std::uint32_t i = 0; i < ord; ++i) {
    exp_[i] = exp_[i + ord] = static_cast<fe>(v);
    log_[v] = static_cast<std::uint16_t>(i);
    v = poly_mulmod(v, generator_, modulus_, s_);
  }
  if (v != 1) throw std::logic_error("field: generator order mismatch");

  // Trace table: tr(a) = sum_i a^{2^i}, must land in {0,1}.
  trace_.assign(q_, 0);
  for (std::uint32_t a = 0; a < q_; ++a) {
    std::uint32_t t = 0, f = a;
    for (unsigned i = 0; i < s_; ++i) {
      t ^= f;
      f = poly_mulmod(f, f, modulus_, s_);
    }
    if (t > 1) throw std::logic_error("field: trace not in {0,1}");
    trace_[a] = static_cast<std::uint8_t>(t);
  }

  // u = 7^{-1} mod (q-1) when it exists (s not divisible by 3).
  root7_exp_ = 0;
  if (std::gcd<std::uint64_t>(7, ord) == 1) {
    std::uint64_t u = 1;
    while ((7 * u) % ord != 1) ++u;
    root7_exp_ = u;
  }
}

fe Field::inv(fe a) const {
  if (a == 0) throw std::domain_error("field: division by zero");
  return exp_[(q_ - 1) - log_[a]];
}

fe Field::pow(fe a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  const std::uint64_t ord = q_ - 1;
  return exp_[(log_[a] * (e % ord)) % ord];
}

fe Field::root7(fe a) const {
  if (!root7_supported()) {
    throw std::domain_error("field: seventh roots need gcd(7, q-1) = 1");
  }
  return pow(a, root7_exp_);
}

fe Field::clmul_mod(fe a, fe b) const {
  return static_cast<fe>(poly_mulmod(a, b, modulus_, s_));
}

void Field::mul_table(fe c, fe* tbl) const {
  tbl[0] = 0;
  if (c == 0) {
    for (std::uint32_t v = 1; v < q_; ++v) tbl[v] = 0;
    return;
  }
  const std::uint32_t lc = log_[c];
  for (std::uint32_t v = 1; v < q_; ++v) tbl[v] = exp_[lc + log_[v]];
}

void Field::axpy(fe* dst, const fe* src, std::size_t n, fe c) const {
  if (c == 0) return;
  if (n >= 2 * static_cast<std::size_t>(q_)) {
    std::vector<fe> tbl(q_);
    mul_table(c, tbl.data());
    for (std::size_t i = 0; i < n; ++i) dst[i] ^= tbl[src[i]];
  } else {
    const std::uint32_t lc = log_[c];
    for (std::size_t i = 0; i < n; ++i) {
      if (src[i]) dst[i] ^= exp_[lc + log_[src[i]]];
    }
  }
}

std::string Field::to_hex(fe a) const {
  static const char* digits = "0123456789abcdef";
  std::string out(hex_width(), '0');
  for (unsigned i = 0; i < hex_width(); ++i) {
    out[hex_width() - 1 - i] = digits[(a >> (4 * i)) & 0xf];
  }
  return out;
}

fe Field::from_hex(const std::string& h) const {
  if (h.size() != hex_width()) {
    throw std::invalid_argument("field: bad hex width");
  }
  std::uint32_t v = 0;
  for (char c : h) {
    v <<= 4;
    if (c >= '0' && c <= '9') v |= static_cast<std::uint32_t>(c - '0');
    else if (c >= 'a' && c <= 'f') v |= static_cast<std::uint32_t>(c - 'a' + 10);
    else throw std::invalid_argument("field: bad hex digit");
  }
  if (v >= q_) throw std::invalid_argument("field: hex value out of range");
  return static_cast<fe>(v);
}

bool multinomial7_check(const Field& F, std::span<const fe> y) {
  const std::size_t m = y.size();
  fe sum = 0;
  for (fe v : y) sum ^= v;
  const fe lhs = F.pow(sum, 7);

  fe rhs = 0;
  for (std::size_t a = 0; a < m; ++a) rhs ^= F.pow(y[a], 7);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b) continue;
      rhs ^= F.mul(F.pow(y[a], 6), y[b]);
      rhs ^= F.mul(F.pow(y[a], 5), F.sq(y[b]));
      rhs ^= F.mul(F.pow(y[a], 4), F.pow(y[b], 3));
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t c = 0; c < m; ++c) {
        if (a == b || b == c || a == c) continue;
        rhs ^= F.mul(F.mul(F.pow(y[a], 4), F.sq(y[b])), y[c]);
      }
    }
  }
  return lhs == rhs;
}

}  // namespace agd
