// Exact arithmetic in F_{2^s}: elements are s-bit coefficient masks over a
// fixed irreducible modulus. Multiplication uses log/antilog tables over a
// generator (the pipeline performs ~1e11 multiplies at full scale); a
// carry-less multiply + reduction path is kept as the table-free reference.
#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace agd {

using fe = std::uint16_t;  // field element mask, s <= 13

class Field {
 public:
  // Throws std::invalid_argument unless `modulus` is an irreducible degree-s
  // polynomial over F_2 (bit s and bit 0 set).
  Field(unsigned s, std::uint32_t modulus);

  static std::uint32_t default_modulus(unsigned s);
  static std::shared_ptr<const Field> make(unsigned s);
  static std::shared_ptr<const Field> make(unsigned s, std::uint32_t modulus);

  unsigned s() const { return s_; }
  std::uint32_t q() const { return q_; }
  std::uint32_t modulus() const { return modulus_; }

  fe add(fe a, fe b) const { return a ^ b; }
  fe mul(fe a, fe b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  fe sq(fe a) const { return mul(a, a); }
  fe inv(fe a) const;                    // throws on a == 0
  fe pow(fe a, std::uint64_t e) const;   // pow(0,0) = 1 by convention
  fe sqrt(fe a) const { return pow(a, q_ / 2); }
  fe root7(fe a) const;                  // throws unless gcd(7, q-1) = 1

  int trace(fe a) const { return trace_[a]; }
  bool root7_supported() const { return root7_exp_ != 0; }
  std::uint64_t root7_exponent() const { return root7_exp_; }

  // Reference multiply that bypasses the tables (used to validate them).
  fe clmul_mod(fe a, fe b) const;

  // Hot-loop helpers. mul_table fills tbl[v] = c*v for all v < q;
  // axpy does dst[i] ^= c*src[i], switching to a table for long rows.
  const fe* exp_table() const { return exp_.data(); }
  const std::uint16_t* log_table() const { return log_.data(); }
  void mul_table(fe c, fe* tbl) const;
  void axpy(fe* dst, const fe* src, std::size_t n, fe c) const;

  // Lowercase hex of the mask, fixed width ceil(s/4), bit 0 = constant term.
  std::string to_hex(fe a) const;
  fe from_hex(const std::string& h) const;
  unsigned hex_width() const { return (s_ + 3) / 4; }

 private:
  unsigned s_;
  std::uint32_t modulus_;
  std::uint32_t q_;
  fe generator_;
  std::uint64_t root7_exp_;  // 0 when unsupported
  std::vector<fe> exp_;             // 2(q-1) entries, wrap-free product lookup
  std::vector<std::uint16_t> log_;  // q entries, log_[0] unused
  std::vector<std::uint8_t> trace_;
};

// Test oracle for the degree-7 multinomial identity: returns whether
// (sum y_a)^7 equals
//   sum y_a^7 + sum_{a!=b} (y_a^6 y_b + y_a^5 y_b^2 + y_a^4 y_b^3)
//   + sum_{distinct a,b,c} y_a^4 y_b^2 y_c .
bool multinomial7_check(const Field& F, std::span<const fe> y);

}  // namespace agd
