// Function-field backends: rational (genus 0) and Hermitian
// y^{q0} + y = x^{q0+1} over F_{q0^2} (genus q0(q0-1)/2, q0^3 affine rational
// places). Both expose monomial Riemann-Roch bases x^i y^j for the one-point
// divisors m*P_inf via the Weierstrass semigroup <q0, q0+1>.
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "agdistill/field.hpp"
#include "agdistill/linalg.hpp"

namespace agd {

enum class CurveKind { rational, hermitian };

struct Place {
  std::uint32_t id;  // index into the canonical affine_places order
  fe x = 0;
  fe y = 0;  // always 0 for rational places
};

struct RRBasisElement {
  unsigned i = 0;  // exponent of x
  unsigned j = 0;  // exponent of y (0 for rational)
};

class Curve {
 public:
  static Curve rational(std::shared_ptr<const Field> field);
  static Curve hermitian(std::shared_ptr<const Field> field, unsigned q0);
  // Parses "rational:s=<s>" / "hermitian:q0=<q0>" (default moduli).
  static Curve from_descriptor(const std::string& desc);

  CurveKind kind() const { return kind_; }
  const Field& field() const { return *field_; }
  std::shared_ptr<const Field> field_ptr() const { return field_; }
  unsigned q0() const { return q0_; }
  unsigned genus() const { return genus_; }
  std::string descriptor() const;

  // All rational places other than P_inf, in canonical mask-ascending order
  // (x for rational; concatenated (x,y) for hermitian).
  std::vector<Place> affine_places() const;

  // Monomial basis of L(m*P_inf), ordered by ascending pole order
  // i*q0 + j*(q0+1) (ties by ascending j); size m+1-g for m >= 2g-1.
  std::vector<RRBasisElement> rr_basis(unsigned m) const;
  std::size_t l_dim(unsigned m) const { return rr_basis(m).size(); }

  fe evaluate(const RRBasisElement& elem, const Place& place) const;

  // Rows indexed by rr_basis(m), columns by `places` (must be distinct).
  Mat evaluation_matrix(unsigned m, const std::vector<Place>& places) const;

 private:
  Curve(CurveKind kind, std::shared_ptr<const Field> field, unsigned q0,
        unsigned genus)
      : kind_(kind), field_(std::move(field)), q0_(q0), genus_(genus) {}
  CurveKind kind_;
  std::shared_ptr<const Field> field_;
  unsigned q0_;
  unsigned genus_;
};

}  // namespace agd
