#include "agdistill/curve.hpp"

#include <set>
#include <stdexcept>

namespace agd {

Curve Curve::rational(std::shared_ptr<const Field> field) {
  return Curve(CurveKind::rational, std::move(field), 0, 0);
}

Curve Curve::hermitian(std::shared_ptr<const Field> field, unsigned q0) {
  const unsigned s = field->s();
  if (s % 2 != 0 || (1u << (s / 2)) != q0) {
    throw std::invalid_argument("hermitian: need s even and q0 = 2^{s/2}");
  }
  return Curve(CurveKind::hermitian, std::move(field), q0, q0 * (q0 - 1) / 2);
}

Curve Curve::from_descriptor(const std::string& desc) {
  if (desc.rfind("rational:s=", 0) == 0) {
    const unsigned s = std::stoul(desc.substr(11));
    return rational(Field::make(s));
  }
  if (desc.rfind("hermitian:q0=", 0) == 0) {
    const unsigned q0 = std::stoul(desc.substr(13));
    unsigned s = 0;
    while ((1u << s) < q0 * q0) ++s;
    if ((1u << s) != q0 * q0) {
      throw std::invalid_argument("curve descriptor: q0 not a power of two");
    }
    return hermitian(Field::make(s), q0);
  }
  throw std::invalid_argument("curve descriptor: " + desc);
}

std::string Curve::descriptor() const {
  if (kind_ == CurveKind::rational) {
    return "rational:s=" + std::to_string(field_->s());
  }
  return "hermitian:q0=" + std::to_string(q0_);
}

std::vector<Place> Curve::affine_places() const {
  const Field& F = *field_;
  std::vector<Place> out;
  if (kind_ == CurveKind::rational) {
    out.reserve(F.q());
    for (std::uint32_t x = 0; x < F.q(); ++x) {
      out.push_back({x, static_cast<fe>(x), 0});
    }
    return out;
  }
  // y^{q0} + y = x^{q0+1}; enumerate in (x,y) mask-ascending order.
  std::uint32_t id = 0;
  for (std::uint32_t x = 0; x < F.q(); ++x) {
    const fe rhs = F.pow(static_cast<fe>(x), q0_ + 1);
    for (std::uint32_t y = 0; y < F.q(); ++y) {
      if (F.add(F.pow(static_cast<fe>(y), q0_), static_cast<fe>(y)) == rhs) {
        out.push_back({id++, static_cast<fe>(x), static_cast<fe>(y)});
      }
    }
  }
  if (out.size() != static_cast<std::size_t>(q0_) * q0_ * q0_) {
    throw std::logic_error("hermitian: affine place count != q0^3");
  }
  return out;
}

std::vector<RRBasisElement> Curve::rr_basis(unsigned m) const {
  std::vector<RRBasisElement> basis;
  if (kind_ == CurveKind::rational) {
    for (unsigned i = 0; i <= m; ++i) basis.push_back({i, 0});
    return basis;
  }
  // x has pole order q0 at P_inf, y has pole order q0+1; y^{q0} is reducible
  // via the curve equation so j <= q0-1. Order by pole order, then j.
  for (unsigned pole = 0; pole <= m; ++pole) {
    for (unsigned j = 0; j < q0_ && j * (q0_ + 1) <= pole; ++j) {
      const unsigned rem = pole - j * (q0_ + 1);
      if (rem % q0_ == 0) basis.push_back({rem / q0_, j});
    }
  }
  return basis;
}

fe Curve::evaluate(const RRBasisElement& elem, const Place& place) const {
  const Field& F = *field_;
  return F.mul(F.pow(place.x, elem.i), F.pow(place.y, elem.j));
}

Mat Curve::evaluation_matrix(unsigned m,
                             const std::vector<Place>& places) const {
  {
    std::set<std::pair<fe, fe>> seen;
    for (const auto& p : places) {
      if (!seen.insert({p.x, p.y}).second) {
        throw std::invalid_argument("evaluation_matrix: duplicate place");
      }
    }
  }
  const auto basis = rr_basis(m);
  Mat M(basis.size(), places.size());
  for (std::size_t r = 0; r < basis.size(); ++r) {
    for (std::size_t c = 0; c < places.size(); ++c) {
      M.at(r, c) = evaluate(basis[r], places[c]);
    }
  }
  return M;
}

}  // namespace agd
