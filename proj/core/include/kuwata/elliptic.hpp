#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>

#include "kuwata/poly.hpp"

namespace kuwata {

// Small-integer constants in whichever coefficient ring a curve lives over.
inline FieldElement ring_int(const FieldElement& like, std::int64_t v) {
  return FieldElement::from_int(like.field(), v);
}
inline RatFunc ring_int(const RatFunc& like, std::int64_t v) {
  return RatFunc::constant(FieldElement::from_int(like.field(), v));
}

/// Short Weierstrass curve y^2 = x^3 + A x + B over a coefficient field K
/// (a finite field or a rational function field). One group-law
/// implementation serves both worlds.
template <class K>
class EllipticCurve {
 public:
  EllipticCurve(K a, K b) : a_(std::move(a)), b_(std::move(b)) {
    if (discriminant().is_zero()) throw std::domain_error("singular Weierstrass equation");
  }

  const K& a() const { return a_; }
  const K& b() const { return b_; }

  K discriminant() const {
    K four = ring_int(a_, 4), twenty7 = ring_int(a_, 27), m16 = ring_int(a_, -16);
    return m16 * (four * a_ * a_ * a_ + twenty7 * b_ * b_);
  }

  K j_invariant() const {
    K four_a3 = ring_int(a_, 4) * a_ * a_ * a_;
    return ring_int(a_, 1728) * four_a3 / (four_a3 + ring_int(a_, 27) * b_ * b_);
  }

  bool operator==(const EllipticCurve& o) const { return a_ == o.a_ && b_ == o.b_; }

 private:
  K a_, b_;
};

template <class K>
using CurvePtr = std::shared_ptr<const EllipticCurve<K>>;

template <class K>
CurvePtr<K> make_curve(K a, K b) {
  return std::make_shared<const EllipticCurve<K>>(std::move(a), std::move(b));
}

/// A point of E(K): affine coordinates or the zero point at infinity.
template <class K>
class CurvePoint {
 public:
  CurvePoint() = default;

  static CurvePoint zero(CurvePtr<K> curve) {
    CurvePoint p;
    p.curve_ = std::move(curve);
    p.infinity_ = true;
    return p;
  }
  static CurvePoint affine(CurvePtr<K> curve, K x, K y) {
    CurvePoint p;
    p.curve_ = std::move(curve);
    p.infinity_ = false;
    p.x_ = std::move(x);
    p.y_ = std::move(y);
    return p;
  }

  const CurvePtr<K>& curve() const { return curve_; }
  bool is_zero() const { return infinity_; }
  const K& x() const { require_affine(); return x_; }
  const K& y() const { require_affine(); return y_; }

  bool operator==(const CurvePoint& o) const {
    if (infinity_ || o.infinity_) return infinity_ == o.infinity_;
    return x_ == o.x_ && y_ == o.y_;
  }
  bool operator!=(const CurvePoint& o) const { return !(*this == o); }

 private:
  void require_affine() const {
    if (infinity_) throw std::logic_error("zero point has no affine coordinates");
  }
  CurvePtr<K> curve_;
  bool infinity_ = true;
  K x_, y_;
};

template <class K>
bool on_curve(const CurvePoint<K>& p) {
  if (p.is_zero()) return true;
  const auto& e = *p.curve();
  K lhs = p.y() * p.y();
  K rhs = p.x() * p.x() * p.x() + e.a() * p.x() + e.b();
  return lhs == rhs;
}

template <class K>
CurvePoint<K> neg(const CurvePoint<K>& p) {
  if (p.is_zero()) return p;
  return CurvePoint<K>::affine(p.curve(), p.x(), -p.y());
}

template <class K>
CurvePoint<K> add(const CurvePoint<K>& p, const CurvePoint<K>& q) {
  if (p.is_zero()) return q;
  if (q.is_zero()) return p;
  if (!(*p.curve() == *q.curve())) throw std::invalid_argument("points on different curves");
  const auto& e = *p.curve();
  K lambda = p.x();  // placeholder of the right ring
  if (p.x() == q.x()) {
    if (p.y() == -q.y()) return CurvePoint<K>::zero(p.curve());  // includes y == 0 doubling
    K three = ring_int(p.x(), 3), two = ring_int(p.x(), 2);
    lambda = (three * p.x() * p.x() + e.a()) / (two * p.y());
  } else {
    lambda = (q.y() - p.y()) / (q.x() - p.x());
  }
  K xr = lambda * lambda - p.x() - q.x();
  K yr = lambda * (p.x() - xr) - p.y();
  return CurvePoint<K>::affine(p.curve(), std::move(xr), std::move(yr));
}

template <class K>
CurvePoint<K> sub(const CurvePoint<K>& p, const CurvePoint<K>& q) {
  return add(p, neg(q));
}

template <class K>
CurvePoint<K> scalar_mul(std::int64_t n, const CurvePoint<K>& p) {
  if (n < 0) return scalar_mul(-n, neg(p));
  CurvePoint<K> r = CurvePoint<K>::zero(p.curve());
  CurvePoint<K> base = p;
  while (n) {
    if (n & 1) r = add(r, base);
    base = add(base, base);
    n >>= 1;
  }
  return r;
}

using PointOverField = CurvePoint<FieldElement>;
using Section = CurvePoint<RatFunc>;

/// Relative degree of the coefficient field a section lives over.
inline unsigned coefficient_extension_degree(const Section& s, const FieldPtr& base) {
  const FieldPtr& f = s.is_zero() ? base : s.x().field();
  return f->k / base->k;
}

/// Specialize a section at t = a (the section's coefficient field).
/// Throws at a pole of either coordinate.
PointOverField specialize(const Section& s, const CurvePtr<FieldElement>& fiber,
                          const FieldElement& a);

/// Fiber of a function-field curve at t = a, as a curve over the field of a.
CurvePtr<FieldElement> fiber_curve(const CurvePtr<RatFunc>& e, const FieldElement& a);

/// Quadratic twist of y^2 = x^3 + A x + B by a non-square c:
/// the short model y^2 = x^3 + A c^2 x + B c^3, with (x, y) -> (c x, c^2 y)
/// identifying it with c y^2 = x^3 + A x + B. Throws when c is a square.
struct TwistResult {
  CurvePtr<FieldElement> short_model;
  FieldElement scale_x;  // c
  FieldElement scale_y;  // c^2
};
TwistResult quadratic_twist(const CurvePtr<FieldElement>& e, const FieldElement& c);

/// Naive point count of E(F_q) including the point at infinity (q <= ~10^4).
std::uint64_t count_points(const CurvePtr<FieldElement>& e);

}  // namespace kuwata
