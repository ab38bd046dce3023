#include "kuwata/elliptic.hpp"

namespace kuwata {

CurvePtr<FieldElement> fiber_curve(const CurvePtr<RatFunc>& e, const FieldElement& a) {
  auto av = e->a().eval(a);
  auto bv = e->b().eval(a);
  if (!av || !bv) throw std::domain_error("curve coefficients have a pole at the given t");
  return make_curve<FieldElement>(*av, *bv);
}

PointOverField specialize(const Section& s, const CurvePtr<FieldElement>& fiber,
                          const FieldElement& a) {
  if (s.is_zero()) return PointOverField::zero(fiber);
  auto xv = s.x().eval(a);
  auto yv = s.y().eval(a);
  if (!xv || !yv) throw std::domain_error("section has a pole at the given t");
  return PointOverField::affine(fiber, *xv, *yv);
}

TwistResult quadratic_twist(const CurvePtr<FieldElement>& e, const FieldElement& c) {
  if (legendre(c) != -1)
    throw std::domain_error("twist parameter must be a non-square");
  FieldElement c2 = c * c, c3 = c2 * c;
  return TwistResult{make_curve<FieldElement>(e->a() * c2, e->b() * c3), c, c2};
}

std::uint64_t count_points(const CurvePtr<FieldElement>& e) {
  const FieldPtr& f = e->a().field();
  if (f->order > 100000) throw std::domain_error("naive point count capped at q <= 10^5");
  std::uint64_t count = 1;  // point at infinity
  for (BigInt i = 0; i < f->order; ++i) {
    FieldElement x = element_at(f, i);
    FieldElement rhs = x * x * x + e->a() * x + e->b();
    count += static_cast<std::uint64_t>(1 + legendre(rhs));
  }
  return count;
}

}  // namespace kuwata
