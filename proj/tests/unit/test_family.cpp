#include <doctest.h>

#include <random>

#include "kuwata/family.hpp"

using namespace kuwata;

namespace {

FamilyParams params726() { return validate_params(make_field(7, 1), 2, 6, false); }

Poly poly_t_pow_minus(const FieldPtr& f, unsigned e, std::int64_t c) {
  std::vector<std::int64_t> v(e + 1, 0);
  v[0] = -c;
  v[e] = 1;
  return Poly::from_ints(f, v);
}

}  // namespace

TEST_CASE("parameter validation") {
  auto f7 = make_field(7, 1);
  CHECK_NOTHROW(validate_params(f7, 2, 6, false));

  // b = 6 = 3^3 is a cube: rejected strict, flagged relaxed
  CHECK_THROWS_AS(validate_params(f7, 6, 6, false), ParamError);
  auto relaxed = validate_params(f7, 6, 6, true);
  CHECK(relaxed.b_is_cube);

  // c = 2 is not a cube mod 7
  try {
    validate_params(f7, 2, 2, false);
    FAIL("expected rejection");
  } catch (const ParamError& e) {
    CHECK(e.violation() == ParamViolation::CNotCube);
  }
  // c = 1 is a square
  try {
    validate_params(f7, 2, 1, false);
    FAIL("expected rejection");
  } catch (const ParamError& e) {
    CHECK(e.violation() == ParamViolation::CIsSquare);
  }
  // q = 5 is 2 mod 3
  CHECK_THROWS_AS(validate_params(make_field(5, 1), 2, 3, false), ParamError);

  // canonical roots
  auto par = params726();
  CHECK(par.cbrt_c.rep() == 3);  // min of {3, 5, 6}
  CHECK(par.consts.omega.rep() == 4);
  CHECK((par.sqrt_c * par.sqrt_c) == par.emb(par.c));
  CHECK((par.cbrt_b * par.cbrt_b * par.cbrt_b) == par.emb(par.b));
  FieldElement fourb = FieldElement::from_int(par.ext, 4) * par.emb(par.b);
  CHECK((par.cbrt_4b * par.cbrt_4b * par.cbrt_4b) == fourb);
}

TEST_CASE("Weierstrass models") {
  auto par = params726();
  auto f = par.base;

  // 2 b^2 = 8 = 1 in F_7, so E: y^2 = x^3 + (t^6 - 6)^2
  auto e = weierstrass_model(par, SurfaceId::e());
  Poly g = poly_t_pow_minus(f, 6, 6);
  CHECK(e->b() == RatFunc(g * g));
  CHECK(e->a().is_zero());

  // E_0: y^2 = x^3 + (t - 6)^2
  auto e0 = weierstrass_model(par, SurfaceId::ej(0));
  Poly g1 = poly_t_pow_minus(f, 1, 6);
  CHECK(e0->b() == RatFunc(g1 * g1));

  // K_12 model: y^2 = x^3 + (t^12 - 6)^2
  auto k12 = weierstrass_model(par, SurfaceId::k6n(2));
  Poly g12 = poly_t_pow_minus(f, 12, 6);
  CHECK(k12->b() == RatFunc(g12 * g12));

  // K_6n surface record
  auto surf = kummer_surface(par, SurfaceId::k6n(2));
  CHECK(surf.t_exponent == 12);
  CHECK_FALSE(surf.is_k2);
  CHECK(kummer_surface(par, SurfaceId::k2()).t_exponent == 2);
}

TEST_CASE("zero and torsion sections at infinity") {
  auto par = params726();
  auto z6 = kummer_zero_section(par, SurfaceId::k6n(1));
  CHECK(z6.at_infinity);
  CHECK(z6.inf_X0 == RatFunc(Poly::t(par.base).pow(2)));
  CHECK(z6.inf_X1.rep() == 3);
  auto z12 = kummer_zero_section(par, SurfaceId::k6n(2));
  CHECK(z12.inf_X0 == RatFunc(Poly::t(par.base).pow(4)));

  // homogenized K6n equation on the line X2 = 0: X1^3 t^{6n} = c X0^3
  for (unsigned n : {1u, 2u}) {
    auto z = kummer_zero_section(par, SurfaceId::k6n(n));
    RatFunc lhs = RatFunc::constant(z.inf_X1).pow(3) * RatFunc(Poly::t(par.base).pow(6 * n));
    RatFunc rhs = RatFunc::constant(par.c) * z.inf_X0.pow(3);
    CHECK(lhs == rhs);
  }

  auto tors = kummer_torsion_sections(par);
  CHECK(tors[0].inf_X1.rep() == 5);  // omega * cbrt(c) = 4*3 = 12 = 5
  CHECK(tors[1].inf_X1.rep() == 6);  // omega^2 * cbrt(c) = 2*3 = 6

  // their phi images are affine order-3 sections, negatives of each other
  Section t1 = phi_section(par, 1, tors[0]);
  Section t2 = phi_section(par, 1, tors[1]);
  CHECK(t1.x().is_zero());
  CHECK(scalar_mul(3, t1).is_zero());
  CHECK_FALSE(scalar_mul(2, t1).is_zero());
  CHECK(t2 == neg(t1));

  // the zero section maps to the zero point
  CHECK(phi_section(par, 1, kummer_zero_section(par, SurfaceId::k6n(1))).is_zero());
}

TEST_CASE("named sections share the y-coordinate within a triple") {
  auto par = params726();
  Section p0 = named_section(par, SectionFamily::P, 0);
  Section p1 = named_section(par, SectionFamily::P, 1);
  Section p2 = named_section(par, SectionFamily::P, 2);
  CHECK(p0.y() == p1.y());
  CHECK(p1.y() == p2.y());
  CHECK(on_curve(p0));
  Section q0 = named_section(par, SectionFamily::Q, 0);
  CHECK(on_curve(q0));
  CHECK(q0.y() == named_section(par, SectionFamily::Q, 2).y());
}

TEST_CASE("phi round trip on sections") {
  // relaxed parameters admit the constant section (3, 3) on K2
  auto par = validate_params(make_field(7, 1), 6, 6, true);
  KummerSection s;
  s.x0 = RatFunc::constant(FieldElement::from_int(par.base, 3));
  s.x1 = RatFunc::constant(FieldElement::from_int(par.base, 3));
  CHECK(kummer_equation_holds(kummer_surface(par, SurfaceId::k2()), s.x0, s.x1));

  // base change to K6 keeps it a section
  KummerSection s6 = base_change(s, 1);
  CHECK(kummer_equation_holds(6, par.emb(par.b), par.emb(par.c),
                              s6.x0.map_coeffs(par.emb), s6.x1.map_coeffs(par.emb)));

  Section img = phi_section(par, 1, s6);
  CHECK(on_curve(img));
  KummerSection back = phi_inv_section(par, 1, img);
  CHECK_FALSE(back.at_infinity);
  CHECK(back.x0 == s6.x0.map_coeffs(par.emb));
  CHECK(back.x1 == s6.x1.map_coeffs(par.emb));
}

TEST_CASE("phi round trip on sampled points") {
  auto par = params726();
  std::mt19937_64 rng(42);
  for (int i = 0; i < 50; ++i) {
    KummerPointExt pt = sample_kummer_point(par, 1, rng);
    // the sample satisfies the surface equation
    FieldElement lhs = (pt.x1 * pt.x1 * pt.x1 - par.emb(par.b)) * pt.t.pow(6);
    FieldElement rhs = par.emb(par.c) * (pt.x0 * pt.x0 * pt.x0 - par.emb(par.b));
    CHECK(lhs == rhs);
    PhiPoint ph = phi_point(par, 1, pt.x0, pt.x1, pt.t);
    REQUIRE_FALSE(ph.exceptional);
    CHECK(on_curve(ph.point));
    PhiInvPoint inv = phi_inv_point(par, 1, ph.point, pt.t);
    REQUIRE_FALSE(inv.exceptional);
    CHECK(inv.x0 == pt.x0);
    CHECK(inv.x1 == pt.x1);
  }
}

TEST_CASE("phi exceptional locus is reported, not a crash") {
  auto par = params726();
  const FieldPtr& F = par.ext;
  // pick t, x1 and force x0 cbrt(c) = t^2 x1
  FieldElement t = par.emb(FieldElement::from_int(par.base, 2));
  FieldElement x1 = par.emb(FieldElement::from_int(par.base, 5));
  FieldElement x0 = t * t * x1 / par.emb(par.cbrt_c);
  PhiPoint ph = phi_point(par, 1, x0, x1, t);
  CHECK(ph.exceptional);

  // phi_inv at t = 0 and on x = 0 points is exceptional pointwise
  auto e = weierstrass_model_ext(par, SurfaceId::k6n(1));
  auto fiber = fiber_curve(e, par.emb(FieldElement::from_int(par.base, 1)));
  PhiInvPoint inv = phi_inv_point(par, 1, PointOverField::zero(fiber), FieldElement::from_int(F, 1));
  CHECK(inv.exceptional);
}

TEST_CASE("base change pulls the K2 equation back to K6n") {
  auto par = params726();
  // formal pullback: substituting t -> t^{3n} in the K2 identity gives the
  // K6n identity; witnessed on candidate pairs
  std::mt19937_64 rng(31);
  for (unsigned n : {1u, 2u}) {
    for (int i = 0; i < 20; ++i) {
      Poly x0(par.base, {element_at(par.base, BigInt(rng()) % 7),
                         element_at(par.base, BigInt(rng()) % 7)});
      Poly x1(par.base, {element_at(par.base, BigInt(rng()) % 7),
                         element_at(par.base, BigInt(rng()) % 7)});
      RatFunc r0{x0}, r1{x1};
      bool on_k2 = kummer_equation_holds(2, par.b, par.c, r0, r1);
      bool on_k6n = kummer_equation_holds(6 * n, par.b, par.c, r0.compose_power(3 * n),
                                          r1.compose_power(3 * n));
      CHECK(on_k2 == on_k6n);
    }
  }
  KummerSection inf;
  inf.at_infinity = true;
  CHECK_THROWS_AS(base_change(inf, 1), std::invalid_argument);
}

TEST_CASE("global minimality") {
  auto par = params726();
  auto rep = check_global_minimality(weierstrass_model(par, SurfaceId::e()));
  CHECK(rep.minimal);
  CHECK(rep.chi == 2);
  CHECK(rep.v_infinity == 0);
  for (const auto& pm : rep.finite) CHECK(pm.valuation == 2);

  for (int j = 0; j <= 5; ++j)
    CHECK(check_global_minimality(weierstrass_model(par, SurfaceId::ej(j))).minimal);
  for (unsigned n : {1u, 2u, 3u})
    CHECK(check_global_minimality(weierstrass_model(par, SurfaceId::k6n(n))).minimal);

  // y^2 = x^3 + t^6 is not minimal at t = 0
  auto f = par.base;
  auto bad = make_curve<RatFunc>(RatFunc::zero(f), RatFunc(Poly::t(f).pow(6)));
  auto bad_rep = check_global_minimality(bad);
  CHECK_FALSE(bad_rep.minimal);
  REQUIRE(bad_rep.finite.size() == 1);
  CHECK(bad_rep.finite[0].valuation == 6);
  CHECK_FALSE(bad_rep.finite[0].ok);

  CHECK(infinity_partner(1) == 3);
  CHECK(infinity_partner(3) == 1);
  CHECK(infinity_partner(5) == 5);
}

TEST_CASE("specialized fibers away from the discriminant have j = 0") {
  auto par = params726();
  auto e = weierstrass_model(par, SurfaceId::e());
  for (std::int64_t a = 0; a < 7; ++a) {
    FieldElement t = FieldElement::from_int(par.base, a);
    auto bv = e->b().eval(t);
    if (!bv || bv->is_zero()) continue;
    auto fiber = fiber_curve(e, t);
    CHECK(fiber->j_invariant().is_zero());
  }
}
