#include "kuwata/family.hpp"

#include <sstream>

namespace kuwata {

namespace {

Poly t_power_minus(const FieldPtr& f, unsigned e, const FieldElement& cst) {
  // t^e - cst
  std::vector<FieldElement> c(e + 1, FieldElement::from_int(f, 0));
  c[0] = -cst;
  c[e] = FieldElement::from_int(f, 1);
  return Poly(f, std::move(c));
}

FieldElement inv_2b2(const FieldElement& b) {
  return (FieldElement::from_int(b.field(), 2) * b * b).inverse();
}

}  // namespace

std::string violation_str(ParamViolation v) {
  switch (v) {
    case ParamViolation::QMod3: return "q-mod-3";
    case ParamViolation::BZero: return "b-zero";
    case ParamViolation::BIsCube: return "b-is-cube";
    case ParamViolation::CZero: return "c-zero";
    case ParamViolation::CNotCube: return "c-not-cube";
    case ParamViolation::CIsSquare: return "c-is-square";
    case ParamViolation::NBad: return "n-bad";
  }
  return "unknown";
}

ParamError::ParamError(ParamViolation v)
    : std::domain_error("parameter hypothesis violated: " + violation_str(v)), v_(v) {}

FamilyParams validate_params(const FieldPtr& base, const FieldElement& b, const FieldElement& c,
                             bool relaxed) {
  if (!base) throw std::invalid_argument("null base field");
  if ((base->order - 1) % 3 != 0) throw ParamError(ParamViolation::QMod3);
  if (b.is_zero()) throw ParamError(ParamViolation::BZero);
  if (c.is_zero()) throw ParamError(ParamViolation::CZero);
  auto c_roots = cube_roots(c);
  if (c_roots.empty()) throw ParamError(ParamViolation::CNotCube);
  if (legendre(c) != -1) throw ParamError(ParamViolation::CIsSquare);
  auto b_roots = cube_roots(b);
  const bool b_cube = !b_roots.empty();
  if (b_cube && !relaxed) throw ParamError(ParamViolation::BIsCube);

  FamilyParams par;
  par.base = base;
  par.b = b;
  par.c = c;
  par.consts = special_constants(base);
  par.cbrt_c = c_roots.front();
  par.relaxed = relaxed;
  par.b_is_cube = b_cube;
  par.ext = extension_field(base, 6);
  par.emb = make_embedding(base, par.ext);
  // c is a square and both b, 4b are cubes in F_{q^6}: the norm maps kill
  // the obstructions (q^6 - 1 has even quotient by q - 1, and 3 | 6)
  par.sqrt_c = *sqrt(par.emb(c));
  par.cbrt_b = cube_roots(par.emb(b)).front();
  par.cbrt_4b = cube_roots(FieldElement::from_int(par.ext, 4) * par.emb(b)).front();
  return par;
}

FamilyParams validate_params(const FieldPtr& base, std::uint64_t b, std::uint64_t c, bool relaxed) {
  return validate_params(base, FieldElement::from_int(base, static_cast<std::int64_t>(b)),
                         FieldElement::from_int(base, static_cast<std::int64_t>(c)), relaxed);
}

std::string SurfaceId::str() const {
  switch (tag) {
    case Tag::K2: return "K2";
    case Tag::K6n: return n == 1 ? "K6" : "K" + std::to_string(6 * n);
    case Tag::E: return "E";
    case Tag::Ej: return "E" + std::to_string(j);
  }
  return "?";
}

namespace {

void check_k6n(const FamilyParams& par, unsigned n) {
  // p | n would make t^{6n} - c inseparable and the standard model non-minimal
  if (n < 1 || n % par.base->p == 0) throw ParamError(ParamViolation::NBad);
}

}  // namespace

CurvePtr<RatFunc> weierstrass_model(const FamilyParams& par, const SurfaceId& id) {
  const FieldPtr& f = par.base;
  const FieldElement inv = inv_2b2(par.b);
  RatFunc zero = RatFunc::zero(f);
  switch (id.tag) {
    case SurfaceId::Tag::E:
    case SurfaceId::Tag::K6n: {
      unsigned n = id.tag == SurfaceId::Tag::E ? 1 : id.n;
      check_k6n(par, n);
      Poly g = t_power_minus(f, 6 * n, par.c) * inv;
      return make_curve<RatFunc>(zero, RatFunc(g * g));
    }
    case SurfaceId::Tag::Ej: {
      Poly g = t_power_minus(f, 1, par.c) * inv;
      Poly tj = Poly::t(f).pow(static_cast<unsigned>(id.j));
      return make_curve<RatFunc>(zero, RatFunc(tj * g * g));
    }
    case SurfaceId::Tag::K2:
      throw std::invalid_argument("K2 carries no Weierstrass model here (no known section)");
  }
  throw std::logic_error("unreachable");
}

CurvePtr<RatFunc> weierstrass_model_ext(const FamilyParams& par, const SurfaceId& id) {
  auto e = weierstrass_model(par, id);
  return make_curve<RatFunc>(e->a().map_coeffs(par.emb), e->b().map_coeffs(par.emb));
}

KummerSurface kummer_surface(const FamilyParams& par, const SurfaceId& id) {
  if (id.tag == SurfaceId::Tag::K2) return KummerSurface{2, true, 1, par.b, par.c};
  if (id.tag == SurfaceId::Tag::K6n) {
    check_k6n(par, id.n);
    return KummerSurface{6 * id.n, false, id.n, par.b, par.c};
  }
  throw std::invalid_argument("not a Kummer-family surface id");
}

bool kummer_equation_holds(unsigned t_exponent, const FieldElement& b, const FieldElement& c,
                           const RatFunc& x0, const RatFunc& x1) {
  RatFunc bb = RatFunc::constant(b), cc = RatFunc::constant(c);
  RatFunc tm = RatFunc(Poly::t(b.field()).pow(t_exponent));
  RatFunc lhs = (x1 * x1 * x1 - bb) * tm;
  RatFunc rhs = cc * (x0 * x0 * x0 - bb);
  return lhs == rhs;
}

bool kummer_equation_holds(const KummerSurface& s, const RatFunc& x0, const RatFunc& x1) {
  if (!x0.field()->same(*s.b.field()))
    throw std::invalid_argument("candidate lives over a different field than the surface data");
  return kummer_equation_holds(s.t_exponent, s.b, s.c, x0, x1);
}

std::string KummerSection::str() const {
  std::ostringstream os;
  if (at_infinity)
    os << "(" << inf_X0.str() << " : " << inf_X1.str() << " : 0)";
  else
    os << "(x0 = " << x0.str() << ", x1 = " << x1.str() << ")";
  return os.str();
}

KummerSection kummer_zero_section(const FamilyParams& par, const SurfaceId& id) {
  if (id.tag != SurfaceId::Tag::K6n) throw std::invalid_argument("zero section requires a K6n id");
  check_k6n(par, id.n);
  KummerSection s;
  s.at_infinity = true;
  s.inf_X0 = RatFunc(Poly::t(par.base).pow(2 * id.n));
  s.inf_X1 = par.cbrt_c;
  return s;
}

std::array<KummerSection, 2> kummer_torsion_sections(const FamilyParams& par) {
  std::array<KummerSection, 2> out;
  const FieldElement& w = par.consts.omega;
  for (int j = 1; j <= 2; ++j) {
    KummerSection s;
    s.at_infinity = true;
    s.inf_X0 = RatFunc(Poly::t(par.base).pow(2));
    s.inf_X1 = (j == 1 ? w : w * w) * par.cbrt_c;
    out[j - 1] = s;
  }
  return out;
}

KummerSection base_change(const KummerSection& s, unsigned n) {
  if (s.at_infinity)
    throw std::invalid_argument("base change is defined for affine K2 sections");
  KummerSection r;
  r.x0 = s.x0.compose_power(3 * n);
  r.x1 = s.x1.compose_power(3 * n);
  return r;
}

// ---- phi --------------------------------------------------------------------

namespace {

struct ExtConstants {
  FieldElement b, c, cbrt_c, sqrt_m3, omega;
};

ExtConstants ext_constants(const FamilyParams& par) {
  return {par.emb(par.b), par.emb(par.c), par.emb(par.cbrt_c), par.emb(par.consts.sqrt_minus3),
          par.emb(par.consts.omega)};
}

/// y-scale of the order-3 section at infinity with X1 = omega^j cbrt(c):
/// sqrt(-3)(1 + omega^j) / (-2 b^2 (1 - omega^j)); equals +-1/(2b^2).
FieldElement torsion_y_scale(const FamilyParams& par, int j) {
  const FieldElement& w = par.consts.omega;
  FieldElement wj = j == 1 ? w : w * w;
  FieldElement one = FieldElement::from_int(par.base, 1);
  FieldElement two_b2 = FieldElement::from_int(par.base, 2) * par.b * par.b;
  return par.consts.sqrt_minus3 * (one + wj) / (-(two_b2 * (one - wj)));
}

}  // namespace

PhiPoint phi_point(const FamilyParams& par, unsigned n, const FieldElement& x0,
                   const FieldElement& x1, const FieldElement& t) {
  check_k6n(par, n);
  ExtConstants k = ext_constants(par);
  const FieldPtr& F = par.ext;
  FieldElement t2n = t.pow(BigInt(2 * n));
  FieldElement t6n = t2n * t2n * t2n;
  FieldElement dnm = k.b * (x0 * k.cbrt_c - t2n * x1);
  PhiPoint out;
  if (dnm.is_zero()) {
    out.exceptional = true;
    return out;
  }
  FieldElement x = (t6n - k.c) / dnm;
  FieldElement y = k.sqrt_m3 * (x0 * k.cbrt_c + t2n * x1) / FieldElement::from_int(F, -2) / k.b * x;
  FieldElement inv = inv_2b2(k.b);
  FieldElement bcoef = (t6n - k.c) * inv;
  auto fiber = make_curve<FieldElement>(FieldElement::from_int(F, 0), bcoef * bcoef);
  out.point = PointOverField::affine(fiber, x, y);
  return out;
}

PhiInvPoint phi_inv_point(const FamilyParams& par, unsigned n, const PointOverField& p,
                          const FieldElement& t) {
  check_k6n(par, n);
  ExtConstants k = ext_constants(par);
  PhiInvPoint out;
  if (p.is_zero() || t.is_zero() || p.x().is_zero()) {
    out.exceptional = true;  // lands on the line at infinity
    return out;
  }
  const FieldPtr& F = par.ext;
  FieldElement t2n = t.pow(BigInt(2 * n));
  FieldElement t6n = t2n * t2n * t2n;
  FieldElement two_b2 = FieldElement::from_int(F, 2) * k.b * k.b;
  FieldElement m2s = FieldElement::from_int(F, -2) * k.sqrt_m3;
  out.x0 = (two_b2 * p.y() - k.sqrt_m3 * (t6n - k.c)) / (m2s * k.b * k.cbrt_c * p.x());
  out.x1 = (two_b2 * p.y() + k.sqrt_m3 * (t6n - k.c)) / (m2s * k.b * t2n * p.x());
  return out;
}

Section phi_section(const FamilyParams& par, unsigned n, const KummerSection& s) {
  check_k6n(par, n);
  auto model = weierstrass_model_ext(par, SurfaceId::k6n(n));
  const FieldPtr& F = par.ext;
  if (s.at_infinity) {
    FieldElement nu = s.inf_X1 / par.cbrt_c;  // 1, omega or omega^2
    if (nu.is_one()) return Section::zero(model);
    int j = nu == par.consts.omega ? 1 : 2;
    if (j == 2 && nu != par.consts.omega * par.consts.omega)
      throw std::invalid_argument("section at infinity is not in the torsion family");
    FieldElement scale = par.emb(torsion_y_scale(par, j));
    Poly ty = t_power_minus(F, 6 * n, par.emb(par.c)) * scale;
    return Section::affine(model, RatFunc::zero(F), RatFunc(ty));
  }
  RatFunc x0 = s.x0, x1 = s.x1;
  if (x0.field()->same(*par.base)) {
    x0 = x0.map_coeffs(par.emb);
    x1 = x1.map_coeffs(par.emb);
  } else if (!x0.field()->same(*par.ext)) {
    throw std::invalid_argument("section coordinates live in an unexpected field");
  }
  ExtConstants k = ext_constants(par);
  RatFunc t2n = RatFunc(Poly::t(F).pow(2 * n));
  RatFunc t6nc = RatFunc(t_power_minus(F, 6 * n, k.c));
  RatFunc cb = RatFunc::constant(k.cbrt_c), bb = RatFunc::constant(k.b);
  RatFunc dnm = bb * (x0 * cb - t2n * x1);
  if (dnm.is_zero()) throw std::domain_error("section lies on the exceptional locus of phi");
  RatFunc x = t6nc / dnm;
  RatFunc y = RatFunc::constant(k.sqrt_m3) * (x0 * cb + t2n * x1) /
              RatFunc::constant(FieldElement::from_int(F, -2) * k.b) * x;
  Section out = Section::affine(model, std::move(x), std::move(y));
  if (!on_curve(out)) throw std::logic_error("phi image left the Weierstrass model");
  return out;
}

KummerSection phi_inv_section(const FamilyParams& par, unsigned n, const Section& s) {
  check_k6n(par, n);
  const FieldPtr& F = par.ext;
  if (s.is_zero()) {
    KummerSection z = kummer_zero_section(par, SurfaceId::k6n(n));
    return z;
  }
  ExtConstants k = ext_constants(par);
  if (s.x().is_zero()) {
    // order-3 sections at infinity: y = +-(t^{6n} - c)/(2 b^2)
    RatFunc t6nc = RatFunc(t_power_minus(F, 6 * n, k.c));
    for (int j = 1; j <= 2; ++j) {
      FieldElement scale = par.emb(torsion_y_scale(par, j));
      if (s.y() == t6nc * RatFunc::constant(scale)) {
        KummerSection out;
        out.at_infinity = true;
        out.inf_X0 = RatFunc(Poly::t(par.base).pow(2 * n));
        FieldElement w = par.consts.omega;
        out.inf_X1 = (j == 1 ? w : w * w) * par.cbrt_c;
        return out;
      }
    }
    throw std::logic_error("x = 0 section is not one of the torsion sections");
  }
  RatFunc t2n = RatFunc(Poly::t(F).pow(2 * n));
  RatFunc t6nc = RatFunc(t_power_minus(F, 6 * n, k.c));
  RatFunc two_b2 = RatFunc::constant(FieldElement::from_int(F, 2) * k.b * k.b);
  RatFunc sm3 = RatFunc::constant(k.sqrt_m3);
  RatFunc m2s = RatFunc::constant(FieldElement::from_int(F, -2) * k.sqrt_m3);
  KummerSection out;
  out.x0 = (two_b2 * s.y() - sm3 * t6nc) / (m2s * RatFunc::constant(k.b * k.cbrt_c) * s.x());
  out.x1 = (two_b2 * s.y() + sm3 * t6nc) / (m2s * RatFunc::constant(k.b) * t2n * s.x());
  return out;
}

Section named_section(const FamilyParams& par, SectionFamily fam, int k) {
  k = ((k % 3) + 3) % 3;
  const FieldPtr& F = par.ext;
  ExtConstants kc = ext_constants(par);
  FieldElement wk = FieldElement::from_int(F, 1);
  for (int i = 0; i < k; ++i) wk = wk * kc.omega;
  FieldElement inv = inv_2b2(kc.b);
  Poly tmc = t_power_minus(F, 1, kc.c);  // t - c
  Poly t = Poly::t(F);
  if (fam == SectionFamily::P) {
    auto model = weierstrass_model_ext(par, SurfaceId::ej(1));
    FieldElement dnm = (-(kc.b)) * par.cbrt_4b;
    RatFunc x = RatFunc(tmc * (wk / dnm));
    RatFunc y = RatFunc(tmc * (par.sqrt_c * inv));
    Section s = Section::affine(model, std::move(x), std::move(y));
    if (!on_curve(s)) throw std::logic_error("P_k is not on E_1");
    return s;
  }
  auto model = weierstrass_model_ext(par, SurfaceId::ej(2));
  FieldElement dnm = kc.b * par.cbrt_b;
  RatFunc x = RatFunc(t * (wk * kc.cbrt_c / dnm));
  RatFunc y = RatFunc((t * t + t * kc.c) * inv);
  Section s = Section::affine(model, std::move(x), std::move(y));
  if (!on_curve(s)) throw std::logic_error("Q_k is not on E_2");
  return s;
}

KummerPointExt sample_kummer_point(const FamilyParams& par, unsigned n, std::mt19937_64& rng) {
  check_k6n(par, n);
  const FieldPtr& F = par.ext;
  ExtConstants k = ext_constants(par);
  auto draw = [&]() {
    BigInt v = BigInt(rng());
    v = (v << 64) | BigInt(rng());
    return element_at(F, v % F->order);
  };
  for (int tries = 0; tries < 10000; ++tries) {
    FieldElement t = draw();
    if (t.is_zero()) continue;
    FieldElement t6n = t.pow(BigInt(6 * n));
    if (t6n == k.c) continue;
    FieldElement x0 = draw();
    FieldElement rhs = k.c * (x0 * x0 * x0 - k.b) / t6n + k.b;
    auto roots = cube_roots(rhs);
    if (roots.empty()) continue;
    FieldElement x1 = roots[static_cast<size_t>(rng() % roots.size())];
    return KummerPointExt{x0, x1, t};
  }
  throw std::logic_error("failed to sample a surface point");
}

// ---- minimality --------------------------------------------------------------

MinimalityReport check_global_minimality(const CurvePtr<RatFunc>& e) {
  if (!e->a().is_zero())
    throw std::invalid_argument("minimality check is specific to y^2 = x^3 + B models");
  const RatFunc& B = e->b();
  MinimalityReport rep;
  rep.integral = B.is_polynomial();
  if (!rep.integral || B.is_zero()) {
    rep.minimal = false;
    return rep;
  }
  const Poly& num = B.num();
  bool all_ok = true;
  for (const auto& [pi, mult] : factor(num)) {
    PlaceMinimality pm;
    pm.place = Place::at(pi);
    pm.valuation = mult;
    pm.ok = mult < 6;
    all_ok = all_ok && pm.ok;
    rep.finite.push_back(std::move(pm));
  }
  const int deg = num.degree();
  rep.chi = (deg + 5) / 6;
  rep.v_infinity = 6L * rep.chi - deg;
  rep.minimal = all_ok && deg > 0;
  return rep;
}

}  // namespace kuwata
