#include "kuwata/heights.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace kuwata {

// ---- small matrices ---------------------------------------------------------

Mat2Q Mat2Q::inverse() const {
  Rational dt = det();
  if (dt == 0) throw std::domain_error("singular matrix");
  return {d / dt, -b / dt, -c / dt, a / dt};
}

Mat2Q Mat2Q::operator*(const Mat2Q& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

std::string Mat2Q::str() const {
  std::ostringstream os;
  os << "[[" << rational_str(a) << ", " << rational_str(b) << "], [" << rational_str(c) << ", "
     << rational_str(d) << "]]";
  return os.str();
}

Mat2Z Mat2Z::operator*(const Mat2Z& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Mat2Z Mat2Z::pow(unsigned e) const {
  Mat2Z r = identity(), base = *this;
  while (e) {
    if (e & 1u) r = r * base;
    base = base * base;
    e >>= 1u;
  }
  return r;
}

std::string Mat2Z::str() const {
  std::ostringstream os;
  os << "[[" << a << ", " << b << "], [" << c << ", " << d << "]]";
  return os.str();
}

// ---- context ----------------------------------------------------------------

namespace {

constexpr long kInf = std::numeric_limits<long>::max() / 4;

FiberType type_from_vb(long k) {
  switch (k) {
    case 1: return FiberType::II;
    case 2: return FiberType::IV;
    case 3: return FiberType::I0star;
    case 4: return FiberType::IVstar;
    case 5: return FiberType::IIstar;
  }
  throw std::domain_error("non-minimal valuation of B");
}

long vval(const RatFunc& f, const Poly& pi) {
  if (f.is_zero()) return kInf;
  return poly_valuation(f.num(), pi) - poly_valuation(f.den(), pi);
}

// f(1/s) * s^weight as an exact rational function of s
RatFunc infinity_chart(const RatFunc& f, int weight) {
  if (f.is_zero()) return f;
  Poly rn = f.num().reversed();
  Poly rd = f.den().reversed();
  int shift = weight + f.den().degree() - f.num().degree();
  Poly t = Poly::t(f.field());
  if (shift >= 0) return RatFunc(rn * t.pow(static_cast<unsigned>(shift)), rd);
  return RatFunc(rn, rd * t.pow(static_cast<unsigned>(-shift)));
}

struct ChartCoords {
  RatFunc x, y;
  Poly pi;
};

ChartCoords chart_at(const HeightContext& ctx, const Section& p, const Place& v) {
  if (p.is_zero()) throw std::invalid_argument("zero section has no chart coordinates");
  if (v.is_infinity()) {
    return {infinity_chart(p.x(), 2 * ctx.chi), infinity_chart(p.y(), 3 * ctx.chi),
            Poly::t(p.x().field())};
  }
  return {p.x(), p.y(), *v.finite};
}

// Local picture of one section at one place, in the minimal chart there.
struct LocalData {
  long vx = 0, vy = 0;
  bool meets_zero = false;
  long po = 0;              // contact multiplicity with the zero section
  bool through_sing = false;
  FiberType type = FiberType::II;  // meaningful when the place is bad
  Poly label;               // component discriminator at the singular point
};

LocalData analyze(const ChartCoords& cc, const Place& v, long v_b) {
  LocalData d;
  d.vx = vval(cc.x, cc.pi);
  d.vy = vval(cc.y, cc.pi);
  if (d.vx < 0) {
    if (d.vx % 2 != 0 || d.vy != 3 * d.vx / 2)
      throw std::domain_error("inconsistent pole orders at " + v.str() +
                              " (model not minimal there?)");
    d.meets_zero = true;
    d.po = -d.vx / 2;
    return d;
  }
  if (v_b >= 2 && d.vx > 0 && d.vy > 0) {
    d.through_sing = true;
    d.type = type_from_vb(v_b);
    RatFunc pi_rf = RatFunc(cc.pi);
    switch (d.type) {
      case FiberType::IV:
        // y = r*pi + ..., r^2 = (B/pi^2)(v); the two non-identity components
        // are labelled by the branch r
        if (d.vy != 1) throw std::logic_error("IV component identification failed at " + v.str());
        d.label = residue_of(cc.y / pi_rf, cc.pi);
        break;
      case FiberType::I0star:
        // x = a*pi + ... with a^3 = -(B/pi^3)(v); components labelled by a
        if (d.vx != 1 || d.vy < 2)
          throw std::logic_error("I0* component identification failed at " + v.str());
        d.label = residue_of(cc.x / pi_rf, cc.pi);
        break;
      case FiberType::IVstar:
        // y = r*pi^2 + ..., r^2 = (B/pi^4)(v)
        if (d.vx < 2 || d.vy != 2)
          throw std::logic_error("IV* component identification failed at " + v.str());
        d.label = residue_of(cc.y / (pi_rf * pi_rf), cc.pi);
        break;
      default:
        // II and II* have trivial component groups and no section can pass
        // through their singular point (a y-valuation parity obstruction)
        throw std::logic_error("section through the singular point of a " +
                               fiber_type_str(d.type) + " fiber at " + v.str());
    }
  }
  return d;
}

Rational contr_single(FiberType t) {
  switch (t) {
    case FiberType::IV: return Rational(2, 3);
    case FiberType::I0star: return Rational(1);
    case FiberType::IVstar: return Rational(4, 3);
    default: return Rational(0);
  }
}

Rational contr_pair_distinct(FiberType t) {
  switch (t) {
    case FiberType::IV: return Rational(1, 3);
    case FiberType::I0star: return Rational(1, 2);
    case FiberType::IVstar: return Rational(2, 3);
    default: return Rational(0);
  }
}

// Intersection multiplicity of two distinct, non-opposite sections at one
// place, computed on the smooth model: contact orders are taken after
// passing to the resolved chart when both sections run through the singular
// point of the fiber.
long pair_multiplicity(const HeightContext& ctx, const Section& p, const Section& q,
                       const Place& v, long v_b) {
  ChartCoords cp = chart_at(ctx, p, v);
  ChartCoords cq = chart_at(ctx, q, v);
  LocalData dp = analyze(cp, v, v_b);
  LocalData dq = analyze(cq, v, v_b);
  if (dp.meets_zero && dq.meets_zero) {
    // both reduce to the zero point; local coordinates there are (x/y, 1/y)
    RatFunc zd = cp.x / cp.y - cq.x / cq.y;
    RatFunc wd = cp.y.inverse() - cq.y.inverse();
    long m = std::min(vval(zd, cp.pi), vval(wd, cp.pi));
    if (m >= kInf / 2) throw std::logic_error("sections agree to infinite order at " + v.str());
    return m;
  }
  if (dp.meets_zero != dq.meets_zero) return 0;
  long vdx = vval(cp.x - cq.x, cp.pi);
  long vdy = vval(cp.y - cq.y, cp.pi);
  if (vdx <= 0 || vdy <= 0) return 0;  // distinct reduction points
  if (dp.through_sing != dq.through_sing)
    throw std::logic_error("inconsistent singular-point reductions at " + v.str());
  if (dp.through_sing) {
    if (dp.label != dq.label) return 0;  // separated by the resolution
    long m = 0;
    switch (dp.type) {
      case FiberType::IV: m = std::min(vdx - 1, vdy - 1); break;
      case FiberType::I0star: m = std::min(vdx - 1, vdy - 2); break;
      case FiberType::IVstar: m = std::min(vdx - 2, vdy - 2); break;
      default: throw std::logic_error("unexpected fiber type in resolved contact");
    }
    if (m >= kInf / 2) throw std::logic_error("sections agree to infinite order at " + v.str());
    return std::max(0L, m);
  }
  long m = std::min(vdx, vdy);
  if (m >= kInf / 2) throw std::logic_error("sections agree to infinite order at " + v.str());
  return m;
}

long v_b_at(const HeightContext& ctx, const Place& v) {
  if (v.is_infinity()) return ctx.v_b_infinity;
  for (const auto& b : ctx.bad)
    if (!b.place.is_infinity() && *b.place.finite == *v.finite) return b.v_b;
  return 0;
}

}  // namespace

HeightContext make_height_context(const CurvePtr<RatFunc>& curve) {
  HeightContext ctx;
  ctx.curve = curve;
  const RatFunc& B = curve->b();
  if (!curve->a().is_zero() || !B.is_polynomial() || B.is_zero())
    throw std::invalid_argument("height context needs an integral y^2 = x^3 + B model");
  const int deg = B.num().degree();
  ctx.chi = (deg + 5) / 6;
  for (const auto& [pi, mult] : factor(B.num())) {
    if (mult >= 6) throw std::domain_error("model is not minimal at " + pi.str());
    BadPlaceData bp{Place::at(pi), mult, type_from_vb(mult)};
    ctx.bad.push_back(std::move(bp));
  }
  ctx.v_b_infinity = 6L * ctx.chi - deg;
  ctx.infinity_bad = ctx.v_b_infinity > 0;
  return ctx;
}

long intersection_with_zero(const HeightContext& ctx, const Section& p) {
  if (p.is_zero()) throw std::invalid_argument("(P.O) is defined for affine sections only");
  long total = 0;
  if (!p.x().is_zero() && p.x().den().degree() > 0) {
    for (const auto& [pi, mult] : factor(p.x().den())) {
      Place v = Place::at(pi);
      LocalData d = analyze(chart_at(ctx, p, v), v, v_b_at(ctx, v));
      total += static_cast<long>(v.degree) * d.po;
    }
  }
  Place inf = Place::infinity();
  LocalData d = analyze(chart_at(ctx, p, inf), inf, ctx.v_b_infinity);
  total += d.po;
  return total;
}

Rational local_contribution(const HeightContext& ctx, const BadPlaceData& v, const Section& p,
                            const Section* q) {
  LocalData dp = analyze(chart_at(ctx, p, v.place), v.place, v.v_b);
  if (!dp.through_sing) return Rational(0);
  if (q == nullptr) return contr_single(dp.type);
  LocalData dq = analyze(chart_at(ctx, *q, v.place), v.place, v.v_b);
  if (!dq.through_sing) return Rational(0);
  return dp.label == dq.label ? contr_single(dp.type) : contr_pair_distinct(dp.type);
}

namespace {

Rational height_diag(const HeightContext& ctx, const Section& p) {
  Rational h = Rational(2 * ctx.chi) + Rational(2 * intersection_with_zero(ctx, p));
  for (const auto& b : ctx.bad)
    h -= Rational(b.place.degree) * local_contribution(ctx, b, p);
  if (ctx.infinity_bad) {
    BadPlaceData inf{Place::infinity(), ctx.v_b_infinity, type_from_vb(ctx.v_b_infinity)};
    h -= local_contribution(ctx, inf, p);
  }
  return h;
}

}  // namespace

Rational height_pairing(const HeightContext& ctx, const Section& p, const Section& q) {
  if (p.is_zero() || q.is_zero()) return Rational(0);
  if (!(*p.curve() == *ctx.curve) || !(*q.curve() == *ctx.curve))
    throw std::invalid_argument("sections do not live on the context's curve");
  if (p == q) return height_diag(ctx, p);
  if (p == neg(q)) return -height_diag(ctx, p);

  // candidate intersection places: bad fibers, coincidence loci of x, common
  // poles, and the chart at infinity
  std::vector<Place> places;
  auto add_place = [&](const Place& v) {
    for (const auto& w : places)
      if (w == v) return;
    places.push_back(v);
  };
  for (const auto& b : ctx.bad) add_place(b.place);
  RatFunc xdiff = p.x() - q.x();
  if (!xdiff.is_zero() && xdiff.num().degree() > 0)
    for (const auto& [pi, mult] : factor(xdiff.num())) add_place(Place::at(pi));
  Poly dengcd = gcd(p.x().den(), q.x().den());
  if (dengcd.degree() > 0)
    for (const auto& [pi, mult] : factor(dengcd)) add_place(Place::at(pi));
  add_place(Place::infinity());

  long pq = 0;
  for (const auto& v : places)
    pq += static_cast<long>(v.degree) * pair_multiplicity(ctx, p, q, v, v_b_at(ctx, v));

  Rational contr(0);
  for (const auto& b : ctx.bad)
    contr += Rational(b.place.degree) * local_contribution(ctx, b, p, &q);
  if (ctx.infinity_bad) {
    BadPlaceData inf{Place::infinity(), ctx.v_b_infinity, type_from_vb(ctx.v_b_infinity)};
    contr += local_contribution(ctx, inf, p, &q);
  }

  return Rational(ctx.chi) + Rational(intersection_with_zero(ctx, p)) +
         Rational(intersection_with_zero(ctx, q)) - Rational(pq) - contr;
}

SectionLattice make_lattice(const CurvePtr<RatFunc>& curve, const Section& g0, const Section& g1) {
  SectionLattice lat;
  lat.curve = curve;
  lat.gens = {g0, g1};
  lat.ctx = make_height_context(curve);
  Rational h00 = height_pairing(lat.ctx, g0, g0);
  Rational h01 = height_pairing(lat.ctx, g0, g1);
  Rational h11 = height_pairing(lat.ctx, g1, g1);
  lat.gram = {h00, h01, h01, h11};
  return lat;
}

TorsionInfo is_torsion(const HeightContext& ctx, const Section& p) {
  if (p.is_zero()) return {true, 1};
  if (height_pairing(ctx, p, p) != 0) return {false, 0};
  Section acc = p;
  for (int n = 2; n <= 12; ++n) {
    acc = add(acc, p);
    if (acc.is_zero()) return {true, n};
  }
  throw std::logic_error("height-zero section has order above the torsion bound");
}

Mat2Z frobenius_matrix(const SectionLattice& lat, const BigInt& q) {
  const RatFunc& B = lat.curve->b();
  if (B.frobenius(q) != B || lat.curve->a().frobenius(q) != lat.curve->a())
    throw std::invalid_argument("curve is not stable under the q-power Frobenius");
  Mat2Q ginv = lat.gram.inverse();
  long long cols[2][2];
  for (int i = 0; i < 2; ++i) {
    const Section& g = lat.gens[static_cast<size_t>(i)];
    Section fg = Section::affine(lat.curve, g.x().frobenius(q), g.y().frobenius(q));
    if (!on_curve(fg)) throw std::logic_error("Frobenius image left the curve");
    Rational u0 = height_pairing(lat.ctx, fg, lat.gens[0]);
    Rational u1 = height_pairing(lat.ctx, fg, lat.gens[1]);
    Rational c0 = ginv.a * u0 + ginv.b * u1;
    Rational c1 = ginv.c * u0 + ginv.d * u1;
    if (!is_integer(c0) || !is_integer(c1))
      throw std::domain_error("Frobenius image is not an integral lattice combination");
    cols[i][0] = static_cast<long long>(num(c0));
    cols[i][1] = static_cast<long long>(num(c1));
    Section rebuilt = add(scalar_mul(cols[i][0], lat.gens[0]), scalar_mul(cols[i][1], lat.gens[1]));
    if (rebuilt != fg)
      throw std::domain_error("Frobenius image is not in the lattice (verification failed)");
  }
  return {cols[0][0], cols[1][0], cols[0][1], cols[1][1]};
}

int invariant_rank(const Mat2Z& m) {
  Mat2Z n{m.a - 1, m.b, m.c, m.d - 1};
  if (n.a == 0 && n.b == 0 && n.c == 0 && n.d == 0) return 2;
  if (n.det() != 0) return 0;
  return 1;
}

Mat2Z expected_frobenius_L1(int symbol_class) {
  switch (symbol_class) {
    case 0: return {-1, 0, 0, -1};
    case 1: return {1, -1, 1, 0};
    case 2: return {0, 1, -1, 1};
  }
  throw std::invalid_argument("symbol class must be 0, 1 or 2");
}

Mat2Z expected_frobenius_L2(int symbol_class) {
  switch (symbol_class) {
    case 0: return {1, 0, 0, 1};
    case 1: return {-1, 1, -1, 0};
    case 2: return {0, -1, 1, -1};
  }
  throw std::invalid_argument("symbol class must be 0, 1 or 2");
}

Mat2Q expected_gram_L1() {
  return {Rational(1, 3), Rational(-1, 6), Rational(-1, 6), Rational(1, 3)};
}
Mat2Q expected_gram_L2() {
  return {Rational(2, 3), Rational(-1, 3), Rational(-1, 3), Rational(2, 3)};
}

std::array<Section, 2> torsion_sections_on_model(const FamilyParams& par, unsigned n) {
  auto model = weierstrass_model(par, SurfaceId::k6n(n));
  const FieldPtr& f = par.base;
  FieldElement inv = (FieldElement::from_int(f, 2) * par.b * par.b).inverse();
  std::vector<FieldElement> coeffs(6 * n + 1, FieldElement::from_int(f, 0));
  coeffs[0] = -par.c * inv;
  coeffs[6 * n] = inv;
  Poly g(f, std::move(coeffs));  // (t^{6n} - c) / (2 b^2)
  Section t1 = Section::affine(model, RatFunc::zero(f), RatFunc(g));
  Section t2 = neg(t1);
  return {t1, t2};
}

MWReport mw_rank_k6(const FamilyParams& par) {
  MWReport rep;
  rep.relaxed = par.relaxed;
  rep.b_is_cube = par.b_is_cube;

  Section p0 = named_section(par, SectionFamily::P, 0);
  Section p1 = named_section(par, SectionFamily::P, 1);
  SectionLattice l1 = make_lattice(p0.curve(), p0, p1);
  Section q0 = named_section(par, SectionFamily::Q, 0);
  Section q1 = named_section(par, SectionFamily::Q, 1);
  SectionLattice l2 = make_lattice(q0.curve(), q0, q1);

  rep.gram_L1 = l1.gram;
  rep.gram_L2 = l2.gram;
  rep.symbol_4b = cubic_symbol(FieldElement::from_int(par.base, 4) * par.b);
  rep.symbol_b = cubic_symbol(par.b);
  rep.frob_L1 = {frobenius_matrix(l1, par.q()), rep.symbol_4b};
  rep.frob_L2 = {frobenius_matrix(l2, par.q()), rep.symbol_b};

  const int r1 = invariant_rank(rep.frob_L1.m);
  const int r2 = invariant_rank(rep.frob_L2.m);

  // E0, E4 and E5 have geometric rank 0: their F_q-ranks vanish outright
  for (int j : {0, 4, 5}) {
    auto cfg = fiber_configuration(weierstrass_model(par, SurfaceId::ej(j)),
                                   "E" + std::to_string(j));
    auto gm = geometric_mw(cfg);
    if (!gm) throw std::logic_error("unsupported fiber configuration for E" + std::to_string(j));
    if (gm->mw.rank != 0)
      throw std::logic_error("embedded data does not force rank 0 for E" + std::to_string(j));
  }
  // E3 is F_q(t)-isomorphic to E1, E4 to E0
  rep.ej_ranks = {0, r1, r2, r1, 0, 0};
  rep.rank = 0;
  for (int r : rep.ej_ranks) rep.rank += r;
  rep.torsion = "Z/3";
  return rep;
}

RelationReport verify_relations(const FamilyParams& par) {
  RelationReport rep;
  Section p0 = named_section(par, SectionFamily::P, 0);
  Section p1 = named_section(par, SectionFamily::P, 1);
  Section p2 = named_section(par, SectionFamily::P, 2);
  rep.p_relation = add(add(p0, p1), p2).is_zero();
  Section q0 = named_section(par, SectionFamily::Q, 0);
  Section q1 = named_section(par, SectionFamily::Q, 1);
  Section q2 = named_section(par, SectionFamily::Q, 2);
  rep.q_relation = add(add(q0, q1), q2).is_zero();
  return rep;
}

}  // namespace kuwata
