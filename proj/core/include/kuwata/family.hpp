#pragma once

#include <array>
#include <optional>
#include <random>
#include <string>

#include "kuwata/elliptic.hpp"

namespace kuwata {

enum class ParamViolation {
  QMod3,     // q != 1 (mod 3)
  BZero,
  BIsCube,   // strict mode only
  CZero,
  CNotCube,
  CIsSquare,
  NBad,      // n < 1 or p | n for K_{6n}
};

std::string violation_str(ParamViolation v);

class ParamError : public std::domain_error {
 public:
  explicit ParamError(ParamViolation v);
  ParamViolation violation() const { return v_; }

 private:
  ParamViolation v_;
};

/// Validated parameter set (q, b, c) plus every canonical root and embedding
/// the constructions need. All section coordinates live in the single
/// degree-6 extension F_{q^6}; the paper's coordinates need at most
/// F_q(omega, sqrt(c), cbrt(4b), cbrt(b)) inside it.
struct FamilyParams {
  FieldPtr base;             // F_q, q = 1 (mod 3)
  FieldElement b, c;         // c a non-square cube; b a non-cube unless relaxed
  SpecialConstants consts;   // omega and sqrt(-3), canonical branch
  FieldElement cbrt_c;       // canonical cube root of c, in F_q
  bool relaxed = false;
  bool b_is_cube = false;    // set in relaxed mode when b is a cube

  FieldPtr ext;              // F_{q^6}
  Embedding emb;             // base -> ext
  FieldElement sqrt_c;       // canonical, in ext
  FieldElement cbrt_b;       // canonical, in ext
  FieldElement cbrt_4b;      // canonical, in ext

  const BigInt& q() const { return base->order; }
};

/// Checks the hypotheses and fills in canonical roots. In strict mode a cube
/// b is rejected; in relaxed mode it is accepted and flagged (the rank-2
/// scenario). Each violated hypothesis throws its own ParamError.
FamilyParams validate_params(const FieldPtr& base, const FieldElement& b, const FieldElement& c,
                             bool relaxed = false);
FamilyParams validate_params(const FieldPtr& base, std::uint64_t b, std::uint64_t c,
                             bool relaxed = false);

struct SurfaceId {
  enum class Tag { K2, K6n, E, Ej };
  Tag tag = Tag::E;
  unsigned n = 1;  // for K6n
  int j = 0;       // for Ej, reduced mod 6

  static SurfaceId k2() { return {Tag::K2, 1, 0}; }
  static SurfaceId k6n(unsigned n) { return {Tag::K6n, n, 0}; }
  static SurfaceId e() { return {Tag::E, 1, 0}; }
  static SurfaceId ej(int j) { return {Tag::Ej, 1, ((j % 6) + 6) % 6}; }
  std::string str() const;
};

/// Globally minimal Weierstrass model over F_q(t):
///   E / K6n model:  y^2 = x^3 + ((t^{6n} - c)/(2 b^2))^2
///   E_j:            y^2 = x^3 + t^j ((t - c)/(2 b^2))^2
/// Requires id.tag in {E, K6n, Ej}.
CurvePtr<RatFunc> weierstrass_model(const FamilyParams& par, const SurfaceId& id);

/// The same curve with coefficients embedded into F_{q^6}(t), where the
/// named sections live.
CurvePtr<RatFunc> weierstrass_model_ext(const FamilyParams& par, const SurfaceId& id);

/// Affine equation data (x1^3 - b) t^m = c (x0^3 - b) with m = 2 or 6n.
struct KummerSurface {
  unsigned t_exponent;
  bool is_k2;
  unsigned n;
  FieldElement b, c;  // base field
};
KummerSurface kummer_surface(const FamilyParams& par, const SurfaceId& id);

/// Exact identity check of the defining equation for a candidate section
/// (coefficients in the base field or any extension carrying b, c).
bool kummer_equation_holds(unsigned t_exponent, const FieldElement& b, const FieldElement& c,
                           const RatFunc& x0, const RatFunc& x1);
bool kummer_equation_holds(const KummerSurface& s, const RatFunc& x0, const RatFunc& x1);

/// A section of K2/K6n: affine pair (x0(t), x1(t)), or one of the
/// distinguished sections on the line at infinity (t^{2n} : X1 : 0).
struct KummerSection {
  bool at_infinity = false;
  RatFunc x0, x1;       // affine case
  RatFunc inf_X0;       // t^{2n}
  FieldElement inf_X1;  // omega^j * cbrt(c), j in {0,1,2}
  std::string str() const;
};

/// (t^{2n} : cbrt(c) : 0).
KummerSection kummer_zero_section(const FamilyParams& par, const SurfaceId& id);
/// (t^2 : omega^j cbrt(c) : 0) on K6 for j = 1, 2.
std::array<KummerSection, 2> kummer_torsion_sections(const FamilyParams& par);

/// t -> t^{3n} pullback taking a K2 section to a K_{6n} section.
KummerSection base_change(const KummerSection& s, unsigned n);

// ---- the F_q(t)-isomorphism phi : K_{6n} -> E and its inverse --------------
//
// On affine points
//   x = (t^{6n} - c) / (b (x0 cbrt(c) - t^{2n} x1))
//   y = sqrt(-3) (x0 cbrt(c) + t^{2n} x1) / (-2b) * x
// and the inverse
//   x0 = (2 b^2 y - sqrt(-3)(t^{6n} - c)) / (-2 sqrt(-3) b cbrt(c) x)
//   x1 = (2 b^2 y + sqrt(-3)(t^{6n} - c)) / (-2 sqrt(-3) b t^{2n} x).
// The sections at infinity map by the projective extension of these
// formulas: the zero section to the zero point, and the two order-3
// sections to (0, +-(t^{6n} - c)/(2 b^2)).

struct PhiPoint {
  bool exceptional = false;  // the formula's denominator vanished
  PointOverField point;
};

/// Pointwise phi over F_{q^6}; t with t^{6n} = c (or a vanishing formula
/// denominator) yields the exceptional-locus result, never a crash.
PhiPoint phi_point(const FamilyParams& par, unsigned n, const FieldElement& x0,
                   const FieldElement& x1, const FieldElement& t);

struct PhiInvPoint {
  bool exceptional = false;  // x = 0 or t = 0
  FieldElement x0, x1;
};

PhiInvPoint phi_inv_point(const FamilyParams& par, unsigned n, const PointOverField& p,
                          const FieldElement& t);

/// Sectionwise phi: coordinates are rational functions over F_{q^6}.
Section phi_section(const FamilyParams& par, unsigned n, const KummerSection& s);
KummerSection phi_inv_section(const FamilyParams& par, unsigned n, const Section& s);

/// The explicit sections generating the rank-2 lattices:
///   P_k = ( omega^k (t - c) / (-b cbrt(4b)),  sqrt(c)(t - c) / (2 b^2) )  on E_1
///   Q_k = ( omega^k cbrt(c) t / (b cbrt(b)),  (t^2 + c t) / (2 b^2) )    on E_2
/// with coordinates in F_{q^6}(t); k is taken mod 3.
enum class SectionFamily { P, Q };
Section named_section(const FamilyParams& par, SectionFamily fam, int k);

/// Random affine F_{q^6}-point of K_{6n} (t avoiding 0 and t^{6n} = c).
struct KummerPointExt {
  FieldElement x0, x1, t;
};
KummerPointExt sample_kummer_point(const FamilyParams& par, unsigned n, std::mt19937_64& rng);

// ---- global minimality ------------------------------------------------------

struct PlaceMinimality {
  Place place;
  long valuation;
  bool ok;  // valuation < 6
};

/// For a model y^2 = x^3 + B(t): B must be a polynomial, every finite place
/// must satisfy v(B) < 6, and the chart s = 1/t with the twist
/// (x, y) -> (s^{2 chi} x, s^{3 chi} y), chi = ceil(deg B / 6), must satisfy
/// the same bound at s = 0.
struct MinimalityReport {
  bool minimal = false;
  bool integral = false;  // B has unit denominator
  std::vector<PlaceMinimality> finite;
  int chi = 0;
  long v_infinity = 0;
};

MinimalityReport check_global_minimality(const CurvePtr<RatFunc>& e);

/// Index pairing of the chart at infinity: E_j there carries the fiber data
/// of E_{4-j} at t = 0.
inline int infinity_partner(int j) { return ((4 - j) % 6 + 6) % 6; }

}  // namespace kuwata
