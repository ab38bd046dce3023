#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kuwata/field.hpp"

namespace kuwata {

/// Univariate polynomial over a fixed finite field, little-endian
/// coefficients with no trailing zeros (the zero polynomial is empty).
class Poly {
 public:
  Poly() = default;
  explicit Poly(FieldPtr f) : f_(std::move(f)) {}
  Poly(FieldPtr f, std::vector<FieldElement> coeffs);

  static Poly zero(const FieldPtr& f) { return Poly(f); }
  static Poly constant(const FieldElement& a);
  static Poly from_ints(const FieldPtr& f, const std::vector<std::int64_t>& coeffs);
  /// The variable t.
  static Poly t(const FieldPtr& f);

  const FieldPtr& field() const { return f_; }
  const std::vector<FieldElement>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  FieldElement coeff(int i) const;
  FieldElement lead() const;
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const FieldElement& s) const;
  Poly operator-() const;
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }
  /// Total order: by degree, then coefficient encodings from the top down.
  bool operator<(const Poly& o) const;

  std::pair<Poly, Poly> divrem(const Poly& d) const;
  Poly operator/(const Poly& d) const;  // exact or truncating division
  Poly operator%(const Poly& d) const;
  Poly monic() const;
  Poly pow(unsigned e) const;
  Poly derivative() const;

  FieldElement eval(const FieldElement& a) const;
  /// f(t^m).
  Poly compose_power(unsigned m) const;
  /// t^deg * f(1/t): coefficient reversal.
  Poly reversed() const;
  /// Coefficientwise field map (embedding into an extension).
  Poly map_coeffs(const Embedding& e) const;
  /// Coefficientwise a -> a^q.
  Poly frobenius(const BigInt& q) const;

  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  FieldPtr f_;
  std::vector<FieldElement> c_;
};

Poly gcd(const Poly& a, const Poly& b);  // monic gcd
/// g, u, v with g = gcd monic and u*a + v*b = g.
void extended_gcd(const Poly& a, const Poly& b, Poly& g, Poly& u, Poly& v);

/// Reduced fraction of polynomials; den is monic and coprime to num.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(Poly num, Poly den);
  explicit RatFunc(Poly num);

  static RatFunc zero(const FieldPtr& f) { return RatFunc(Poly::zero(f)); }
  static RatFunc constant(const FieldElement& a) { return RatFunc(Poly::constant(a)); }
  static RatFunc t(const FieldPtr& f) { return RatFunc(Poly::t(f)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const FieldPtr& field() const { return num_.field(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  /// Constant value (requires is_constant()).
  FieldElement constant_value() const;
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc inverse() const;
  RatFunc pow(int e) const;
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  /// Evaluation at t = a; nullopt at a pole.
  std::optional<FieldElement> eval(const FieldElement& a) const;
  RatFunc compose_power(unsigned m) const;
  RatFunc map_coeffs(const Embedding& e) const;
  RatFunc frobenius(const BigInt& q) const;

  std::string str(const std::string& var = "t") const;

 private:
  Poly num_, den_;
};

/// A closed point of the projective t-line: a monic irreducible polynomial
/// over the base field, or the point at infinity (degree 1).
struct Place {
  std::optional<Poly> finite;  // monic irreducible
  int degree = 1;

  bool is_infinity() const { return !finite.has_value(); }
  static Place infinity() { return Place{}; }
  static Place at(Poly pi);
  std::string str() const;
  bool operator==(const Place& o) const;
};

/// Order of vanishing at a place; nullopt encodes +infinity (f = 0).
/// At the infinite place this is deg(den) - deg(num).
std::optional<long> valuation(const RatFunc& f, const Place& v);
/// Multiplicity of pi in f (f nonzero).
long poly_valuation(const Poly& f, const Poly& pi);

/// Monic irreducible factors with multiplicities, sorted canonically.
/// Deterministic: equal-degree splitting uses a counter-derived sequence.
std::vector<std::pair<Poly, int>> factor(const Poly& f);

/// Inverse of a modulo pi (gcd(a mod pi, pi) = 1).
Poly residue_inverse(const Poly& a, const Poly& pi);
/// f mod pi as a polynomial of degree < deg(pi); requires v_pi(f) >= 0.
Poly residue_of(const RatFunc& f, const Poly& pi);

}  // namespace kuwata
