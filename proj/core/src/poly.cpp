#include "kuwata/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace kuwata {

namespace {
const FieldPtr& need_field(const FieldPtr& f) {
  if (!f) throw std::invalid_argument("polynomial without a field");
  return f;
}
}  // namespace

// ---- Poly ------------------------------------------------------------------

Poly::Poly(FieldPtr f, std::vector<FieldElement> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
  need_field(f_);
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const FieldElement& a) {
  Poly p(a.field());
  if (!a.is_zero()) p.c_ = {a};
  return p;
}

Poly Poly::from_ints(const FieldPtr& f, const std::vector<std::int64_t>& coeffs) {
  std::vector<FieldElement> c;
  c.reserve(coeffs.size());
  for (auto v : coeffs) c.push_back(FieldElement::from_int(f, v));
  return Poly(f, std::move(c));
}

Poly Poly::t(const FieldPtr& f) { return from_ints(f, {0, 1}); }

FieldElement Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return FieldElement::from_int(f_, 0);
  return c_[i];
}

FieldElement Poly::lead() const {
  if (c_.empty()) return FieldElement::from_int(f_, 0);
  return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
  Poly r(f_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), FieldElement::from_int(f_, 0));
  for (size_t i = 0; i < r.c_.size(); ++i) {
    FieldElement a = i < c_.size() ? c_[i] : FieldElement::from_int(f_, 0);
    FieldElement b = i < o.c_.size() ? o.c_[i] : FieldElement::from_int(f_, 0);
    r.c_[i] = a + b;
  }
  r.trim();
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly(f_);
  Poly r(f_);
  r.c_.assign(c_.size() + o.c_.size() - 1, FieldElement::from_int(f_, 0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
  }
  r.trim();
  return r;
}

Poly Poly::operator*(const FieldElement& s) const {
  if (s.is_zero()) return Poly(f_);
  Poly r = *this;
  for (auto& c : r.c_) c = c * s;
  r.trim();
  return r;
}

bool Poly::operator==(const Poly& o) const { return c_ == o.c_; }

bool Poly::operator<(const Poly& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  for (int i = degree(); i >= 0; --i) {
    BigInt a = coeff(i).encode(), b = o.coeff(i).encode();
    if (a != b) return a < b;
  }
  return false;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  Poly q(f_), r = *this;
  if (r.degree() >= d.degree())
    q.c_.assign(r.degree() - d.degree() + 1, FieldElement::from_int(f_, 0));
  FieldElement il = d.lead().inverse();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    FieldElement c = r.lead() * il;
    int shift = r.degree() - d.degree();
    q.c_[shift] = q.c_[shift] + c;
    for (int i = 0; i <= d.degree(); ++i) r.c_[i + shift] = r.c_[i + shift] - c * d.c_[i];
    r.trim();
  }
  q.trim();
  return {q, r};
}

Poly Poly::operator/(const Poly& d) const { return divrem(d).first; }
Poly Poly::operator%(const Poly& d) const { return divrem(d).second; }

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * lead().inverse();
}

Poly Poly::pow(unsigned e) const {
  Poly r = Poly::from_ints(f_, {1});
  Poly b = *this;
  while (e) {
    if (e & 1u) r = r * b;
    b = b * b;
    e >>= 1u;
  }
  return r;
}

Poly Poly::derivative() const {
  Poly r(f_);
  if (degree() < 1) return r;
  r.c_.reserve(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i)
    r.c_.push_back(c_[i] * FieldElement::from_int(f_, static_cast<std::int64_t>(i)));
  r.trim();
  return r;
}

FieldElement Poly::eval(const FieldElement& a) const {
  FieldElement r = FieldElement::from_int(f_, 0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * a + *it;
  return r;
}

Poly Poly::compose_power(unsigned m) const {
  if (m == 0) throw std::invalid_argument("compose_power needs m >= 1");
  Poly r(f_);
  if (is_zero()) return r;
  r.c_.assign(static_cast<size_t>(degree()) * m + 1, FieldElement::from_int(f_, 0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i * m] = c_[i];
  r.trim();
  return r;
}

Poly Poly::reversed() const {
  Poly r = *this;
  std::reverse(r.c_.begin(), r.c_.end());
  r.trim();
  return r;
}

Poly Poly::map_coeffs(const Embedding& e) const {
  Poly r(e.to());
  r.c_.reserve(c_.size());
  for (const auto& c : c_) r.c_.push_back(e(c));
  r.trim();
  return r;
}

Poly Poly::frobenius(const BigInt& q) const {
  Poly r = *this;
  for (auto& c : r.c_) c = c.pow(q);
  r.trim();
  return r;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const bool ext = f_ && f_->k > 1;
  for (int i = degree(); i >= 0; --i) {
    const FieldElement& a = c_[i];
    if (a.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const bool show_coeff = i == 0 || !a.is_one();
    if (show_coeff) {
      if (ext) os << "(" << a.str() << ")";
      else os << a.str();
    }
    if (i > 0) {
      if (show_coeff) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = y;
    y = r;
  }
  return x.monic();
}

void extended_gcd(const Poly& a, const Poly& b, Poly& g, Poly& u, Poly& v) {
  const FieldPtr& f = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::from_ints(f, {1}), s1 = Poly::zero(f);
  Poly t0 = Poly::zero(f), t1 = Poly::from_ints(f, {1});
  while (!r1.is_zero()) {
    auto [q, r2] = r0.divrem(r1);
    Poly s2 = s0 - q * s1;
    Poly t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
    t0 = t1; t1 = t2;
  }
  if (r0.is_zero()) {
    g = r0; u = s0; v = t0;
    return;
  }
  FieldElement il = r0.lead().inverse();
  g = r0 * il;
  u = s0 * il;
  v = t0 * il;
}

// ---- RatFunc ---------------------------------------------------------------

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::from_ints(num_.field(), {1});
    return;
  }
  Poly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  FieldElement il = den_.lead().inverse();
  num_ = num_ * il;
  den_ = den_ * il;
}

RatFunc::RatFunc(Poly num) : num_(std::move(num)) { den_ = Poly::from_ints(num_.field(), {1}); }

FieldElement RatFunc::constant_value() const {
  if (!is_constant()) throw std::logic_error("not a constant");
  return num_.coeff(0);
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
RatFunc RatFunc::operator-(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
RatFunc RatFunc::operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }
RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero rational function");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}
RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}
RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc r = RatFunc(Poly::from_ints(field(), {1}));
  RatFunc b = *this;
  unsigned u = static_cast<unsigned>(e);
  while (u) {
    if (u & 1u) r = r * b;
    b = b * b;
    u >>= 1u;
  }
  return r;
}

std::optional<FieldElement> RatFunc::eval(const FieldElement& a) const {
  FieldElement d = den_.eval(a);
  if (d.is_zero()) return std::nullopt;
  return num_.eval(a) / d;
}

RatFunc RatFunc::compose_power(unsigned m) const {
  return RatFunc(num_.compose_power(m), den_.compose_power(m));
}

RatFunc RatFunc::map_coeffs(const Embedding& e) const {
  return RatFunc(num_.map_coeffs(e), den_.map_coeffs(e));
}

RatFunc RatFunc::frobenius(const BigInt& q) const {
  return RatFunc(num_.frobenius(q), den_.frobenius(q));
}

std::string RatFunc::str(const std::string& var) const {
  if (is_polynomial()) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

// ---- places and valuations -------------------------------------------------

Place Place::at(Poly pi) {
  if (pi.degree() < 1) throw std::invalid_argument("finite place needs degree >= 1");
  Place v;
  v.degree = pi.degree();
  v.finite = pi.monic();
  return v;
}

std::string Place::str() const {
  if (is_infinity()) return "infinity";
  return finite->str();
}

bool Place::operator==(const Place& o) const {
  if (is_infinity() != o.is_infinity()) return false;
  if (is_infinity()) return true;
  return *finite == *o.finite;
}

long poly_valuation(const Poly& f, const Poly& pi) {
  if (f.is_zero()) throw std::domain_error("valuation of zero polynomial");
  long v = 0;
  Poly g = f;
  for (;;) {
    auto [q, r] = g.divrem(pi);
    if (!r.is_zero()) return v;
    ++v;
    g = q;
  }
}

std::optional<long> valuation(const RatFunc& f, const Place& v) {
  if (f.is_zero()) return std::nullopt;  // +infinity
  if (v.is_infinity()) return f.den().degree() - f.num().degree();
  return poly_valuation(f.num(), *v.finite) - poly_valuation(f.den(), *v.finite);
}

// ---- factorization ---------------------------------------------------------

namespace {

Poly poly_powmod(const Poly& base, BigInt e, const Poly& m) {
  Poly r = Poly::from_ints(base.field(), {1});
  Poly b = base % m;
  while (e > 0) {
    if (boost::multiprecision::bit_test(e, 0)) r = (r * b) % m;
    b = (b * b) % m;
    e >>= 1;
  }
  return r;
}

// deterministic pseudo-random polynomial sequence for equal-degree splitting
Poly edf_candidate(const FieldPtr& f, int max_deg, std::uint64_t& state) {
  std::vector<FieldElement> c;
  c.reserve(max_deg + 1);
  for (int i = 0; i <= max_deg; ++i) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    c.push_back(element_at(f, BigInt(state >> 11) % f->order));
  }
  return Poly(f, std::move(c));
}

void equal_degree_split(const Poly& f, int d, std::vector<Poly>& out, std::uint64_t& state) {
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  const BigInt q = f.field()->order;
  const BigInt e = (pow_bigint(q, static_cast<unsigned>(d)) - 1) / 2;
  for (;;) {
    Poly h = edf_candidate(f.field(), f.degree() - 1, state);
    if (h.is_zero()) continue;
    Poly g = gcd(h, f);
    if (g.degree() == 0) {
      Poly hp = poly_powmod(h, e, f) - Poly::from_ints(f.field(), {1});
      g = gcd(hp, f);
    }
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, out, state);
      equal_degree_split(f / g, d, out, state);
      return;
    }
  }
}

// p-th root of a polynomial whose derivative vanishes: f = g(t^p) -> g
Poly pth_root(const Poly& f) {
  const FieldPtr& fd = f.field();
  const auto p = static_cast<unsigned>(fd->p);
  // coefficient p-th root is a -> a^(p^(k-1))
  BigInt e = pow_bigint(BigInt(fd->p), fd->k - 1);
  std::vector<FieldElement> c;
  for (int i = 0; i <= f.degree(); i += p) c.push_back(f.coeff(i).pow(e));
  return Poly(fd, std::move(c));
}

void factor_squarefree_monic(const Poly& f, std::vector<Poly>& out, std::uint64_t& state) {
  // distinct-degree then equal-degree
  const BigInt q = f.field()->order;
  Poly rem = f;
  Poly x = Poly::t(f.field());
  Poly xq = x;
  for (int d = 1; rem.degree() > 0 && 2 * d <= rem.degree() + d; ++d) {
    if (2 * d > rem.degree()) {
      out.push_back(rem.monic());
      return;
    }
    xq = poly_powmod(xq, q, rem);
    Poly g = gcd(xq - x, rem);
    if (g.degree() > 0) {
      equal_degree_split(g, d, out, state);
      rem = rem / g;
      xq = xq % rem;
    }
  }
  if (rem.degree() > 0) out.push_back(rem.monic());
}

}  // namespace

std::vector<std::pair<Poly, int>> factor(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("factoring the zero polynomial");
  std::map<std::vector<std::vector<std::uint64_t>>, std::pair<Poly, int>> acc;
  auto key_of = [](const Poly& p) {
    std::vector<std::vector<std::uint64_t>> key;
    for (const auto& c : p.coeffs()) key.push_back(c.coeffs());
    return key;
  };
  // squarefree decomposition by repeated gcd with the derivative
  struct Item {
    Poly poly;
    int mult;
  };
  std::vector<Item> work{{f.monic(), 1}};
  std::vector<Item> squarefree;
  while (!work.empty()) {
    Item it = work.back();
    work.pop_back();
    if (it.poly.degree() < 1) continue;
    Poly d = it.poly.derivative();
    if (d.is_zero()) {
      work.push_back({pth_root(it.poly), it.mult * static_cast<int>(it.poly.field()->p)});
      continue;
    }
    Poly g = gcd(it.poly, d);
    if (g.degree() == 0) {
      squarefree.push_back(it);
      continue;
    }
    squarefree.push_back({it.poly / g, it.mult});
    work.push_back({g, it.mult});
  }
  std::uint64_t state = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(f.degree());
  for (const auto& it : squarefree) {
    std::vector<Poly> irr;
    factor_squarefree_monic(it.poly, irr, state);
    for (const auto& p : irr) {
      auto k = key_of(p);
      auto found = acc.find(k);
      if (found == acc.end())
        acc.emplace(std::move(k), std::make_pair(p, it.mult));
      else
        found->second.second += it.mult;
    }
  }
  // recombine duplicates coming from the squarefree tower
  std::vector<std::pair<Poly, int>> result;
  result.reserve(acc.size());
  for (auto& [k, pv] : acc) result.push_back(pv);
  std::sort(result.begin(), result.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  // recompute true multiplicities (duplicates across squarefree parts add up
  // only when the decomposition repeated a factor; verify by valuation)
  for (auto& [p, m] : result) m = static_cast<int>(poly_valuation(f, p));
  return result;
}

Poly residue_inverse(const Poly& a, const Poly& pi) {
  Poly g, u, v;
  extended_gcd(a % pi, pi, g, u, v);
  if (g.degree() != 0) throw std::domain_error("residue not invertible");
  return u % pi;
}

Poly residue_of(const RatFunc& f, const Poly& pi) {
  if (f.is_zero()) return Poly::zero(f.field());
  // the fraction is reduced, so a denominator divisible by pi is a pole
  if (poly_valuation(f.den(), pi) != 0) throw std::domain_error("residue at a pole");
  return ((f.num() % pi) * residue_inverse(f.den(), pi)) % pi;
}

}  // namespace kuwata
