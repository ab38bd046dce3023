#include "kuwata/field.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kuwata {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 addmod(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  if (s >= p || s < a) s -= p;
  return s;
}
u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

u64 powmod_u64(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod_u64(u64 a, u64 p) {
  // p prime
  if (a % p == 0) throw std::domain_error("division by zero in F_p");
  return powmod_u64(a % p, p - 2, p);
}

// ---- dense polynomials over F_p with raw u64 coefficients ----------------
// Only used for modulus selection and irreducibility; the public Poly type
// (over FieldElement) lives in poly.cpp.

using UPoly = std::vector<u64>;  // little-endian, trimmed

void utrim(UPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}
int udeg(const UPoly& f) { return static_cast<int>(f.size()) - 1; }

UPoly umul(const UPoly& a, const UPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = addmod(r[i + j], mulmod(a[i], b[j], p), p);
  utrim(r);
  return r;
}

UPoly umod(UPoly a, const UPoly& m, u64 p) {
  utrim(a);
  const int dm = udeg(m);
  u64 inv_lead = invmod_u64(m.back(), p);
  while (udeg(a) >= dm) {
    u64 c = mulmod(a.back(), inv_lead, p);
    int shift = udeg(a) - dm;
    for (int i = 0; i <= dm; ++i)
      a[i + shift] = submod(a[i + shift], mulmod(c, m[i], p), p);
    utrim(a);
  }
  return a;
}

UPoly upowmod(UPoly base, BigInt e, const UPoly& m, u64 p) {
  UPoly r{1};
  base = umod(std::move(base), m, p);
  while (e > 0) {
    if (boost::multiprecision::bit_test(e, 0)) r = umod(umul(r, base, p), m, p);
    base = umod(umul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

UPoly ugcd(UPoly a, UPoly b, u64 p) {
  utrim(a);
  utrim(b);
  while (!b.empty()) {
    UPoly r = umod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    u64 il = invmod_u64(a.back(), p);
    for (auto& c : a) c = mulmod(c, il, p);
  }
  return a;
}

// Rabin test: f of degree d is irreducible iff z^(p^d) = z (mod f) and
// gcd(z^(p^(d/l)) - z, f) = 1 for every prime l | d.
bool uirreducible(const UPoly& f, u64 p) {
  const int d = udeg(f);
  if (d <= 0) return false;
  if (d == 1) return true;
  UPoly z{0, 1};
  std::vector<int> prime_divs;
  int dd = d;
  for (int q = 2; q * q <= dd; ++q)
    if (dd % q == 0) {
      prime_divs.push_back(q);
      while (dd % q == 0) dd /= q;
    }
  if (dd > 1) prime_divs.push_back(dd);
  for (int q : prime_divs) {
    BigInt e = pow_bigint(BigInt(p), static_cast<unsigned>(d / q));
    UPoly zp = upowmod(z, e, f, p);
    // zp - z
    UPoly diff = zp;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = submod(diff[1], 1, p);
    utrim(diff);
    if (udeg(ugcd(diff, f, p)) != 0) return false;
  }
  BigInt e = pow_bigint(BigInt(p), static_cast<unsigned>(d));
  UPoly zp = upowmod(z, e, f, p);
  UPoly diff = zp;
  if (diff.size() < 2) diff.resize(2, 0);
  diff[1] = submod(diff[1], 1, p);
  utrim(diff);
  return diff.empty();
}

std::vector<u64> canonical_modulus(u64 p, unsigned k) {
  // monic z^k + a_{k-1} z^{k-1} + ... + a_0, non-leading coefficients
  // enumerated as base-p digits of an increasing counter
  for (BigInt ctr = 0;; ++ctr) {
    UPoly f(k + 1, 0);
    f[k] = 1;
    BigInt c = ctr;
    for (unsigned i = 0; i < k; ++i) {
      f[i] = static_cast<u64>(c % p);
      c /= p;
    }
    if (c != 0) throw std::logic_error("no irreducible polynomial found");
    UPoly g = f;
    utrim(g);
    if (uirreducible(g, p)) return f;
  }
}

const FieldDesc& need(const FieldPtr& f) {
  if (!f) throw std::invalid_argument("null field descriptor");
  return *f;
}

void check_same_field(const FieldElement& a, const FieldElement& b) {
  if (!a.valid() || !b.valid()) throw std::invalid_argument("invalid field element");
  if (a.field().get() != b.field().get() && !a.field()->same(*b.field()))
    throw std::invalid_argument("field mismatch between operands");
}

}  // namespace

// ---- FieldDesc / construction --------------------------------------------

std::string FieldDesc::str() const {
  std::ostringstream os;
  os << "F_" << p;
  if (k > 1) os << "^" << k;
  return os.str();
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod_u64(a % n, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldPtr make_field(u64 p, unsigned k) {
  if (!is_prime_u64(p)) throw std::invalid_argument("characteristic is not prime");
  if (p <= 3) throw std::invalid_argument("characteristic must exceed 3");
  if (k < 1 || k > 36) throw std::invalid_argument("extension degree out of range");
  auto d = std::make_shared<FieldDesc>();
  d->p = p;
  d->k = k;
  if (k > 1) d->modulus = canonical_modulus(p, k);
  d->order = pow_bigint(BigInt(p), k);
  return d;
}

FieldPtr make_field_with_modulus(u64 p, const std::vector<u64>& modulus) {
  if (!is_prime_u64(p) || p <= 3) throw std::invalid_argument("bad characteristic");
  UPoly m = modulus;
  utrim(m);
  if (udeg(m) < 1 || m.back() != 1) throw std::invalid_argument("modulus must be monic of degree >= 1");
  if (!uirreducible(m, p)) throw std::invalid_argument("modulus is reducible");
  auto d = std::make_shared<FieldDesc>();
  d->p = p;
  d->k = static_cast<unsigned>(udeg(m));
  d->modulus = modulus;
  d->order = pow_bigint(BigInt(p), d->k);
  return d;
}

// ---- FieldElement ---------------------------------------------------------

FieldElement FieldElement::from_int(const FieldPtr& f, std::int64_t v) {
  const auto& d = need(f);
  FieldElement e;
  e.f_ = f;
  e.c_.assign(d.k, 0);
  std::int64_t m = v % static_cast<std::int64_t>(d.p);
  if (m < 0) m += static_cast<std::int64_t>(d.p);
  e.c_[0] = static_cast<u64>(m);
  return e;
}

FieldElement FieldElement::from_coeffs(const FieldPtr& f, std::vector<u64> c) {
  const auto& d = need(f);
  if (c.size() > d.k) throw std::invalid_argument("too many coefficients");
  c.resize(d.k, 0);
  for (auto& x : c) x %= d.p;
  FieldElement e;
  e.f_ = f;
  e.c_ = std::move(c);
  return e;
}

bool FieldElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](u64 x) { return x == 0; });
}

bool FieldElement::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](u64 x) { return x == 0; });
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same_field(*this, o);
  FieldElement r = *this;
  for (unsigned i = 0; i < c_.size(); ++i) r.c_[i] = addmod(c_[i], o.c_[i], f_->p);
  return r;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same_field(*this, o);
  FieldElement r = *this;
  for (unsigned i = 0; i < c_.size(); ++i) r.c_[i] = submod(c_[i], o.c_[i], f_->p);
  return r;
}

FieldElement FieldElement::operator-() const {
  if (!valid()) throw std::invalid_argument("invalid field element");
  FieldElement r = *this;
  for (auto& x : r.c_) x = x == 0 ? 0 : f_->p - x;
  return r;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same_field(*this, o);
  const u64 p = f_->p;
  const unsigned k = f_->k;
  FieldElement r;
  r.f_ = f_;
  if (k == 1) {
    r.c_ = {mulmod(c_[0], o.c_[0], p)};
    return r;
  }
  std::vector<u64> prod(2 * k - 1, 0);
  for (unsigned i = 0; i < k; ++i) {
    if (c_[i] == 0) continue;
    for (unsigned j = 0; j < k; ++j)
      prod[i + j] = addmod(prod[i + j], mulmod(c_[i], o.c_[j], p), p);
  }
  // reduce by the monic modulus
  for (int i = static_cast<int>(prod.size()) - 1; i >= static_cast<int>(k); --i) {
    u64 c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (unsigned j = 0; j < k; ++j)
      prod[i - k + j] = submod(prod[i - k + j], mulmod(c, f_->modulus[j], p), p);
  }
  prod.resize(k);
  r.c_ = std::move(prod);
  return r;
}

FieldElement FieldElement::inverse() const {
  if (!valid()) throw std::invalid_argument("invalid field element");
  if (is_zero()) throw std::domain_error("inverse of zero");
  const u64 p = f_->p;
  if (f_->k == 1) {
    FieldElement r = *this;
    r.c_[0] = invmod_u64(c_[0], p);
    return r;
  }
  // extended Euclid in F_p[z] between this and the modulus
  UPoly a(c_.begin(), c_.end());
  utrim(a);
  UPoly m = f_->modulus;
  utrim(m);
  UPoly r0 = m, r1 = a;
  UPoly s0 = {}, s1 = {1};
  while (!r1.empty()) {
    // r0 = q*r1 + r2
    UPoly q;
    UPoly rem = r0;
    u64 il = invmod_u64(r1.back(), p);
    q.assign(std::max<size_t>(rem.size(), r1.size()), 0);
    while (udeg(rem) >= udeg(r1)) {
      u64 c = mulmod(rem.back(), il, p);
      int shift = udeg(rem) - udeg(r1);
      q[shift] = addmod(q[shift], c, p);
      for (size_t i = 0; i < r1.size(); ++i)
        rem[i + shift] = submod(rem[i + shift], mulmod(c, r1[i], p), p);
      utrim(rem);
    }
    utrim(q);
    // s2 = s0 - q*s1
    UPoly qs = umul(q, s1, p);
    UPoly s2 = s0;
    if (s2.size() < qs.size()) s2.resize(qs.size(), 0);
    for (size_t i = 0; i < qs.size(); ++i) s2[i] = submod(s2[i], qs[i], p);
    utrim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 = gcd (a unit), s0 * a = r0 (mod m)
  if (udeg(r0) != 0) throw std::logic_error("modulus not irreducible");
  u64 il = invmod_u64(r0[0], p);
  s0.resize(f_->k, 0);
  for (auto& x : s0) x = mulmod(x, il, p);
  FieldElement r;
  r.f_ = f_;
  r.c_ = std::move(s0);
  return r;
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inverse(); }

bool FieldElement::operator==(const FieldElement& o) const {
  if (!valid() || !o.valid()) return valid() == o.valid();
  if (f_.get() != o.f_.get() && !f_->same(*o.f_)) return false;
  return c_ == o.c_;
}

FieldElement FieldElement::pow(BigInt e) const {
  if (!valid()) throw std::invalid_argument("invalid field element");
  if (e < 0) throw std::invalid_argument("negative exponent; use inverse()");
  FieldElement base = *this;
  FieldElement r = from_int(f_, 1);
  while (e > 0) {
    if (boost::multiprecision::bit_test(e, 0)) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

BigInt FieldElement::encode() const {
  BigInt v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * f_->p + *it;
  return v;
}

u64 FieldElement::rep() const {
  if (!valid() || f_->k != 1) throw std::logic_error("rep() requires a prime field");
  return c_[0];
}

std::string FieldElement::str() const {
  if (!valid()) return "<invalid>";
  if (f_->k == 1) return std::to_string(c_[0]);
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
    if (c_[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || c_[i] != 1) os << c_[i];
    if (i > 0) {
      if (c_[i] != 1) os << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

FieldElement element_at(const FieldPtr& f, const BigInt& index) {
  const auto& d = need(f);
  std::vector<u64> c(d.k, 0);
  BigInt v = index;
  for (unsigned i = 0; i < d.k; ++i) {
    c[i] = static_cast<u64>(v % d.p);
    v /= d.p;
  }
  if (v != 0) throw std::out_of_range("element index exceeds field size");
  return FieldElement::from_coeffs(f, std::move(c));
}

// ---- roots and characters -------------------------------------------------

namespace {

BigInt egcd_inverse(const BigInt& a, const BigInt& m) {
  // inverse of a mod m, gcd(a, m) = 1
  BigInt r0 = m, r1 = a % m, s0 = 0, s1 = 1;
  while (r1 != 0) {
    BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1;
    BigInt s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) throw std::logic_error("not invertible");
  s0 %= m;
  if (s0 < 0) s0 += m;
  return s0;
}

FieldElement canonical_nonresidue(const FieldPtr& f, unsigned ell) {
  const BigInt q1 = f->order - 1;
  const BigInt e = q1 / ell;
  for (BigInt idx = 1; idx < f->order; ++idx) {
    FieldElement g = element_at(f, idx);
    if (!g.pow(e).is_one()) return g;
  }
  throw std::logic_error("no degree-" + std::to_string(ell) + " nonresidue found");
}

// digit-by-digit discrete log in the cyclic ell-power subgroup:
// base has order ell^r, h in <base>; returns d with base^d = h.
BigInt dlog_prime_power(const FieldElement& h, const FieldElement& base, unsigned ell, unsigned r) {
  const FieldPtr& f = h.field();
  if (r == 0) {
    if (!h.is_one()) throw std::logic_error("dlog: element outside subgroup");
    return 0;
  }
  std::vector<FieldElement> zeta_pow;  // powers of the primitive ell-th root
  FieldElement zeta = base.pow(pow_bigint(BigInt(ell), r - 1));
  FieldElement z = FieldElement::from_int(f, 1);
  for (unsigned j = 0; j < ell; ++j) {
    zeta_pow.push_back(z);
    z = z * zeta;
  }
  BigInt d = 0;
  for (unsigned i = 0; i < r; ++i) {
    FieldElement c = (h * base.pow(d).inverse()).pow(pow_bigint(BigInt(ell), r - 1 - i));
    unsigned digit = ell;  // sentinel
    for (unsigned j = 0; j < ell; ++j)
      if (c == zeta_pow[j]) {
        digit = j;
        break;
      }
    if (digit == ell) throw std::logic_error("dlog: element outside subgroup");
    d += BigInt(digit) * pow_bigint(BigInt(ell), i);
  }
  return d;
}

// One ell-th root of a (Adleman-Manders-Miller), for prime ell | q-1 and
// a != 0 an ell-th power. Tonelli-Shanks is the ell = 2 case.
FieldElement amm_root(const FieldElement& a, unsigned ell) {
  const FieldPtr& f = a.field();
  const BigInt q1 = f->order - 1;
  BigInt m = q1;
  unsigned s = 0;
  while (m % ell == 0) {
    m /= ell;
    ++s;
  }
  FieldElement g = canonical_nonresidue(f, ell);
  FieldElement gamma = g.pow(m);  // order ell^s
  BigInt w = m == 1 ? BigInt(0) : egcd_inverse(BigInt(ell) % m, m);
  FieldElement x = a.pow(w);
  // error term x^ell / a lies in the subgroup of order ell^(s-1)
  FieldElement err = x.pow(ell) * a.inverse();
  BigInt d = dlog_prime_power(err.inverse(), gamma.pow(ell), ell, s - 1);
  return x * gamma.pow(d);
}

}  // namespace

int legendre(const FieldElement& a) {
  if (a.is_zero()) return 0;
  const BigInt e = (a.field()->order - 1) / 2;
  return a.pow(e).is_one() ? 1 : -1;
}

std::optional<FieldElement> sqrt(const FieldElement& a) {
  if (a.is_zero()) return a;
  if (legendre(a) != 1) return std::nullopt;
  FieldElement r = amm_root(a, 2);
  FieldElement r2 = -r;
  return r2 < r ? r2 : r;
}

std::vector<FieldElement> cube_roots(const FieldElement& a) {
  const FieldPtr& f = a.field();
  if (a.is_zero()) return {a};
  const BigInt q1 = f->order - 1;
  if (q1 % 3 != 0) {
    // cubing is a bijection
    return {a.pow(egcd_inverse(BigInt(3), q1))};
  }
  if (!a.pow(q1 / 3).is_one()) return {};
  FieldElement r = amm_root(a, 3);
  // primitive cube root of unity from the canonical cubic nonresidue
  FieldElement zeta = canonical_nonresidue(f, 3).pow(q1 / 3);
  std::vector<FieldElement> roots{r, r * zeta, r * zeta * zeta};
  std::sort(roots.begin(), roots.end());
  return roots;
}

SpecialConstants special_constants(const FieldPtr& f) {
  const auto& d = need(f);
  if ((d.order - 1) % 3 != 0)
    throw std::domain_error("field order is not 1 mod 3; no primitive cube root of unity");
  FieldElement m3 = FieldElement::from_int(f, -3);
  auto s = sqrt(m3);
  if (!s) throw std::logic_error("-3 must be a square when q = 1 (mod 3)");
  FieldElement two_inv = FieldElement::from_int(f, 2).inverse();
  FieldElement omega = (FieldElement::from_int(f, -1) + *s) * two_inv;
  return SpecialConstants{omega, *s};
}

int cubic_symbol(const FieldElement& a) {
  const FieldPtr& f = a.field();
  if (a.is_zero()) throw std::domain_error("cubic symbol of zero");
  const BigInt q1 = f->order - 1;
  if (q1 % 3 != 0) throw std::domain_error("cubic symbol needs q = 1 (mod 3)");
  FieldElement v = a.pow(q1 / 3);
  if (v.is_one()) return 0;
  FieldElement omega = special_constants(f).omega;
  if (v == omega) return 1;
  if (v == omega * omega) return 2;
  throw std::logic_error("cubic character value is not a cube root of unity");
}

// ---- embeddings ------------------------------------------------------------

namespace {

// polynomials with FieldElement coefficients, little-endian & trimmed;
// just enough machinery to split the base modulus inside the extension
using EPoly = std::vector<FieldElement>;

void etrim(EPoly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

EPoly emul(const EPoly& a, const EPoly& b, const FieldPtr& f) {
  if (a.empty() || b.empty()) return {};
  EPoly r(a.size() + b.size() - 1, FieldElement::from_int(f, 0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  etrim(r);
  return r;
}

void edivmod(const EPoly& a, const EPoly& b, EPoly& q, EPoly& r, const FieldPtr& f) {
  q.clear();
  r = a;
  etrim(r);
  if (b.empty()) throw std::domain_error("poly division by zero");
  FieldElement il = b.back().inverse();
  if (r.size() >= b.size()) q.assign(r.size() - b.size() + 1, FieldElement::from_int(f, 0));
  while (r.size() >= b.size() && !r.empty()) {
    FieldElement c = r.back() * il;
    size_t shift = r.size() - b.size();
    q[shift] = q[shift] + c;
    for (size_t i = 0; i < b.size(); ++i) r[i + shift] = r[i + shift] - c * b[i];
    etrim(r);
  }
}

EPoly emod(const EPoly& a, const EPoly& m, const FieldPtr& f) {
  EPoly q, r;
  edivmod(a, m, q, r, f);
  return r;
}

EPoly egcd_poly(EPoly a, EPoly b, const FieldPtr& f) {
  etrim(a);
  etrim(b);
  while (!b.empty()) {
    EPoly r = emod(a, b, f);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    FieldElement il = a.back().inverse();
    for (auto& c : a) c = c * il;
  }
  return a;
}

EPoly epowmod(EPoly base, BigInt e, const EPoly& m, const FieldPtr& f) {
  EPoly r{FieldElement::from_int(f, 1)};
  base = emod(base, m, f);
  while (e > 0) {
    if (boost::multiprecision::bit_test(e, 0)) r = emod(emul(r, base, f), m, f);
    base = emod(emul(base, base, f), m, f);
    e >>= 1;
  }
  return r;
}

// all roots in f of a squarefree polynomial that splits completely over f,
// by deterministic-sequence equal-degree splitting
void split_roots(const EPoly& poly, const FieldPtr& f, std::vector<FieldElement>& out, BigInt& ctr) {
  if (poly.size() <= 1) return;
  if (poly.size() == 2) {
    out.push_back(-(poly[0] / poly[1]));
    return;
  }
  const BigInt half = (f->order - 1) / 2;
  for (;; ++ctr) {
    FieldElement delta = element_at(f, ctr % f->order);
    EPoly shifted{delta, FieldElement::from_int(f, 1)};  // X + delta
    EPoly h = epowmod(shifted, half, poly, f);
    if (h.empty())
      h = {FieldElement::from_int(f, -1)};
    else
      h[0] = h[0] - FieldElement::from_int(f, 1);
    EPoly g = egcd_poly(h, poly, f);
    if (!g.empty() && g.size() > 1 && g.size() < poly.size()) {
      EPoly q, r;
      edivmod(poly, g, q, r, f);
      ++ctr;
      split_roots(g, f, out, ctr);
      split_roots(q, f, out, ctr);
      return;
    }
  }
}

}  // namespace

Embedding::Embedding(FieldPtr from, FieldPtr to, std::vector<FieldElement> gen_powers)
    : from_(std::move(from)), to_(std::move(to)), gen_powers_(std::move(gen_powers)) {}

FieldElement Embedding::operator()(const FieldElement& a) const {
  if (!a.valid()) throw std::invalid_argument("invalid field element");
  if (!a.field()->same(*from_)) throw std::invalid_argument("element not in embedding domain");
  FieldElement r = FieldElement::from_int(to_, 0);
  for (unsigned i = 0; i < from_->k; ++i) {
    if (a.coeffs()[i] == 0) continue;
    r = r + gen_powers_[i] * FieldElement::from_int(to_, static_cast<std::int64_t>(a.coeffs()[i]));
  }
  return r;
}

FieldPtr extension_field(const FieldPtr& base, unsigned rel_degree) {
  const auto& d = need(base);
  return make_field(d.p, d.k * rel_degree);
}

Embedding make_embedding(const FieldPtr& base, const FieldPtr& ext) {
  const auto& b = need(base);
  const auto& e = need(ext);
  if (b.p != e.p || e.k % b.k != 0)
    throw std::invalid_argument("no embedding: incompatible field degrees");
  std::vector<FieldElement> powers;
  if (b.k == 1) {
    powers.push_back(FieldElement::from_int(ext, 1));
    return Embedding(base, ext, std::move(powers));
  }
  // canonical root of the base modulus inside ext
  EPoly m;
  m.reserve(b.modulus.size());
  for (u64 c : b.modulus)
    m.push_back(FieldElement::from_int(ext, static_cast<std::int64_t>(c)));
  etrim(m);
  std::vector<FieldElement> roots;
  BigInt ctr = 1;
  split_roots(m, ext, roots, ctr);
  if (roots.size() != b.k) throw std::logic_error("base modulus did not split in extension");
  FieldElement root = *std::min_element(roots.begin(), roots.end());
  FieldElement acc = FieldElement::from_int(ext, 1);
  for (unsigned i = 0; i < b.k; ++i) {
    powers.push_back(acc);
    acc = acc * root;
  }
  return Embedding(base, ext, std::move(powers));
}

}  // namespace kuwata
