#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kuwata/rational.hpp"

namespace kuwata {

struct FieldDesc;
using FieldPtr = std::shared_ptr<const FieldDesc>;

/// Descriptor of a finite field F_{p^k}, represented as F_p[z]/(m(z)).
/// For k == 1 the modulus is empty and elements are plain residues mod p.
/// Descriptors are immutable and shared; elements hold a pointer to theirs.
struct FieldDesc {
  std::uint64_t p = 0;
  unsigned k = 1;
  std::vector<std::uint64_t> modulus;  // monic, size k+1; empty when k == 1
  BigInt order;                        // p^k

  bool same(const FieldDesc& o) const {
    return p == o.p && k == o.k && modulus == o.modulus;
  }
  std::string str() const;
};

/// Exact element of F_{p^k}: k residues mod p, little-endian in the power
/// basis of the modulus. Immutable value type, safe to share across threads.
class FieldElement {
 public:
  FieldElement() = default;  // invalid sentinel; any arithmetic asserts

  static FieldElement from_int(const FieldPtr& f, std::int64_t v);
  static FieldElement from_coeffs(const FieldPtr& f, std::vector<std::uint64_t> c);

  const FieldPtr& field() const { return f_; }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  bool valid() const { return f_ != nullptr; }
  bool is_zero() const;
  bool is_one() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  FieldElement inverse() const;  // throws on zero
  FieldElement pow(BigInt e) const;

  /// Integer encoding sum a_i p^i; defines the canonical total order used
  /// for every deterministic root / constant choice in the library.
  BigInt encode() const;
  bool operator<(const FieldElement& o) const { return encode() < o.encode(); }

  /// Residue representative for prime fields (k == 1 only).
  std::uint64_t rep() const;

  std::string str() const;

 private:
  FieldPtr f_;
  std::vector<std::uint64_t> c_;  // size k, each in [0, p)
};

bool is_prime_u64(std::uint64_t n);

/// F_{p^k} with the canonical modulus: the first irreducible monic degree-k
/// polynomial in the enumeration order of non-leading coefficient vectors.
/// Throws if p is not a prime > 3 or k is outside [1, 36].
FieldPtr make_field(std::uint64_t p, unsigned k);

/// Same field given an explicit monic modulus (checked irreducible).
FieldPtr make_field_with_modulus(std::uint64_t p, const std::vector<std::uint64_t>& modulus);

/// Element with encode() == index; enumerates the field in canonical order.
FieldElement element_at(const FieldPtr& f, const BigInt& index);

/// Canonical square root (minimum of the two under the element order) when
/// a is a square; nullopt otherwise. sqrt(0) = 0.
std::optional<FieldElement> sqrt(const FieldElement& a);

/// All cube roots of a in its own field, sorted canonically. Empty when a is
/// not a cube; size 3 when q = 1 (mod 3) and a != 0; size 1 otherwise.
std::vector<FieldElement> cube_roots(const FieldElement& a);

/// Quadratic character via a^((q-1)/2): -1, 0 or +1.
int legendre(const FieldElement& a);

/// e in {0,1,2} with a^((q-1)/3) = omega^e for the canonical omega of a's
/// field. Requires a != 0 and q = 1 (mod 3).
int cubic_symbol(const FieldElement& a);

/// omega = (-1 + sqrt(-3))/2 with the canonical sqrt(-3); omega^3 = 1.
struct SpecialConstants {
  FieldElement omega;
  FieldElement sqrt_minus3;
};

/// Throws unless q = 1 (mod 3).
SpecialConstants special_constants(const FieldPtr& f);

/// Coefficient embedding of a subfield into an extension over the same prime
/// field, sending the subfield generator to the canonical (minimal) root of
/// its modulus. Identity-like for prime subfields.
class Embedding {
 public:
  Embedding() = default;
  Embedding(FieldPtr from, FieldPtr to, std::vector<FieldElement> gen_powers);

  const FieldPtr& from() const { return from_; }
  const FieldPtr& to() const { return to_; }
  FieldElement operator()(const FieldElement& a) const;

 private:
  FieldPtr from_, to_;
  std::vector<FieldElement> gen_powers_;  // images of z_from^i, i < k_from
};

/// F_{q^rel} as a one-step extension of the prime field, plus nothing else;
/// combine with make_embedding to move base-field values up.
FieldPtr extension_field(const FieldPtr& base, unsigned rel_degree);

/// Requires base.k | ext.k and equal characteristic.
Embedding make_embedding(const FieldPtr& base, const FieldPtr& ext);

}  // namespace kuwata
