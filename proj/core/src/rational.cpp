#include "kuwata/rational.hpp"

namespace kuwata {

std::string rational_str(const Rational& r) {
  if (is_integer(r)) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

BigInt pow_bigint(const BigInt& base, unsigned exp) {
  BigInt r = 1, b = base;
  while (exp) {
    if (exp & 1u) r *= b;
    b *= b;
    exp >>= 1u;
  }
  return r;
}

unsigned floor_log2(const BigInt& n) {
  if (n < 1) throw std::domain_error("floor_log2 needs n >= 1");
  return boost::multiprecision::msb(n);
}

}  // namespace kuwata
