#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace kuwata {

// All heights and lattice arithmetic are exact; no floating point exists
// anywhere in this library.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

/// "a/b", or just "a" when the denominator is 1.
std::string rational_str(const Rational& r);

/// True iff r is an integer.
inline bool is_integer(const Rational& r) { return den(r) == 1; }

BigInt pow_bigint(const BigInt& base, unsigned exp);

/// floor(log2(n)) for n >= 1.
unsigned floor_log2(const BigInt& n);

}  // namespace kuwata
