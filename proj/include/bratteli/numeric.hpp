#pragma once

// Exact integer and rational arithmetic used throughout the library.
// Everything is backed by GMP; no floating point is used for counts or ratios.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace bratteli {

using BigInt = mpz_class;
using BigRational = mpq_class;

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

/// (2m-1)!! for an odd argument, with the convention (-1)!! = 1.
/// Even arguments give the even double factorial n(n-2)...2.
BigInt double_factorial(long n);

/// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument on malformed
/// input or a zero denominator. The result is canonicalized.
BigRational parse_rational(std::string_view text);

std::string to_string(const BigInt& value);
std::string to_string(const BigRational& value);

/// Exact comparison a/b >= c/d for positive denominators, by cross-multiplication.
inline bool ratio_geq(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d) {
    return a * d >= c * b;
}

BigRational pow(const BigRational& base, unsigned exponent);

/// num/den in lowest terms. gmpxx leaves a two-argument mpq_class
/// uncanonicalized, and GMP arithmetic assumes canonical operands.
inline BigRational make_ratio(const BigInt& num, const BigInt& den) {
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace bratteli
