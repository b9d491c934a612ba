#pragma once

// Arbitrary-precision integers and rationals (GMP through
// Boost.Multiprecision) plus the handful of elementary helpers used across
// the library.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fsieve {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer ipow(const Integer& base, unsigned exponent);
Rational rpow(const Rational& base, unsigned exponent);

/// Least non-negative residue of a modulo m (m > 0).
Integer mod(const Integer& a, const Integer& m);
std::int64_t mod(std::int64_t a, std::int64_t m);
std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m);
std::int64_t powmod(std::int64_t base, std::uint64_t exponent, std::int64_t m);
std::int64_t invmod(std::int64_t a, std::int64_t m);

/// Residue of a rational number modulo a prime; nullopt when the denominator
/// is divisible by p.
std::optional<std::int64_t> mod_rational(const Rational& r, std::int64_t p);

/// Exponent of the prime p in n; n must be nonzero.
unsigned valuation(Integer n, const Integer& p);
int valuation(const Rational& r, const Integer& p);

bool is_square(const Integer& n, Integer* root = nullptr);
std::optional<Rational> rational_sqrt(const Rational& r);
Integer isqrt(const Integer& n);

bool is_squarefree(const Integer& n);
/// Square-free part of n keeping its sign: n = kernel * square.
Integer squarefree_kernel(const Integer& n);

bool is_prime(std::int64_t n);
std::vector<std::int64_t> primes_up_to(std::int64_t bound);
std::int64_t next_prime(std::int64_t n);

std::int64_t to_int64(const Integer& n);
bool fits_int64(const Integer& n);

Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);
std::string to_string(const Rational& r);
std::string to_string(const Integer& n);

}  // namespace fsieve
