#pragma once

// Arithmetic in K = Q(sqrt(-d)) and reduction modulo its primes.

#include "fsieve/arith/finite_field.hpp"
#include "fsieve/arith/integer.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fsieve {

/// x + y*sqrt(-d) with exact rational coordinates.
struct QuadElem {
  Rational x;
  Rational y;
  std::int64_t d = 1;

  QuadElem() = default;
  QuadElem(Rational x_, Rational y_, std::int64_t d_) : x(std::move(x_)), y(std::move(y_)), d(d_) {}

  static QuadElem rational(const Rational& r, std::int64_t d) { return {r, 0, d}; }
  static QuadElem sqrt_minus_d(std::int64_t d) { return {0, 1, d}; }

  bool is_zero() const { return x == 0 && y == 0; }
  bool is_rational() const { return y == 0; }

  friend bool operator==(const QuadElem& a, const QuadElem& b) { return a.d == b.d && a.x == b.x && a.y == b.y; }
};

QuadElem operator+(const QuadElem& a, const QuadElem& b);
QuadElem operator-(const QuadElem& a, const QuadElem& b);
QuadElem operator-(const QuadElem& a);
QuadElem operator*(const QuadElem& a, const QuadElem& b);
QuadElem operator/(const QuadElem& a, const QuadElem& b);
QuadElem operator*(const Rational& r, const QuadElem& a);
inline QuadElem& operator+=(QuadElem& a, const QuadElem& b) { return a = a + b; }
inline QuadElem& operator-=(QuadElem& a, const QuadElem& b) { return a = a - b; }
inline QuadElem& operator*=(QuadElem& a, const QuadElem& b) { return a = a * b; }

QuadElem conj(const QuadElem& z);
Rational norm(const QuadElem& z);
Rational trace(const QuadElem& z);
QuadElem pow(const QuadElem& z, unsigned e);

/// Membership in the maximal order of K.
bool is_integral(const QuadElem& z);

/// A square root in K, if one exists.
std::optional<QuadElem> sqrt_in_field(const QuadElem& z);

std::string to_string(const QuadElem& z);

enum class SplitKind { split, inert, ramified };

std::string_view to_string(SplitKind kind);

struct PrimeSplitting {
  std::int64_t ell = 0;
  SplitKind kind = SplitKind::inert;
  // A square root of -d mod ell for split ell; the one in (0, ell/2) for odd ell.
  std::optional<std::int64_t> root;
  int residue_degree = 1;
  std::int64_t d = 1;
};

/// Discriminant of K: -d if -d = 1 mod 4, else -4d.
std::int64_t field_discriminant(std::int64_t d);

PrimeSplitting splitting_type(std::int64_t ell, std::int64_t d);

/// A prime ideal of K above ell. For split ell the two ideals are told
/// apart by `conjugate`; the unconjugated one is the canonical "first".
struct PrimeIdeal {
  PrimeSplitting splitting;
  bool conjugate = false;

  std::int64_t ell() const { return splitting.ell; }
  std::int64_t norm() const;
  FiniteField residue_field() const;
  std::string label() const;
};

/// Prime ideals of K with norm <= bound, in (norm, ell, conjugate) order.
std::vector<PrimeIdeal> prime_ideals_up_to(std::int64_t d, std::int64_t norm_bound);

/// Prime ideals above ell (one or two).
std::vector<PrimeIdeal> primes_above(std::int64_t ell, std::int64_t d);

/// Reduction of z modulo the prime. The map is a ring homomorphism from the
/// localization of the maximal order at the prime onto its residue field.
FqElem reduce_quad(const QuadElem& z, const PrimeSplitting& P, bool conjugate_choice = false);
inline FqElem reduce_quad(const QuadElem& z, const PrimeIdeal& P) { return reduce_quad(z, P.splitting, P.conjugate); }

/// Valuation of a nonzero z at the prime.
int valuation(const QuadElem& z, const PrimeIdeal& P);

}  // namespace fsieve
