#pragma once

// Finite fields F_p and F_{p^2}. Degree-2 fields are F_p[t]/(t^2 - c1*t - c0).
// For odd p the model is t^2 = s with s the least quadratic non-residue; F_4
// uses t^2 = t + 1.

#include <cstdint>
#include <string>

namespace fsieve {

struct FiniteField {
  std::int64_t p = 2;
  int degree = 1;
  std::int64_t c0 = 0;
  std::int64_t c1 = 0;

  static FiniteField prime(std::int64_t p);
  static FiniteField quadratic(std::int64_t p);

  std::int64_t order() const { return degree == 1 ? p : p * p; }

  friend bool operator==(const FiniteField&, const FiniteField&) = default;
};

std::int64_t least_nonresidue(std::int64_t p);

struct FqElem {
  FiniteField field;
  std::int64_t a = 0;
  std::int64_t b = 0;

  FqElem() = default;
  FqElem(const FiniteField& f, std::int64_t a_, std::int64_t b_ = 0);

  static FqElem zero(const FiniteField& f) { return {f, 0, 0}; }
  static FqElem one(const FiniteField& f) { return {f, 1, 0}; }
  static FqElem generator(const FiniteField& f) { return {f, 0, 1}; }

  /// Bijection with [0, q): a + b*p.
  std::int64_t index() const { return a + b * field.p; }
  static FqElem from_index(const FiniteField& f, std::int64_t i) { return {f, i % f.p, i / f.p}; }

  bool is_zero() const { return a == 0 && b == 0; }

  friend bool operator==(const FqElem& x, const FqElem& y) { return x.a == y.a && x.b == y.b && x.field == y.field; }
};

FqElem operator+(const FqElem& x, const FqElem& y);
FqElem operator-(const FqElem& x, const FqElem& y);
FqElem operator-(const FqElem& x);
FqElem operator*(const FqElem& x, const FqElem& y);
FqElem operator*(std::int64_t k, const FqElem& x);
inline FqElem& operator+=(FqElem& x, const FqElem& y) { return x = x + y; }
inline FqElem& operator-=(FqElem& x, const FqElem& y) { return x = x - y; }
inline FqElem& operator*=(FqElem& x, const FqElem& y) { return x = x * y; }

/// Norm to F_p.
std::int64_t fq_norm(const FqElem& x);
FqElem inverse(const FqElem& x);
FqElem operator/(const FqElem& x, const FqElem& y);
FqElem pow(const FqElem& x, std::uint64_t e);
/// Frobenius x -> x^p.
FqElem frobenius(const FqElem& x);
/// Quadratic character on F_q: 0, 1, -1.
int quadratic_character(const FqElem& x);

std::string to_string(const FqElem& x);

}  // namespace fsieve
