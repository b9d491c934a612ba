#pragma once

// Weierstrass models y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over a
// coefficient domain: Rational, QuadElem or FqElem.

#include "fsieve/arith/finite_field.hpp"
#include "fsieve/arith/quadratic.hpp"
#include "fsieve/error.hpp"

#include <optional>
#include <type_traits>
#include <string>

namespace fsieve {

// Domain adapters. `like` carries the field data (d, or the finite field).
inline Rational embed(long k, const Rational&) { return Rational(k); }
inline QuadElem embed(long k, const QuadElem& like) { return QuadElem::rational(k, like.d); }
inline FqElem embed(long k, const FqElem& like) { return {like.field, k}; }
inline bool is_zero(const Rational& r) { return r == 0; }
inline bool is_zero(const QuadElem& z) { return z.is_zero(); }
inline bool is_zero(const FqElem& x) { return x.is_zero(); }
inline std::string scalar_string(const Rational& r) { return to_string(r); }
inline std::string scalar_string(const QuadElem& z) { return to_string(z); }
inline std::string scalar_string(const FqElem& x) { return to_string(x); }

template <class Scalar>
struct WeierstrassModel {
  Scalar a1, a2, a3, a4, a6;

  friend bool operator==(const WeierstrassModel&, const WeierstrassModel&) = default;
};

template <class Scalar>
struct Invariants {
  Scalar b2, b4, b6, b8, c4, c6, disc;
  std::optional<Scalar> j;
};

template <class S>
Invariants<S> invariants(const WeierstrassModel<S>& E) {
  auto k = [&](long n) { return embed(n, E.a1); };
  Invariants<S> r;
  r.b2 = E.a1 * E.a1 + k(4) * E.a2;
  r.b4 = E.a1 * E.a3 + k(2) * E.a4;
  r.b6 = E.a3 * E.a3 + k(4) * E.a6;
  r.b8 = E.a1 * E.a1 * E.a6 + k(4) * E.a2 * E.a6 - E.a1 * E.a3 * E.a4 + E.a2 * E.a3 * E.a3 - E.a4 * E.a4;
  r.c4 = r.b2 * r.b2 - k(24) * r.b4;
  r.c6 = k(-1) * r.b2 * r.b2 * r.b2 + k(36) * r.b2 * r.b4 - k(216) * r.b6;
  r.disc = k(-1) * r.b2 * r.b2 * r.b8 - k(8) * r.b4 * r.b4 * r.b4 - k(27) * r.b6 * r.b6 + k(9) * r.b2 * r.b4 * r.b6;
  if (!is_zero(r.disc)) r.j = r.c4 * r.c4 * r.c4 / r.disc;
  return r;
}

template <class S>
bool is_singular(const WeierstrassModel<S>& E) {
  return is_zero(invariants(E).disc);
}

/// Quadratic twist by delta (characteristic not 2), as the model
/// y^2 = x^3 + delta*b2/4 x^2 + delta^2*b4/2 x + delta^3*b6/4.
template <class S>
WeierstrassModel<S> quadratic_twist(const WeierstrassModel<S>& E, const S& delta) {
  require(!is_zero(delta), ErrorKind::InvalidArgument, "twist by zero");
  auto k = [&](long n) { return embed(n, E.a1); };
  auto inv = invariants(E);
  S half = k(1) / k(2), quarter = half * half;
  S zero = k(0);
  return {zero, delta * inv.b2 * quarter, zero, delta * delta * inv.b4 * half, delta * delta * delta * inv.b6 * quarter};
}

template <class S, class F>
auto map_model(const WeierstrassModel<S>& E, F&& f) {
  using T = std::decay_t<decltype(f(E.a1))>;
  return WeierstrassModel<T>{f(E.a1), f(E.a2), f(E.a3), f(E.a4), f(E.a6)};
}

/// Reduction of a model over K modulo a prime ideal.
WeierstrassModel<FqElem> reduce_model(const WeierstrassModel<QuadElem>& E, const PrimeIdeal& P);
WeierstrassModel<FqElem> reduce_model(const WeierstrassModel<Rational>& E, std::int64_t p);

WeierstrassModel<QuadElem> base_change(const WeierstrassModel<Rational>& E, std::int64_t d);

template <class S>
std::string to_string(const WeierstrassModel<S>& E) {
  return "[" + scalar_string(E.a1) + ", " + scalar_string(E.a2) + ", " + scalar_string(E.a3) + ", " +
         scalar_string(E.a4) + ", " + scalar_string(E.a6) + "]";
}

/// Affine point or the point at infinity.
template <class S>
struct Point {
  S x, y;
  bool infinity = false;

  friend bool operator==(const Point&, const Point&) = default;
};

template <class S>
bool on_curve(const WeierstrassModel<S>& E, const Point<S>& P) {
  if (P.infinity) return true;
  return is_zero(P.y * P.y + E.a1 * P.x * P.y + E.a3 * P.y -
                 (P.x * P.x * P.x + E.a2 * P.x * P.x + E.a4 * P.x + E.a6));
}

template <class S>
Point<S> negate(const WeierstrassModel<S>& E, const Point<S>& P) {
  if (P.infinity) return P;
  return {P.x, embed(0, P.x) - P.y - E.a1 * P.x - E.a3, false};
}

template <class S>
Point<S> double_point(const WeierstrassModel<S>& E, const Point<S>& P) {
  if (P.infinity) return P;
  auto k = [&](long n) { return embed(n, P.x); };
  S den = k(2) * P.y + E.a1 * P.x + E.a3;
  if (is_zero(den)) return {k(0), k(0), true};
  S lambda = (k(3) * P.x * P.x + k(2) * E.a2 * P.x + E.a4 - E.a1 * P.y) / den;
  S x3 = lambda * lambda + E.a1 * lambda - E.a2 - k(2) * P.x;
  S y3 = k(0) - (lambda + E.a1) * x3 - (P.y - lambda * P.x) - E.a3;
  return {x3, y3, false};
}

/// P has exact order 3 iff P != O and 2P = -P.
template <class S>
bool has_order_three(const WeierstrassModel<S>& E, const Point<S>& P) {
  return !P.infinity && on_curve(E, P) && double_point(E, P) == negate(E, P);
}

}  // namespace fsieve
