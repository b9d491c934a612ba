#pragma once

#include "fsieve/arith/polynomial.hpp"
#include "fsieve/ecurve/weierstrass.hpp"

#include <optional>
#include <vector>

namespace fsieve {

/// psi_3 = 3x^4 + b2 x^3 + 3 b4 x^2 + 3 b6 x + b8, low degree first.
template <class S>
std::vector<S> three_division_polynomial(const WeierstrassModel<S>& E) {
  auto inv = invariants(E);
  auto k = [&](long n) { return embed(n, E.a1); };
  return {inv.b8, k(3) * inv.b6, k(3) * inv.b4, inv.b2, k(3)};
}

struct TorsionSearchOptions {
  unsigned digits = 120;
  // Largest denominator tried when recognizing a numerical root as rational.
  long long max_denominator = 1'000'000'000'000LL;
};

/// Roots of psi_3 lying in K (resp. Q).
std::vector<QuadElem> three_division_roots(const WeierstrassModel<QuadElem>& E, const TorsionSearchOptions& options = {});
std::vector<Rational> three_division_roots(const WeierstrassModel<Rational>& E, const TorsionSearchOptions& options = {});

/// A point of exact order 3 defined over the coefficient field, if any. Roots
/// of psi_3 are located numerically, recognized as field elements and then
/// verified exactly; the returned point is certified by 2P = -P.
std::optional<Point<QuadElem>> has_3_torsion(const WeierstrassModel<QuadElem>& E, const TorsionSearchOptions& options = {});
std::optional<Point<Rational>> has_3_torsion(const WeierstrassModel<Rational>& E, const TorsionSearchOptions& options = {});

/// Nearest rational with denominator <= max_den by continued fractions, if
/// it agrees with x to within tol.
std::optional<Rational> recognize_rational(const Real& x, long long max_den, const Real& tol);

}  // namespace fsieve
