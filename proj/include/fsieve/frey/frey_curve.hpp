#pragma once

#include "fsieve/ecurve/weierstrass.hpp"

namespace fsieve {

/// E_{A,B}: y^2 + 6B sqrt(-d) xy - 4d(A + B^3 sqrt(-d)) y = x^3 over K.
WeierstrassModel<QuadElem> frey_curve(const Integer& A, const Integer& B, std::int64_t d);

/// Closed form -2^8 3^3 d^4 C^p (A + B^3 sqrt(-d))^2 with C^p = A^2 + d B^6.
QuadElem frey_discriminant(const Integer& A, const Integer& B, std::int64_t d);

/// Y^2 = X^3 + 3 d B^2 X + 2 d A over Q.
WeierstrassModel<Rational> multifrey_curve(const Integer& A, const Integer& B, std::int64_t d);

}  // namespace fsieve
