#include "fsieve/frey/frey_curve.hpp"

#include "fsieve/error.hpp"

namespace fsieve {

WeierstrassModel<QuadElem> frey_curve(const Integer& A, const Integer& B, std::int64_t d) {
  require(A != 0 || B != 0, ErrorKind::InvalidArgument, "(A, B) = (0, 0)");
  const QuadElem zero = QuadElem::rational(0, d);
  QuadElem a1(0, Rational(6 * B), d);
  QuadElem a3 = Rational(-4 * d) * QuadElem(Rational(A), Rational(B * B * B), d);
  return {a1, zero, a3, zero, zero};
}

QuadElem frey_discriminant(const Integer& A, const Integer& B, std::int64_t d) {
  Integer cp = A * A + d * ipow(B, 6);
  QuadElem u(Rational(A), Rational(B * B * B), d);
  Rational k = Rational(-256 * 27) * Rational(ipow(Integer(d), 4) * cp);
  return k * (u * u);
}

WeierstrassModel<Rational> multifrey_curve(const Integer& A, const Integer& B, std::int64_t d) {
  return {Rational(0), Rational(0), Rational(0), Rational(3 * d * B * B), Rational(2 * d * A)};
}

}  // namespace fsieve
