#include "fsieve/ecurve/weierstrass.hpp"

namespace fsieve {

WeierstrassModel<FqElem> reduce_model(const WeierstrassModel<QuadElem>& E, const PrimeIdeal& P) {
  return map_model(E, [&](const QuadElem& z) { return reduce_quad(z, P); });
}

WeierstrassModel<FqElem> reduce_model(const WeierstrassModel<Rational>& E, std::int64_t p) {
  FiniteField f = FiniteField::prime(p);
  return map_model(E, [&](const Rational& r) {
    auto v = mod_rational(r, p);
    if (!v) fail(ErrorKind::NonIntegralReduction, "coefficient " + to_string(r) + " is not integral at " + std::to_string(p));
    return FqElem(f, *v);
  });
}

WeierstrassModel<QuadElem> base_change(const WeierstrassModel<Rational>& E, std::int64_t d) {
  return map_model(E, [&](const Rational& r) { return QuadElem::rational(r, d); });
}

}  // namespace fsieve
