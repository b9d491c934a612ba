#include "fsieve/ecurve/torsion.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <complex>

namespace fsieve {
namespace {

RealComplex cmul(const RealComplex& a, const RealComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

RealComplex cdiv(const RealComplex& a, const RealComplex& b) {
  Real n = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

RealComplex horner(const std::vector<RealComplex>& c, const RealComplex& z) {
  RealComplex acc{Real(0), Real(0)};
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = cmul(acc, z);
    acc.re += it->re;
    acc.im += it->im;
  }
  return acc;
}

// Roots of a polynomial with complex coefficients, refined to high precision.
std::vector<RealComplex> roots(const std::vector<RealComplex>& c, unsigned digits) {
  const int n = static_cast<int>(c.size()) - 1;
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  std::complex<double> lead(c.back().re.convert_to<double>(), c.back().im.convert_to<double>());
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) {
    std::complex<double> ci(c[static_cast<std::size_t>(i)].re.convert_to<double>(), c[static_cast<std::size_t>(i)].im.convert_to<double>());
    companion(i, n - 1) = -ci / lead;
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  std::vector<RealComplex> dc;
  for (int i = 1; i <= n; ++i) dc.push_back({c[static_cast<std::size_t>(i)].re * i, c[static_cast<std::size_t>(i)].im * i});
  const Real tol = pow(Real(10), -static_cast<int>(digits));
  std::vector<RealComplex> out;
  for (int r = 0; r < n; ++r) {
    RealComplex z{Real(solver.eigenvalues()(r).real()), Real(solver.eigenvalues()(r).imag())};
    for (int it = 0; it < 400; ++it) {
      RealComplex den = horner(dc, z);
      if (den.re == 0 && den.im == 0) break;
      RealComplex step = cdiv(horner(c, z), den);
      z.re -= step.re;
      z.im -= step.im;
      if (abs(step.re) + abs(step.im) <= tol * (abs(z.re) + abs(z.im) + 1)) break;
    }
    out.push_back(z);
  }
  return out;
}

template <class S>
S eval_poly(const std::vector<S>& c, const S& x) {
  S acc = embed(0, x);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

std::optional<Rational> recognize_rational(const Real& x, long long max_den, const Real& tol) {
  // Convergents h/k of the continued fraction of x.
  Integer h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  Real r = x;
  for (int it = 0; it < 200; ++it) {
    Real fl = floor(r);
    Integer a = fl.convert_to<Integer>();
    Integer h2 = a * h1 + h0, k2 = a * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    Rational cand(h1, k1);
    if (abs(Real(cand) - x) <= tol * (abs(x) + 1)) return cand;
    Real frac = r - fl;
    if (frac == 0) break;
    r = 1 / frac;
  }
  return std::nullopt;
}

std::vector<QuadElem> three_division_roots(const WeierstrassModel<QuadElem>& E, const TorsionSearchOptions& options) {
  PrecisionScope scope(options.digits + 20);
  const std::int64_t d = E.a1.d;
  auto psi = three_division_polynomial(E);
  const Real sqrtd = sqrt(Real(d));
  std::vector<RealComplex> c;
  for (const auto& z : psi) c.push_back({Real(z.x), Real(z.y) * sqrtd});
  const Real tol = pow(Real(10), -static_cast<int>(options.digits / 2));
  std::vector<QuadElem> out;
  for (const auto& z : roots(c, options.digits)) {
    auto x = recognize_rational(z.re, options.max_denominator, tol);
    auto y = recognize_rational(z.im / sqrtd, options.max_denominator, tol);
    if (!x || !y) continue;
    QuadElem cand(*x, *y, d);
    if (!is_zero(eval_poly(psi, cand))) continue;
    bool seen = false;
    for (const auto& o : out) seen = seen || o == cand;
    if (!seen) out.push_back(cand);
  }
  return out;
}

std::vector<Rational> three_division_roots(const WeierstrassModel<Rational>& E, const TorsionSearchOptions& options) {
  // Rational roots are exactly the K-roots with zero sqrt(-d) part for any d.
  std::vector<Rational> out;
  for (const auto& z : three_division_roots(base_change(E, 1), options))
    if (z.is_rational()) out.push_back(z.x);
  return out;
}

std::optional<Point<QuadElem>> has_3_torsion(const WeierstrassModel<QuadElem>& E, const TorsionSearchOptions& options) {
  require(!is_singular(E), ErrorKind::SingularModel, "3-torsion search on a singular model");
  const std::int64_t d = E.a1.d;
  const QuadElem two = QuadElem::rational(2, d), four = QuadElem::rational(4, d);
  for (const auto& x : three_division_roots(E, options)) {
    // 2y + a1 x + a3 = s with s^2 = (a1 x + a3)^2 + 4 f(x).
    QuadElem lin = E.a1 * x + E.a3;
    QuadElem f = x * x * x + E.a2 * x * x + E.a4 * x + E.a6;
    auto s = sqrt_in_field(lin * lin + four * f);
    if (!s) continue;
    Point<QuadElem> P{x, (*s - lin) / two, false};
    if (has_order_three(E, P)) return P;
  }
  return std::nullopt;
}

std::optional<Point<Rational>> has_3_torsion(const WeierstrassModel<Rational>& E, const TorsionSearchOptions& options) {
  require(!is_singular(E), ErrorKind::SingularModel, "3-torsion search on a singular model");
  for (const auto& x : three_division_roots(E, options)) {
    Rational lin = E.a1 * x + E.a3;
    Rational f = x * x * x + E.a2 * x * x + E.a4 * x + E.a6;
    auto s = rational_sqrt(lin * lin + 4 * f);
    if (!s) continue;
    Point<Rational> P{x, (*s - lin) / 2, false};
    if (has_order_three(E, P)) return P;
  }
  return std::nullopt;
}

}  // namespace fsieve
