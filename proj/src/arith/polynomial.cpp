#include "fsieve/arith/polynomial.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace fsieve {

RatPoly to_rational(const std::vector<Integer>& coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (const auto& k : coeffs) c.emplace_back(k);
  return RatPoly(std::move(c));
}

std::vector<std::complex<double>> complex_roots_double(const RatPoly& f) {
  require(f.degree() >= 1, ErrorKind::InvalidArgument, "root finding needs a non-constant polynomial");
  const int n = f.degree();
  if (n == 1) return {std::complex<double>((-f.c[0] / f.c[1]).convert_to<double>(), 0.0)};
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = (-f.c[static_cast<std::size_t>(i)] / f.lead()).convert_to<double>();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion.cast<std::complex<double>>(), false);
  require(solver.info() == Eigen::Success, ErrorKind::InvariantViolation, "eigenvalue solver did not converge");
  std::vector<std::complex<double>> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  return out;
}

namespace {

RealComplex cmul(const RealComplex& a, const RealComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

RealComplex cdiv(const RealComplex& a, const RealComplex& b) {
  Real n = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

RealComplex horner(const std::vector<Real>& c, const RealComplex& z) {
  RealComplex acc{Real(0), Real(0)};
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = cmul(acc, z);
    acc.re += *it;
  }
  return acc;
}

}  // namespace

std::vector<RealComplex> complex_roots(const RatPoly& f, unsigned digits) {
  PrecisionScope scope(digits + 10);
  std::vector<Real> c, dc;
  for (const auto& k : f.c) c.emplace_back(k);
  RatPoly df = derivative(f);
  for (const auto& k : df.c) dc.emplace_back(k);

  std::vector<RealComplex> out;
  const Real tol = pow(Real(10), -static_cast<int>(digits + 5));
  for (const auto& z0 : complex_roots_double(f)) {
    RealComplex z{Real(z0.real()), Real(z0.imag())};
    for (int it = 0; it < 200; ++it) {
      RealComplex step = cdiv(horner(c, z), horner(dc, z));
      z.re -= step.re;
      z.im -= step.im;
      Real size = abs(step.re) + abs(step.im);
      Real scale = abs(z.re) + abs(z.im) + 1;
      if (size <= tol * scale) break;
    }
    out.push_back(z);
  }
  return out;
}

}  // namespace fsieve
