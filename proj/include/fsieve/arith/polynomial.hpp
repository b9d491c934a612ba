#pragma once

// Dense univariate polynomials, coefficients stored low degree first.

#include "fsieve/arith/integer.hpp"
#include "fsieve/error.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <complex>
#include <string>
#include <vector>

namespace fsieve {

template <class Scalar>
struct Polynomial {
  std::vector<Scalar> c;

  Polynomial() = default;
  Polynomial(std::initializer_list<Scalar> coeffs) : c(coeffs) { trim(); }
  explicit Polynomial(std::vector<Scalar> coeffs) : c(std::move(coeffs)) { trim(); }

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const Scalar& lead() const { return c.back(); }
  Scalar coeff(int i) const { return i >= 0 && i < static_cast<int>(c.size()) ? c[static_cast<std::size_t>(i)] : Scalar(0); }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c == b.c; }
};

using RatPoly = Polynomial<Rational>;

template <class S>
Polynomial<S> operator+(const Polynomial<S>& a, const Polynomial<S>& b) {
  std::vector<S> r(std::max(a.c.size(), b.c.size()), S(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
  return Polynomial<S>(std::move(r));
}

template <class S>
Polynomial<S> operator-(const Polynomial<S>& a) {
  std::vector<S> r(a.c);
  for (auto& x : r) x = -x;
  return Polynomial<S>(std::move(r));
}

template <class S>
Polynomial<S> operator-(const Polynomial<S>& a, const Polynomial<S>& b) {
  return a + (-b);
}

template <class S>
Polynomial<S> operator*(const Polynomial<S>& a, const Polynomial<S>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<S> r(a.c.size() + b.c.size() - 1, S(0));
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
  return Polynomial<S>(std::move(r));
}

template <class S>
Polynomial<S> operator*(const S& k, const Polynomial<S>& a) {
  std::vector<S> r(a.c);
  for (auto& x : r) x *= k;
  return Polynomial<S>(std::move(r));
}

/// Euclidean division over a field: a = q*b + r, deg r < deg b.
template <class S>
void divmod(const Polynomial<S>& a, const Polynomial<S>& b, Polynomial<S>& q, Polynomial<S>& r) {
  require(!b.is_zero(), ErrorKind::InvalidArgument, "polynomial division by zero");
  r = a;
  q = {};
  if (a.degree() < b.degree()) return;
  std::vector<S> qc(static_cast<std::size_t>(a.degree() - b.degree() + 1), S(0));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    S k = r.lead() / b.lead();
    int shift = r.degree() - b.degree();
    qc[static_cast<std::size_t>(shift)] = k;
    for (int i = 0; i <= b.degree(); ++i) r.c[static_cast<std::size_t>(i + shift)] -= k * b.c[static_cast<std::size_t>(i)];
    r.c.pop_back();
    r.trim();
  }
  q = Polynomial<S>(std::move(qc));
}

template <class S>
Polynomial<S> operator%(const Polynomial<S>& a, const Polynomial<S>& b) {
  Polynomial<S> q, r;
  divmod(a, b, q, r);
  return r;
}

template <class S, class X>
X evaluate(const Polynomial<S>& f, const X& x) {
  X acc = X(0);
  for (auto it = f.c.rbegin(); it != f.c.rend(); ++it) acc = acc * x + X(*it);
  return acc;
}

template <class S>
Polynomial<S> derivative(const Polynomial<S>& f) {
  if (f.degree() < 1) return {};
  std::vector<S> r(f.c.size() - 1);
  for (std::size_t i = 1; i < f.c.size(); ++i) r[i - 1] = f.c[i] * S(static_cast<long>(i));
  return Polynomial<S>(std::move(r));
}

/// Resultant over a field by the Euclidean recurrence
/// res(f, g) = (-1)^{mn} lc(g)^{m - deg r} res(g, r), r = f mod g.
template <class S>
S resultant(Polynomial<S> f, Polynomial<S> g) {
  if (f.is_zero() || g.is_zero()) return S(0);
  S acc(1);
  while (true) {
    const int m = f.degree(), n = g.degree();
    if (n == 0) {
      S lp(1);
      for (int i = 0; i < m; ++i) lp *= g.lead();
      return acc * lp;
    }
    Polynomial<S> r = f % g;
    if (r.is_zero()) return S(0);
    if ((m * n) % 2 == 1) acc = -acc;
    for (int i = 0; i < m - r.degree(); ++i) acc *= g.lead();
    f = std::move(g);
    g = std::move(r);
  }
}

template <class S>
std::string to_string(const Polynomial<S>& f, const std::string& var = "x") {
  if (f.is_zero()) return "0";
  std::string s;
  for (int i = f.degree(); i >= 0; --i) {
    const S& k = f.c[static_cast<std::size_t>(i)];
    if (k == 0) continue;
    std::string ks = to_string(k);
    if (!s.empty()) s += ks[0] == '-' ? " - " : " + ";
    else if (ks[0] == '-') s += "-";
    if (ks[0] == '-') ks.erase(0, 1);
    if (i == 0 || ks != "1") s += ks;
    if (i > 0) s += (i == 0 || ks != "1" ? "*" : "") + var + (i > 1 ? "^" + std::to_string(i) : "");
  }
  return s;
}

RatPoly to_rational(const std::vector<Integer>& coeffs);

using Real = boost::multiprecision::mpfr_float;

/// Raises the thread's default Real precision for the lifetime of the scope.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits) : saved_(Real::default_precision()) {
    if (digits > saved_) Real::default_precision(digits);
  }
  ~PrecisionScope() { Real::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

/// Complex number over Real; std::complex is unspecified for non-builtin types.
struct RealComplex {
  Real re, im;
};

/// All complex roots of a squarefree polynomial with rational coefficients,
/// found in double precision from the companion matrix and refined by Newton
/// iteration to `digits` decimal digits.
std::vector<RealComplex> complex_roots(const RatPoly& f, unsigned digits);
std::vector<std::complex<double>> complex_roots_double(const RatPoly& f);

}  // namespace fsieve
