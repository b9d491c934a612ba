#include "fsieve/arith/number_field.hpp"

#include "fsieve/error.hpp"

namespace fsieve {

NumberField::NumberField(std::vector<Integer> coeffs) : poly(std::move(coeffs)) {
  require(poly.size() >= 2 && poly.back() == 1, ErrorKind::InvalidArgument, "defining polynomial must be monic of degree >= 1");
}

NumberFieldPtr make_number_field(std::vector<Integer> coeffs) {
  return std::make_shared<const NumberField>(std::move(coeffs));
}

NumberFieldPtr rational_field() {
  static const NumberFieldPtr q = make_number_field({Integer(0), Integer(1)});
  return q;
}

NfElem::NfElem(NumberFieldPtr f, std::vector<Rational> c) : field(std::move(f)), coords(std::move(c)) {
  require(field != nullptr, ErrorKind::InvalidArgument, "number field element without a field");
  const auto n = static_cast<std::size_t>(field->degree());
  if (coords.size() > n) {
    RatPoly r = RatPoly(coords) % field->modulus();
    coords = r.c;
  }
  coords.resize(n, Rational(0));
}

NfElem NfElem::rational(const NumberFieldPtr& f, const Rational& r) { return {f, {r}}; }

NfElem NfElem::generator(const NumberFieldPtr& f) { return {f, {Rational(0), Rational(1)}}; }

bool NfElem::is_zero() const {
  for (const auto& c : coords)
    if (c != 0) return false;
  return true;
}

bool NfElem::is_rational() const {
  for (std::size_t i = 1; i < coords.size(); ++i)
    if (coords[i] != 0) return false;
  return true;
}

namespace {

void same_field(const NfElem& a, const NfElem& b) {
  require(a.field && b.field && *a.field == *b.field, ErrorKind::InvalidArgument, "number field mismatch");
}

}  // namespace

bool operator==(const NfElem& a, const NfElem& b) { return *a.field == *b.field && a.coords == b.coords; }

NfElem operator+(const NfElem& a, const NfElem& b) {
  same_field(a, b);
  std::vector<Rational> c(a.coords);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords[i];
  return {a.field, std::move(c)};
}

NfElem operator-(const NfElem& a) {
  std::vector<Rational> c(a.coords);
  for (auto& x : c) x = -x;
  return {a.field, std::move(c)};
}

NfElem operator-(const NfElem& a, const NfElem& b) { return a + (-b); }

NfElem operator*(const NfElem& a, const NfElem& b) {
  same_field(a, b);
  RatPoly prod = (a.as_polynomial() * b.as_polynomial()) % a.field->modulus();
  return {a.field, prod.c};
}

NfElem operator*(const Rational& r, const NfElem& a) {
  std::vector<Rational> c(a.coords);
  for (auto& x : c) x *= r;
  return {a.field, std::move(c)};
}

NfElem pow(const NfElem& a, unsigned e) {
  NfElem r = NfElem::rational(a.field, 1), b = a;
  while (e != 0) {
    if (e & 1u) r = r * b;
    e >>= 1;
    if (e != 0) b = b * b;
  }
  return r;
}

Rational nf_norm(const NfElem& alpha) {
  RatPoly h = alpha.as_polynomial();
  if (h.is_zero()) return 0;
  if (h.degree() == 0) return rpow(h.c[0], static_cast<unsigned>(alpha.field->degree()));
  // phi is monic, so res(phi, h) = prod h(theta) over the roots theta of phi.
  return resultant(alpha.field->modulus(), h);
}

std::vector<RealComplex> embeddings(const NfElem& alpha, unsigned digits) {
  PrecisionScope scope(digits + 10);
  std::vector<RealComplex> out;
  std::vector<Real> c;
  for (const auto& k : alpha.coords) c.emplace_back(k);
  for (const auto& z : complex_roots(alpha.field->modulus(), digits)) {
    RealComplex acc{Real(0), Real(0)};
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      RealComplex t{acc.re * z.re - acc.im * z.im, acc.re * z.im + acc.im * z.re};
      t.re += *it;
      acc = t;
    }
    out.push_back(acc);
  }
  return out;
}

std::vector<std::complex<double>> embeddings_double(const NfElem& alpha) {
  std::vector<std::complex<double>> out;
  RatPoly h = alpha.as_polynomial();
  for (const auto& z : complex_roots_double(alpha.field->modulus())) {
    std::complex<double> acc = 0;
    for (auto it = h.c.rbegin(); it != h.c.rend(); ++it) acc = acc * z + it->convert_to<double>();
    out.push_back(acc);
  }
  return out;
}

std::string to_string(const NfElem& a) { return to_string(a.as_polynomial(), "a"); }

}  // namespace fsieve
