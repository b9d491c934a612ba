#pragma once

// Elements of Q[x]/(phi) for a monic squarefree integer polynomial phi.

#include "fsieve/arith/integer.hpp"
#include "fsieve/arith/polynomial.hpp"

#include <memory>
#include <vector>

namespace fsieve {

struct NumberField {
  std::vector<Integer> poly;  // monic, low degree first

  explicit NumberField(std::vector<Integer> coeffs);

  int degree() const { return static_cast<int>(poly.size()) - 1; }
  RatPoly modulus() const { return to_rational(poly); }

  friend bool operator==(const NumberField& a, const NumberField& b) { return a.poly == b.poly; }
};

using NumberFieldPtr = std::shared_ptr<const NumberField>;

NumberFieldPtr make_number_field(std::vector<Integer> coeffs);
/// Q itself, as Q[x]/(x).
NumberFieldPtr rational_field();

struct NfElem {
  NumberFieldPtr field;
  std::vector<Rational> coords;  // length deg(phi)

  NfElem() = default;
  NfElem(NumberFieldPtr f, std::vector<Rational> c);

  static NfElem rational(const NumberFieldPtr& f, const Rational& r);
  static NfElem generator(const NumberFieldPtr& f);

  RatPoly as_polynomial() const { return RatPoly(coords); }
  bool is_zero() const;
  bool is_rational() const;

  friend bool operator==(const NfElem& a, const NfElem& b);
};

NfElem operator+(const NfElem& a, const NfElem& b);
NfElem operator-(const NfElem& a, const NfElem& b);
NfElem operator-(const NfElem& a);
NfElem operator*(const NfElem& a, const NfElem& b);
NfElem operator*(const Rational& r, const NfElem& a);
NfElem pow(const NfElem& a, unsigned e);

/// Norm to Q as the resultant res(phi, h) where h represents alpha.
Rational nf_norm(const NfElem& alpha);

/// Values of alpha under every complex embedding, in the root order of
/// complex_roots(phi).
std::vector<RealComplex> embeddings(const NfElem& alpha, unsigned digits);
std::vector<std::complex<double>> embeddings_double(const NfElem& alpha);

std::string to_string(const NfElem& a);

}  // namespace fsieve
