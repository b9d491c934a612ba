#include "fsieve/arith/finite_field.hpp"

#include "fsieve/arith/integer.hpp"
#include "fsieve/error.hpp"

namespace fsieve {

std::int64_t least_nonresidue(std::int64_t p) {
  require(p > 2, ErrorKind::InvalidArgument, "no quadratic non-residue mod 2");
  for (std::int64_t s = 2;; ++s)
    if (powmod(s, static_cast<std::uint64_t>((p - 1) / 2), p) == p - 1) return s;
}

FiniteField FiniteField::prime(std::int64_t p) {
  require(is_prime(p), ErrorKind::InvalidArgument, "field characteristic must be prime: " + std::to_string(p));
  return {p, 1, 0, 0};
}

FiniteField FiniteField::quadratic(std::int64_t p) {
  require(is_prime(p), ErrorKind::InvalidArgument, "field characteristic must be prime: " + std::to_string(p));
  if (p == 2) return {2, 2, 1, 1};
  return {p, 2, least_nonresidue(p), 0};
}

FqElem::FqElem(const FiniteField& f, std::int64_t a_, std::int64_t b_)
    : field(f), a(mod(a_, f.p)), b(f.degree == 1 ? 0 : mod(b_, f.p)) {}

namespace {

void same_field(const FqElem& x, const FqElem& y) {
  require(x.field == y.field, ErrorKind::InvalidArgument, "finite field mismatch");
}

}  // namespace

FqElem operator+(const FqElem& x, const FqElem& y) {
  same_field(x, y);
  return {x.field, x.a + y.a, x.b + y.b};
}

FqElem operator-(const FqElem& x, const FqElem& y) {
  same_field(x, y);
  return {x.field, x.a - y.a, x.b - y.b};
}

FqElem operator-(const FqElem& x) { return {x.field, -x.a, -x.b}; }

FqElem operator*(const FqElem& x, const FqElem& y) {
  same_field(x, y);
  const auto& f = x.field;
  const std::int64_t p = f.p;
  if (f.degree == 1) return {f, mulmod(x.a, y.a, p)};
  // (a + b t)(c + e t) = ac + (ae + bc) t + be t^2, t^2 = c1 t + c0.
  std::int64_t be = mulmod(x.b, y.b, p);
  std::int64_t a0 = (mulmod(x.a, y.a, p) + mulmod(be, f.c0, p)) % p;
  std::int64_t a1 = (mulmod(x.a, y.b, p) + mulmod(x.b, y.a, p) + mulmod(be, f.c1, p)) % p;
  return {f, a0, a1};
}

FqElem operator*(std::int64_t k, const FqElem& x) {
  std::int64_t km = mod(k, x.field.p);
  return {x.field, mulmod(km, x.a, x.field.p), mulmod(km, x.b, x.field.p)};
}

std::int64_t fq_norm(const FqElem& x) {
  const auto& f = x.field;
  const std::int64_t p = f.p;
  if (f.degree == 1) return x.a;
  // N(a + b t) = a^2 + ab*c1 - b^2*c0.
  return mod(mulmod(x.a, x.a, p) + mulmod(mulmod(x.a, x.b, p), f.c1, p) - mulmod(mulmod(x.b, x.b, p), f.c0, p), p);
}

FqElem frobenius(const FqElem& x) {
  const auto& f = x.field;
  if (f.degree == 1) return x;
  // The conjugate root of t is c1 - t.
  return {f, x.a + mulmod(x.b, f.c1, f.p), -x.b};
}

FqElem inverse(const FqElem& x) {
  require(!x.is_zero(), ErrorKind::InvalidArgument, "inverse of zero in F_q");
  if (x.field.degree == 1) return {x.field, invmod(x.a, x.field.p)};
  std::int64_t n = fq_norm(x);
  std::int64_t ninv = invmod(n, x.field.p);
  return ninv * frobenius(x);
}

FqElem operator/(const FqElem& x, const FqElem& y) { return x * inverse(y); }

FqElem pow(const FqElem& x, std::uint64_t e) {
  FqElem r = FqElem::one(x.field), b = x;
  while (e != 0) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

int quadratic_character(const FqElem& x) {
  if (x.is_zero()) return 0;
  const std::int64_t p = x.field.p;
  if (p == 2) return 1;
  // chi_q(x) = chi_p(N(x)) on F_{p^2}.
  std::int64_t n = fq_norm(x);
  return powmod(n, static_cast<std::uint64_t>((p - 1) / 2), p) == 1 ? 1 : -1;
}

std::string to_string(const FqElem& x) {
  if (x.field.degree == 1 || x.b == 0) return std::to_string(x.a);
  return std::to_string(x.a) + "+" + std::to_string(x.b) + "t";
}

}  // namespace fsieve
