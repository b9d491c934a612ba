#include "fsieve/arith/quadratic.hpp"

#include "fsieve/arith/kronecker.hpp"
#include "fsieve/error.hpp"

#include <algorithm>
#include <tuple>

namespace fsieve {
namespace {

void same_d(const QuadElem& a, const QuadElem& b) {
  require(a.d == b.d, ErrorKind::InvalidArgument, "quadratic field mismatch");
}

bool omega_is_half(std::int64_t d) { return mod(-d, 4) == 1; }

// Square root of a mod odd prime p (Tonelli-Shanks); a must be a square.
std::int64_t sqrt_mod(std::int64_t a, std::int64_t p) {
  a = mod(a, p);
  if (a == 0) return 0;
  if (p % 4 == 3) return powmod(a, static_cast<std::uint64_t>((p + 1) / 4), p);
  std::int64_t q = p - 1;
  int s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::int64_t z = least_nonresidue(p);
  std::int64_t m = s, c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    std::int64_t i = 0, tt = t;
    while (tt != 1) {
      tt = mulmod(tt, tt, p);
      ++i;
    }
    std::int64_t b = c;
    for (std::int64_t j = 0; j < m - i - 1; ++j) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return r;
}

// Image of sqrt(-d) in the residue field.
FqElem sqrt_minus_d_image(const PrimeSplitting& P, bool conjugate_choice) {
  const std::int64_t ell = P.ell, d = P.d;
  if (ell == 2) {
    // sqrt(-d) is congruent to d mod any prime above 2 (it is 2*omega - 1 when
    // omega is half-integral).
    FiniteField f = P.kind == SplitKind::inert ? FiniteField::quadratic(2) : FiniteField::prime(2);
    return {f, d % 2};
  }
  switch (P.kind) {
    case SplitKind::split: {
      FiniteField f = FiniteField::prime(ell);
      std::int64_t u = *P.root;
      return {f, conjugate_choice ? ell - u : u};
    }
    case SplitKind::ramified: return FqElem::zero(FiniteField::prime(ell));
    case SplitKind::inert: {
      FiniteField f = FiniteField::quadratic(ell);
      // -d = s*c^2 with s the field's non-residue, so sqrt(-d) = c*t.
      std::int64_t c2 = mulmod(mod(-d, ell), invmod(f.c0, ell), ell);
      std::int64_t c = sqrt_mod(c2, ell);
      c = std::min(c, ell - c);
      return {f, 0, conjugate_choice ? ell - c : c};
    }
  }
  fail(ErrorKind::InvalidArgument, "unreachable splitting kind");
}

// Image of omega in the residue field above 2.
FqElem omega_image_two(const PrimeSplitting& P, bool conjugate_choice) {
  // omega = (1 + sqrt(-d))/2 with minimal polynomial X^2 - X + (1+d)/4.
  if (P.kind == SplitKind::inert) {
    FiniteField f = FiniteField::quadratic(2);
    return conjugate_choice ? FqElem{f, 1, 1} : FqElem{f, 0, 1};
  }
  return {FiniteField::prime(2), conjugate_choice ? 1 : 0};
}

}  // namespace

QuadElem operator+(const QuadElem& a, const QuadElem& b) {
  same_d(a, b);
  return {a.x + b.x, a.y + b.y, a.d};
}

QuadElem operator-(const QuadElem& a, const QuadElem& b) {
  same_d(a, b);
  return {a.x - b.x, a.y - b.y, a.d};
}

QuadElem operator-(const QuadElem& a) { return {-a.x, -a.y, a.d}; }

QuadElem operator*(const QuadElem& a, const QuadElem& b) {
  same_d(a, b);
  return {a.x * b.x - a.y * b.y * a.d, a.x * b.y + a.y * b.x, a.d};
}

QuadElem operator*(const Rational& r, const QuadElem& a) { return {r * a.x, r * a.y, a.d}; }

QuadElem operator/(const QuadElem& a, const QuadElem& b) {
  same_d(a, b);
  Rational n = norm(b);
  require(n != 0, ErrorKind::InvalidArgument, "division by zero in K");
  QuadElem num = a * conj(b);
  return {num.x / n, num.y / n, a.d};
}

QuadElem conj(const QuadElem& z) { return {z.x, -z.y, z.d}; }

Rational norm(const QuadElem& z) { return z.x * z.x + z.y * z.y * z.d; }

Rational trace(const QuadElem& z) { return 2 * z.x; }

QuadElem pow(const QuadElem& z, unsigned e) {
  QuadElem r = QuadElem::rational(1, z.d), b = z;
  while (e != 0) {
    if (e & 1u) r *= b;
    e >>= 1;
    if (e != 0) b *= b;
  }
  return r;
}

bool is_integral(const QuadElem& z) { return denominator(trace(z)) == 1 && denominator(norm(z)) == 1; }

std::optional<QuadElem> sqrt_in_field(const QuadElem& z) {
  const std::int64_t d = z.d;
  if (z.is_zero()) return z;
  if (z.y == 0) {
    if (auto r = rational_sqrt(z.x)) return QuadElem{*r, 0, d};
    if (auto r = rational_sqrt(-z.x / d)) return QuadElem{0, *r, d};
    return std::nullopt;
  }
  // (a + b sqrt(-d))^2 = z forces a^2 + d b^2 = sqrt(N(z)), a^2 - d b^2 = x.
  auto n = rational_sqrt(norm(z));
  if (!n) return std::nullopt;
  auto a = rational_sqrt((z.x + *n) / 2);
  if (!a || *a == 0) return std::nullopt;
  QuadElem r{*a, z.y / (2 * *a), d};
  if (r * r != z) return std::nullopt;
  return r;
}

std::string to_string(const QuadElem& z) {
  if (z.y == 0) return to_string(z.x);
  std::string ys = z.y == 1 ? "" : z.y == -1 ? "-" : to_string(z.y) + "*";
  std::string s = ys + "sqrt(-" + std::to_string(z.d) + ")";
  if (z.x == 0) return s;
  return to_string(z.x) + (s[0] == '-' ? s : "+" + s);
}

std::string_view to_string(SplitKind kind) {
  switch (kind) {
    case SplitKind::split: return "split";
    case SplitKind::inert: return "inert";
    case SplitKind::ramified: return "ramified";
  }
  return "unknown";
}

std::int64_t field_discriminant(std::int64_t d) { return omega_is_half(d) ? -d : -4 * d; }

PrimeSplitting splitting_type(std::int64_t ell, std::int64_t d) {
  require(is_prime(ell), ErrorKind::InvalidArgument, "splitting_type needs a prime, got " + std::to_string(ell));
  require(d >= 1 && is_squarefree(Integer(d)), ErrorKind::InvalidArgument,
          "d must be a positive square-free integer, got " + std::to_string(d));
  PrimeSplitting P;
  P.ell = ell;
  P.d = d;
  int k = kronecker(field_discriminant(d), ell);
  P.kind = k == 0 ? SplitKind::ramified : k == 1 ? SplitKind::split : SplitKind::inert;
  P.residue_degree = P.kind == SplitKind::inert ? 2 : 1;
  if (P.kind == SplitKind::split) {
    if (ell == 2) {
      P.root = 1;
    } else {
      std::int64_t u = sqrt_mod(-d, ell);
      P.root = std::min(u, ell - u);
    }
  }
  return P;
}

std::int64_t PrimeIdeal::norm() const {
  return splitting.kind == SplitKind::inert ? splitting.ell * splitting.ell : splitting.ell;
}

FiniteField PrimeIdeal::residue_field() const {
  return splitting.kind == SplitKind::inert ? FiniteField::quadratic(ell()) : FiniteField::prime(ell());
}

std::string PrimeIdeal::label() const {
  std::string s = "p" + std::to_string(ell());
  if (splitting.kind == SplitKind::split) s += conjugate ? "b" : "a";
  return s;
}

std::vector<PrimeIdeal> primes_above(std::int64_t ell, std::int64_t d) {
  PrimeSplitting P = splitting_type(ell, d);
  std::vector<PrimeIdeal> out{{P, false}};
  if (P.kind == SplitKind::split) out.push_back({P, true});
  return out;
}

std::vector<PrimeIdeal> prime_ideals_up_to(std::int64_t d, std::int64_t norm_bound) {
  std::vector<PrimeIdeal> out;
  for (std::int64_t ell : primes_up_to(norm_bound)) {
    for (auto& P : primes_above(ell, d))
      if (P.norm() <= norm_bound) out.push_back(P);
  }
  std::stable_sort(out.begin(), out.end(), [](const PrimeIdeal& a, const PrimeIdeal& b) {
    return std::make_tuple(a.norm(), a.ell(), a.conjugate) < std::make_tuple(b.norm(), b.ell(), b.conjugate);
  });
  return out;
}

FqElem reduce_quad(const QuadElem& z, const PrimeSplitting& P, bool conjugate_choice) {
  require(z.d == P.d, ErrorKind::InvalidArgument, "element and prime live in different fields");
  const std::int64_t ell = P.ell;
  // Coordinates in the integral basis {1, omega}.
  Rational c0 = z.x, c1 = z.y;
  bool half = omega_is_half(z.d);
  if (half) {
    c0 = z.x - z.y;
    c1 = 2 * z.y;
  }
  auto r0 = mod_rational(c0, ell), r1 = mod_rational(c1, ell);
  if (!r0 || !r1) fail(ErrorKind::NonIntegralReduction, to_string(z) + " is not integral at " + std::to_string(ell));
  FqElem w = (ell == 2 && half) ? omega_image_two(P, conjugate_choice) : sqrt_minus_d_image(P, conjugate_choice);
  if (ell != 2 && half) w = inverse(FqElem{w.field, 2}) * (FqElem::one(w.field) + w);
  return FqElem{w.field, *r0} + (*r1) * w;
}

int valuation(const QuadElem& z, const PrimeIdeal& P) {
  require(!z.is_zero(), ErrorKind::InvalidArgument, "valuation of zero");
  const Integer ell(P.ell());
  const int e = P.splitting.kind == SplitKind::ramified ? 2 : 1;
  // Integral-basis coordinates, z = (c0 + c1*omega) / n.
  bool half = omega_is_half(z.d);
  Rational r0 = half ? z.x - z.y : z.x, r1 = half ? 2 * z.y : z.y;
  Integer n = lcm(denominator(r0), denominator(r1));
  Integer c0 = numerator(r0 * n), c1 = numerator(r1 * n);
  int v = -e * static_cast<int>(valuation(n, ell));
  while (c0 % ell == 0 && c1 % ell == 0) {
    c0 /= ell;
    c1 /= ell;
    v += e;
  }
  QuadElem w = half ? QuadElem{Rational(c0) + Rational(c1, 2), Rational(c1, 2), z.d}
                     : QuadElem{Rational(c0), Rational(c1), z.d};
  int vn = static_cast<int>(valuation(numerator(norm(w)), ell));
  switch (P.splitting.kind) {
    case SplitKind::inert: return v + vn / 2;
    case SplitKind::ramified: return v + vn;
    case SplitKind::split:
      // w is not divisible by ell, so at most one prime above ell contains it.
      return reduce_quad(w, P).is_zero() ? v + vn : v;
  }
  return v;
}

}  // namespace fsieve
