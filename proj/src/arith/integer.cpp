#include "fsieve/arith/integer.hpp"

#include "fsieve/arith/factor.hpp"
#include "fsieve/error.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cctype>
#include <cstdlib>
#include <limits>

namespace fsieve {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NonIntegralReduction: return "NonIntegralReduction";
    case ErrorKind::SingularModel: return "SingularModel";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::FactorizationIncomplete: return "FactorizationIncomplete";
    case ErrorKind::NotASolution: return "NotASolution";
    case ErrorKind::DegenerateRadical: return "DegenerateRadical";
    case ErrorKind::UnhandledCase: return "UnhandledCase";
    case ErrorKind::IncompleteTable: return "IncompleteTable";
    case ErrorKind::MissingEigenvalue: return "MissingEigenvalue";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::MissingTermImplementation: return "MissingTermImplementation";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::NetworkUnavailable: return "NetworkUnavailable";
    case ErrorKind::SchemaMismatch: return "SchemaMismatch";
    case ErrorKind::ScanExhausted: return "ScanExhausted";
    case ErrorKind::MissingExternalData: return "MissingExternalData";
  }
  return "Unknown";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::FactorizationIncomplete:
    case ErrorKind::ScanExhausted:
      return 3;
    case ErrorKind::IncompleteTable:
    case ErrorKind::MissingEigenvalue:
    case ErrorKind::MissingTermImplementation:
    case ErrorKind::NetworkUnavailable:
    case ErrorKind::MissingExternalData:
      return 4;
    default:
      return 2;
  }
}

Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

Integer ipow(const Integer& base, unsigned exponent) { return boost::multiprecision::pow(base, exponent); }

Rational rpow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  Rational b = base;
  while (exponent != 0) {
    if (exponent & 1u) result *= b;
    exponent >>= 1;
    if (exponent != 0) b *= b;
  }
  return result;
}

Integer mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

std::int64_t powmod(std::int64_t base, std::uint64_t exponent, std::int64_t m) {
  std::int64_t result = 1 % m;
  base = mod(base, m);
  while (exponent != 0) {
    if (exponent & 1u) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exponent >>= 1;
  }
  return result;
}

std::int64_t invmod(std::int64_t a, std::int64_t m) {
  std::int64_t g = m, x = 0, x1 = 1, a1 = mod(a, m);
  while (a1 != 0) {
    std::int64_t q = g / a1;
    std::int64_t t = g - q * a1;
    g = a1;
    a1 = t;
    t = x - q * x1;
    x = x1;
    x1 = t;
  }
  require(g == 1, ErrorKind::InvalidArgument, "element not invertible modulo " + std::to_string(m));
  return mod(x, m);
}

std::optional<std::int64_t> mod_rational(const Rational& r, std::int64_t p) {
  Integer den = denominator(r);
  std::int64_t dm = to_int64(mod(den, Integer(p)));
  if (dm == 0) return std::nullopt;
  std::int64_t nm = to_int64(mod(numerator(r), Integer(p)));
  return mulmod(nm, invmod(dm, p), p);
}

unsigned valuation(Integer n, const Integer& p) {
  require(n != 0, ErrorKind::InvalidArgument, "valuation of zero");
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

int valuation(const Rational& r, const Integer& p) {
  require(r != 0, ErrorKind::InvalidArgument, "valuation of zero");
  return static_cast<int>(valuation(numerator(r), p)) - static_cast<int>(valuation(denominator(r), p));
}

Integer isqrt(const Integer& n) {
  require(n >= 0, ErrorKind::InvalidArgument, "isqrt of negative number");
  return boost::multiprecision::sqrt(n);
}

bool is_square(const Integer& n, Integer* root) {
  if (n < 0) return false;
  Integer s = isqrt(n);
  if (s * s != n) return false;
  if (root) *root = s;
  return true;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
  Integer a, b;
  if (!is_square(numerator(r), &a) || !is_square(denominator(r), &b)) return std::nullopt;
  return Rational(a, b);
}

bool is_squarefree(const Integer& n) {
  require(n != 0, ErrorKind::InvalidArgument, "is_squarefree(0)");
  for (const auto& pp : factor(n))
    if (pp.exponent > 1) return false;
  return true;
}

Integer squarefree_kernel(const Integer& n) {
  require(n != 0, ErrorKind::InvalidArgument, "squarefree_kernel(0)");
  Integer k = n < 0 ? -1 : 1;
  for (const auto& pp : factor(n))
    if (pp.exponent % 2 == 1) k *= pp.prime;
  return k;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  return is_probable_prime(Integer(n));
}

std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
  std::vector<std::int64_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
  for (std::int64_t i = 2; i <= bound; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    out.push_back(i);
    for (std::int64_t j = i * i; j <= bound; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  return out;
}

std::int64_t next_prime(std::int64_t n) {
  std::int64_t c = n < 2 ? 2 : n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

bool fits_int64(const Integer& n) {
  return n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t to_int64(const Integer& n) {
  require(fits_int64(n), ErrorKind::InvalidArgument, "integer does not fit in 64 bits: " + to_string(n));
  return n.convert_to<std::int64_t>();
}

Integer parse_integer(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string s(text.substr(b, e - b));
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  bool ok = !s.empty();
  for (std::size_t i = 0; i < s.size() && ok; ++i)
    ok = std::isdigit(static_cast<unsigned char>(s[i])) || (i == 0 && s[i] == '-' && s.size() > 1);
  require(ok, ErrorKind::ParseError, "not an integer: '" + std::string(text) + "'");
  return Integer(s);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  require(den != 0, ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Integer& n) { return n.str(); }

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace fsieve
