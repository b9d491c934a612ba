#include "fsieve/ellenberg/bound.hpp"

#include "fsieve/error.hpp"
#include "fsieve/io/digest.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/bernoulli.hpp>

#include <sstream>

namespace fsieve {
namespace {

constexpr unsigned kGuardDigits = 3;

// Sets the working precision exactly (the shared guard only raises it).
class ExactPrecision {
 public:
  explicit ExactPrecision(unsigned digits) : saved_(Real::default_precision()) { Real::default_precision(digits); }
  ~ExactPrecision() { Real::default_precision(saved_); }
  ExactPrecision(const ExactPrecision&) = delete;
  ExactPrecision& operator=(const ExactPrecision&) = delete;

 private:
  unsigned saved_;
};

const Real s32() { return Real(3) / 2; }

// sum_{k > n} k^{-s} for s = 3/2 by Euler-Maclaurin; n >= 64.
Real tail_three_halves(std::int64_t n) {
  const Real s = s32();
  const Real x = Real(n);
  Real out = pow(x, 1 - s) / (s - 1) - pow(x, -s) / 2;
  const unsigned digits = Real::default_precision();
  Real rising = s;  // (s)_{2j-1}
  Real xp = pow(x, -s - 1);
  Real fact = 2;    // (2j)!
  const Real eps = pow(Real(10), -static_cast<int>(digits) - 5);
  for (unsigned j = 1; j < 200; ++j) {
    Real b = boost::math::bernoulli_b2n<Real>(static_cast<int>(j));
    Real t = b / fact * rising * xp;
    out += t;
    if (abs(t) < eps * abs(out)) break;
    rising *= (s + 2 * j - 1) * (s + 2 * j);
    xp /= x * x;
    fact *= Real(2 * j + 1) * (2 * j + 2);
  }
  return out;
}

constexpr std::int64_t kDirect = 1024;

const std::vector<Real>& direct_prefix() {
  thread_local std::vector<Real> table;
  thread_local unsigned digits = 0;
  if (digits != Real::default_precision()) {
    digits = Real::default_precision();
    table.assign(kDirect + 1, Real(0));
    const Real s = s32();
    for (std::int64_t k = 1; k <= kDirect; ++k) table[k] = table[k - 1] + pow(Real(k), -s);
  }
  return table;
}

}  // namespace

const std::vector<std::string> kReferenceTerms = {"bound1", "E1", "E2", "E3", "F2"};

std::int64_t euler_phi(std::int64_t n) {
  require(n >= 1, ErrorKind::InvalidArgument, "phi of a non-positive integer");
  std::int64_t out = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    out -= out / p;
  }
  if (n > 1) out -= out / n;
  return out;
}

Real zeta_three_halves() { return direct_prefix()[kDirect] + tail_three_halves(kDirect); }

Real harmonic_three_halves(std::int64_t X) {
  require(X >= 0, ErrorKind::InvalidArgument, "negative summation bound");
  if (X <= kDirect) return direct_prefix()[static_cast<std::size_t>(X)];
  return zeta_three_halves() - tail_three_halves(X);
}

Real divisor_sum_three_halves(std::int64_t p) {
  // sum_{ab <= X} (ab)^{-s} = 2 sum_{a <= r} a^{-s} H(X / a) - H(r)^2, r = floor(sqrt X) = p.
  const std::int64_t X = p * p;
  const Real s = s32();
  const Real zeta = zeta_three_halves();
  const auto& pre = direct_prefix();
  Real acc = 0;
  for (std::int64_t a = 1; a <= p; ++a) {
    const std::int64_t m = X / a;
    Real H = m <= kDirect ? pre[static_cast<std::size_t>(m)] : zeta - tail_three_halves(m);
    acc += pow(Real(a), -s) * H;
  }
  Real Hp = harmonic_three_halves(p);
  return 2 * acc - Hp * Hp;
}

Real eval_E4(std::int64_t p, std::int64_t q, unsigned precision) {
  require(p >= 2 && q >= 1, ErrorKind::InvalidArgument, "eval_E4 needs p >= 2, q >= 1");
  ExactPrecision guard(precision + kGuardDigits);
  const Real pi = boost::math::constants::pi<Real>();
  const Real P = Real(p), Q = Real(q);
  const Real lp = log(P);
  const Real zeta = zeta_three_halves();
  const Real bracket = zeta * zeta - divisor_sum_three_halves(p);
  const Real first = 12 * Real(euler_phi(q)) * lp * lp / (pi * P * P);
  const Real second = Q * Q * log(P * P) / (4 * pi * P) * bracket;
  return 16 * pi * pi * pi * (first + second);
}

Real leading_term(std::int64_t p, std::int64_t q, unsigned precision) {
  ExactPrecision guard(precision + kGuardDigits);
  const Real pi = boost::math::constants::pi<Real>();
  const Real P = Real(p);
  return 4 * pi * exp(-2 * pi * pi / (P * P * Real(q) * log(P)));
}

Real BoundParams::sigma() const {
  ExactPrecision guard(precision + kGuardDigits);
  return Real(q) * Real(q) / (2 * boost::math::constants::pi<Real>());
}

namespace {

Real reference_term(const BoundParams& params, const std::string& name, std::int64_t p, std::int64_t m) {
  if (params.omit_reference_terms) return Real(0);
  if (!params.terms)
    fail(ErrorKind::MissingTermImplementation, "no implementation for term " + name + " (no term source configured)");
  auto v = params.terms->term(name, p, params.q, m);
  if (!v)
    fail(ErrorKind::MissingTermImplementation, "term " + name + "(p=" + std::to_string(p) + ", q=" +
                                                   std::to_string(params.q) + ") missing from " +
                                                   params.terms->description());
  return *v;
}

}  // namespace

Real eval_rhs(std::int64_t p, const BoundParams& params) {
  require(params.precision >= 38, ErrorKind::InvalidArgument, "precision must be at least 38 digits");
  require(params.q >= 1, ErrorKind::InvalidArgument, "character conductor must be positive");
  // Evaluate the reference terms first so a missing one fails fast.
  const Real b1 = reference_term(params, "bound1", p, 0);
  const Real e1 = reference_term(params, "E1", p, 0);
  const Real e2 = reference_term(params, "E2", p, 0);
  const Real e3 = reference_term(params, "E3", p, 0);
  const Real f2p = reference_term(params, "F2", p, p);
  const Real f21 = reference_term(params, "F2", p, 1);
  const Real lead = leading_term(p, params.q, params.precision);
  const Real e4 = eval_E4(p, params.q, params.precision);
  ExactPrecision guard(params.precision + kGuardDigits);
  const Real P2 = Real(p) * Real(p) - 1;
  const Real F = lead - e4 - e3 - e2 - e1 - b1;
  return F - f2p / P2 - Real(p) * f21 / P2;
}

BoundReport find_bound(const BoundParams& params, std::int64_t p_start, std::int64_t p_max) {
  BoundReport out;
  out.q = params.q;
  out.partial = params.omit_reference_terms;
  out.terms = params.omit_reference_terms ? "omitted" : (params.terms ? params.terms->description() : "none");
  ExactPrecision guard(params.precision + kGuardDigits);
  const Real threshold = pow(Real(10), 3 - static_cast<int>(params.precision));
  for (std::int64_t p = std::max<std::int64_t>(p_start, 20); p <= p_max; ++p) {
    if (!is_prime(p)) continue;
    Real v = eval_rhs(p, params);
    if (!out.rhs_trace.empty() && !(v > out.rhs_trace.back().value)) out.monotone = false;
    out.rhs_trace.push_back({p, v});
    if (v > threshold) {
      out.first_positive_prime = p;
      break;
    }
  }
  return out;
}

void TabulatedTerms::add(const std::string& name, std::int64_t q, std::int64_t p, std::int64_t m, const Real& value) {
  values_[{name, q, p, m}] = value;
}

std::optional<Real> TabulatedTerms::term(const std::string& name, std::int64_t p, std::int64_t q, std::int64_t m) const {
  auto it = values_.find({name, q, p, name == "F2" ? m : 0});
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

std::shared_ptr<TabulatedTerms> parse_tabulated_terms(const std::string& text, const std::string& source) {
  auto out = std::make_shared<TabulatedTerms>(source);
  std::istringstream in(text);
  std::string line;
  bool header = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) f.push_back(cell);
    if (!line.empty() && line.back() == ',') f.emplace_back();
    if (!header) {
      require(f == std::vector<std::string>{"term", "q", "p", "m", "value"}, ErrorKind::SchemaMismatch,
              source + ": expected header term,q,p,m,value");
      header = true;
      continue;
    }
    require(f.size() == 5, ErrorKind::ParseError, source + ":" + std::to_string(lineno) + ": expected 5 fields");
    require(std::find(kReferenceTerms.begin(), kReferenceTerms.end(), f[0]) != kReferenceTerms.end(),
            ErrorKind::SchemaMismatch, source + ":" + std::to_string(lineno) + ": unknown term '" + f[0] + "'");
    const std::int64_t m = f[3].empty() ? 0 : to_int64(parse_integer(f[3]));
    out->add(f[0], to_int64(parse_integer(f[1])), to_int64(parse_integer(f[2])), f[0] == "F2" ? m : 0, Real(f[4]));
  }
  require(header, ErrorKind::SchemaMismatch, source + ": missing header");
  return out;
}

std::shared_ptr<TabulatedTerms> load_tabulated_terms(const std::string& path) {
  return parse_tabulated_terms(read_file(path), path);
}

}  // namespace fsieve
