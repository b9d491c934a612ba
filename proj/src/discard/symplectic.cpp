#include "fsieve/discard/symplectic.hpp"

#include "fsieve/arith/factor.hpp"
#include "fsieve/arith/kronecker.hpp"
#include "fsieve/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace fsieve {

std::string AffineValuation::str() const {
  std::ostringstream os;
  if (alpha != 0) {
    if (alpha == -1) os << "-";
    else if (alpha != 1) os << alpha;
    os << "p";
    if (beta > 0) os << "+" << beta;
    else if (beta < 0) os << beta;
  } else {
    os << beta;
  }
  return os.str();
}

AffineValuation parse_affine_valuation(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '*') s += c;
  require(!s.empty(), ErrorKind::ParseError, "empty valuation");
  AffineValuation v;
  std::size_t i = 0;
  while (i < s.size()) {
    int sgn = 1;
    if (s[i] == '+' || s[i] == '-') {
      sgn = s[i] == '-' ? -1 : 1;
      ++i;
    }
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    const bool has_digits = j > i;
    Integer k = has_digits ? Integer(s.substr(i, j - i)) : Integer(1);
    if (j < s.size() && s[j] == 'p') {
      v.alpha += sgn * k;
      ++j;
    } else {
      require(has_digits, ErrorKind::ParseError, "bad valuation expression '" + text + "'");
      v.beta += sgn * k;
    }
    require(j == s.size() || s[j] == '+' || s[j] == '-', ErrorKind::ParseError, "bad valuation expression '" + text + "'");
    i = j;
  }
  return v;
}

std::string_view to_string(SymplecticSign s) {
  switch (s) {
    case SymplecticSign::plus: return "+1";
    case SymplecticSign::minus: return "-1";
    case SymplecticSign::tied: return "tied";
  }
  return "?";
}

SymplecticCondition symplectic_multiplicative(const AffineValuation& vE, const Integer& vE2, const std::string& source) {
  require(vE.mod_p() != 0, ErrorKind::HypothesisViolated,
          "valuation " + vE.str() + " is divisible by p for every p");
  require(vE2 != 0, ErrorKind::HypothesisViolated, "second curve is not multiplicative (valuation 0)");
  SymplecticCondition c;
  const Integer prod = vE.mod_p() * vE2;
  c.m = squarefree_kernel(prod);
  c.sign = SymplecticSign::tied;
  c.source = source;
  for (const auto& q : prime_divisors(prod)) c.exceptional_primes.insert(q);
  return c;
}

SymplecticCondition symplectic_ramified(std::int64_t ell, int vE_mod3, int vE2_mod3, const RamifiedCertificates& certs,
                                        const std::string& source) {
  require(is_prime(ell) && ell % 3 == 2, ErrorKind::HypothesisViolated,
          "ramified criterion needs a prime l = 2 mod 3, got " + std::to_string(ell));
  require(certs.frey_has_3_torsion && certs.other_has_3_torsion, ErrorKind::HypothesisViolated,
          "ramified criterion needs certified 3-torsion on both curves");
  require(certs.defect_three, ErrorKind::HypothesisViolated, "ramified criterion needs certified defect e = 3");
  SymplecticCondition c;
  c.source = source;
  c.exceptional_primes = {Integer(2), Integer(3)};
  if (mod(vE_mod3 - vE2_mod3, 3) == 0) {
    c.m = 1;
    c.sign = SymplecticSign::plus;
  } else {
    c.m = ell;
    c.sign = SymplecticSign::tied;
  }
  return c;
}

std::optional<int> defect_from_kodaira(const std::string& kodaira) {
  if (kodaira == "IV" || kodaira == "IV*") return 3;
  return std::nullopt;
}

std::string ExclusionResult::str() const {
  std::ostringstream os;
  bool first = true;
  for (auto r : excluded) {
    os << (first ? "" : ",") << r;
    first = false;
  }
  os << " (mod " << modulus << ")";
  return os.str();
}

namespace {

std::vector<std::int64_t> units(std::int64_t M) {
  std::vector<std::int64_t> out;
  for (std::int64_t r = 1; r < M; ++r)
    if (std::gcd(r, M) == 1) out.push_back(r);
  if (M == 1) out.push_back(0);
  return out;
}

std::int64_t totient(std::int64_t M) { return static_cast<std::int64_t>(units(M).size()); }

ExclusionResult finish(std::int64_t M, std::set<std::int64_t> excluded) {
  ExclusionResult r;
  r.modulus = M;
  r.excluded = std::move(excluded);
  r.density = Rational(static_cast<long>(r.excluded.size()), totient(M));
  return reduce_modulus(r);
}

}  // namespace

ExclusionResult reduce_modulus(const ExclusionResult& r) {
  const std::int64_t M = r.modulus;
  const auto all = units(M);
  for (std::int64_t D = 1; D <= M; ++D) {
    if (M % D != 0) continue;
    std::map<std::int64_t, bool> member;
    bool ok = true;
    for (auto u : all) {
      bool in = r.excluded.count(u) != 0;
      auto [it, fresh] = member.emplace(u % D, in);
      if (!fresh && it->second != in) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    ExclusionResult out;
    out.modulus = D;
    for (auto& [k, in] : member)
      if (in) out.excluded.insert(D == 1 ? 0 : k);
    out.density = r.density;
    return out;
  }
  return r;
}

ExclusionResult combine_conditions(const std::vector<SymplecticCondition>& conds) {
  require(!conds.empty(), ErrorKind::InvalidArgument, "no symplectic conditions");
  std::int64_t M = 8;
  std::set<Integer> odd;
  for (const auto& c : conds) {
    require(c.m != 0, ErrorKind::InvalidArgument, "square class 0");
    for (const auto& q : prime_divisors(c.m))
      if (q != 2) odd.insert(q);
  }
  for (const auto& q : odd) M *= to_int64(q);
  std::set<std::int64_t> excluded;
  for (auto r : units(M)) {
    bool plus = true, minus = true;
    for (const auto& c : conds) {
      const int k = kronecker(c.m, Integer(r));
      int t = k;
      if (c.sign == SymplecticSign::minus) t = -k;
      if (t == 1) minus = false;
      else plus = false;
    }
    if (!plus && !minus) excluded.insert(r);
  }
  return finish(M, std::move(excluded));
}

ExclusionResult intersect_exclusions(const std::vector<ExclusionResult>& parts) {
  require(!parts.empty(), ErrorKind::InvalidArgument, "no exclusion sets to intersect");
  std::int64_t L = 1;
  for (const auto& p : parts) L = std::lcm(L, p.modulus);
  std::set<std::int64_t> excluded;
  for (auto r : units(L)) {
    bool all = true;
    for (const auto& p : parts)
      all = all && p.excluded.count(p.modulus == 1 ? 0 : r % p.modulus) != 0;
    if (all) excluded.insert(r);
  }
  return finish(L, std::move(excluded));
}

}  // namespace fsieve
