#pragma once

// Explicit Ellenberg bound: the first prime p for which the lower bound for
// the p-new part of (a_1, L_chi)_{p^2} is positive.

#include "fsieve/arith/polynomial.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace fsieve {

/// Reference-only terms of the bound by name: bound1, E1, E2, E3 (functions
/// of p, q) and F2 (a function of p, q, m).
class TermProvider {
 public:
  virtual ~TermProvider() = default;
  virtual std::optional<Real> term(const std::string& name, std::int64_t p, std::int64_t q, std::int64_t m) const = 0;
  virtual std::string description() const = 0;
};

/// Terms read from a CSV table: term,q,p,m,value (m empty for non-F2 terms).
class TabulatedTerms : public TermProvider {
 public:
  explicit TabulatedTerms(std::string source) : source_(std::move(source)) {}
  void add(const std::string& name, std::int64_t q, std::int64_t p, std::int64_t m, const Real& value);
  std::optional<Real> term(const std::string& name, std::int64_t p, std::int64_t q, std::int64_t m) const override;
  std::string description() const override { return "table " + source_; }
  std::size_t size() const { return values_.size(); }

 private:
  std::string source_;
  std::map<std::tuple<std::string, std::int64_t, std::int64_t, std::int64_t>, Real> values_;
};

std::shared_ptr<TabulatedTerms> load_tabulated_terms(const std::string& path);
std::shared_ptr<TabulatedTerms> parse_tabulated_terms(const std::string& text, const std::string& source);

extern const std::vector<std::string> kReferenceTerms;  // bound1, E1, E2, E3, F2

struct BoundParams {
  std::int64_t q = 1;
  unsigned precision = 38;
  std::shared_ptr<const TermProvider> terms;
  // Drop the reference-only terms instead of failing. The result is then not
  // a valid bound; reports mark it as partial.
  bool omit_reference_terms = false;

  Real sigma() const;
};

struct BoundPoint {
  std::int64_t p;
  Real value;
};

struct BoundReport {
  std::int64_t q = 1;
  std::optional<std::int64_t> first_positive_prime;
  std::vector<BoundPoint> rhs_trace;
  bool monotone = true;
  bool partial = false;
  std::string terms;
};

/// zeta(3/2) at the current precision by Euler-Maclaurin.
Real zeta_three_halves();
/// sum_{k <= X} k^{-3/2} by direct summation for small X and
/// Euler-Maclaurin otherwise.
Real harmonic_three_halves(std::int64_t X);
/// sum_{k <= p^2} tau(k) / k^{3/2} via the hyperbola identity.
Real divisor_sum_three_halves(std::int64_t p);

/// Right-hand side E_4(p, q) of the bound for |E^(3)|.
Real eval_E4(std::int64_t p, std::int64_t q, unsigned precision);
/// 4 pi exp(-2 pi^2 / (p^2 q log p)).
Real leading_term(std::int64_t p, std::int64_t q, unsigned precision);

/// F(p, q) - F2(p, q, p) / (p^2 - 1) - p F2(p, q, 1) / (p^2 - 1).
Real eval_rhs(std::int64_t p, const BoundParams& params);

/// Iterates primes p >= max(p_start, 20) (so N = p^2 >= 400) up to p_max.
BoundReport find_bound(const BoundParams& params, std::int64_t p_start = 23, std::int64_t p_max = 20000);

/// Euler's phi.
std::int64_t euler_phi(std::int64_t n);

}  // namespace fsieve
