#include "fsieve/sieve/mazur.hpp"

#include "fsieve/arith/factor.hpp"
#include "fsieve/error.hpp"

#include <algorithm>
#include <future>

namespace fsieve {

void check_sieve_config(const SieveConfig& cfg, std::int64_t level) {
  require(cfg.d > 0, ErrorKind::InvalidArgument, "d must be positive");
  require(cfg.chi_order >= 1, ErrorKind::InvalidArgument, "chi_order must be positive");
  for (std::int64_t ell : cfg.ell_list) {
    const std::string tag = "sieve prime " + std::to_string(ell);
    require(is_prime(ell), ErrorKind::InvalidArgument, tag + " is not prime");
    require((6 * cfg.d) % ell != 0 && level % ell != 0, ErrorKind::InvalidArgument, tag + " divides 6 d N");
    require(splitting_type(ell, cfg.d).kind != SplitKind::ramified, ErrorKind::InvalidArgument, tag + " ramifies");
  }
}

NfElem base_change_coeff(const NewformData& f, const PrimeSplitting& P) {
  require(P.kind != SplitKind::ramified, ErrorKind::InvalidArgument, "base change at a ramified prime");
  const NfElem& a = f.a(P.ell);
  if (P.kind == SplitKind::split) return a;
  return a * a - Rational(2 * P.ell) * f.eps(P.ell);
}

std::vector<LocalSolution> enumerate_local_solutions(std::int64_t d, const PrimeSplitting& P) {
  const FiniteField F = PrimeIdeal{P, false}.residue_field();
  const std::int64_t q = F.order();
  const FqElem dd(F, mod(d, F.p));
  std::vector<LocalSolution> out;
  out.reserve(static_cast<std::size_t>(q * q - 1));
  for (std::int64_t i = 0; i < q; ++i)
    for (std::int64_t j = 0; j < q; ++j) {
      if (i == 0 && j == 0) continue;
      FqElem A = FqElem::from_index(F, i), B = FqElem::from_index(F, j);
      FqElem B3 = B * B * B;
      out.push_back({A, B, A * A + dd * B3 * B3});
    }
  return out;
}

WeierstrassModel<FqElem> local_frey_curve(std::int64_t d, const PrimeIdeal& P, const FqElem& A, const FqElem& B) {
  const FiniteField F = P.residue_field();
  const FqElem w = reduce_quad(QuadElem::sqrt_minus_d(d), P);
  const FqElem zero = FqElem::zero(F);
  FqElem a1 = 6 * (B * w);
  FqElem a3 = (-4 * mod(d, F.p)) * (A + B * B * B * w);
  return {a1, zero, a3, zero, zero};
}

LocalTraces local_traces(std::int64_t d, const PrimeIdeal& P, PointCounter& counter) {
  const FiniteField F = P.residue_field();
  const std::int64_t q = F.order();
  const FqElem dd(F, mod(d, F.p));
  LocalTraces out;
  // B != 0: scale to B = 1.
  const FqElem one = FqElem::one(F);
  for (std::int64_t i = 0; i < q; ++i) {
    FqElem A = FqElem::from_index(F, i);
    if ((A * A + dd).is_zero()) {
      out.has_bad = true;
      continue;
    }
    out.traces.insert(counter.trace(local_frey_curve(d, P, A, one)));
  }
  // B = 0: one representative per coset of the cubes in F*.
  std::vector<FqElem> cubes;
  std::vector<bool> is_cube(static_cast<std::size_t>(q), false);
  for (std::int64_t i = 1; i < q; ++i) {
    FqElem t = FqElem::from_index(F, i);
    auto k = (t * t * t).index();
    if (!is_cube[static_cast<std::size_t>(k)]) {
      is_cube[static_cast<std::size_t>(k)] = true;
      cubes.push_back(FqElem::from_index(F, k));
    }
  }
  std::vector<bool> seen(static_cast<std::size_t>(q), false);
  const FqElem zero = FqElem::zero(F);
  for (std::int64_t i = 1; i < q; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    FqElem A = FqElem::from_index(F, i);
    for (const auto& c : cubes) seen[static_cast<std::size_t>((A * c).index())] = true;
    out.traces.insert(counter.trace(local_frey_curve(d, P, A, zero)));
  }
  return out;
}

namespace {

Integer integral_norm(const NfElem& z, const std::string& label) {
  Rational n = nf_norm(z);
  require(denominator(n) == 1, ErrorKind::InvariantViolation, label + ": eigenvalue data is not integral");
  return abs(numerator(n));
}

}  // namespace

SieveConstant sieve_constant(const NewformData& f, const SieveConfig& cfg, std::int64_t ell, PointCounter& counter) {
  const unsigned n = cfg.chi_order;
  SieveConstant out;
  out.ell = ell;
  out.value = ell;
  bool bad = false;
  for (const PrimeIdeal& P : primes_above(ell, cfg.d)) {
    require(P.splitting.kind != SplitKind::ramified, ErrorKind::InvalidArgument,
            "sieve prime " + std::to_string(ell) + " ramifies");
    const NfElem lhs = pow(base_change_coeff(f, P.splitting), n);
    LocalTraces lt = local_traces(cfg.d, P, counter);
    bad = bad || lt.has_bad;
    for (std::int64_t a : lt.traces) {
      Integer v = integral_norm(lhs - NfElem::rational(f.field, rpow(Rational(a), n)), f.label);
      out.factors.push_back({P.label(), a, v});
      if (v == 0) ++out.zero_factors;
      out.value *= v;
    }
  }
  if (bad) {
    NfElem a = f.a(ell);
    Rational l1 = Rational((ell + 1) * (ell + 1));
    Integer v = integral_norm(f.eps(ell) * a * a - NfElem::rational(f.field, l1), f.label);
    out.factors.push_back({"bad", std::nullopt, v});
    if (v == 0) ++out.zero_factors;
    out.value *= v;
  }
  return out;
}

Integer sieve_constant(const NewformData& f, const SieveConfig& cfg, std::int64_t ell) {
  PointCounter counter;
  return sieve_constant(f, cfg, ell, counter).value;
}

std::string_view to_string(SieveVerdict v) {
  switch (v) {
    case SieveVerdict::eliminated: return "eliminated";
    case SieveVerdict::survives: return "survives";
    case SieveVerdict::unresolved: return "unresolved";
  }
  return "unknown";
}

SieveResult combine_constants(std::vector<SieveConstant> constants, std::int64_t p_min) {
  SieveResult out;
  out.witnesses = std::move(constants);
  Integer g = 0;
  for (const auto& c : out.witnesses)
    if (c.value != 0) g = gcd(g, c.value);
  if (g == 0) {
    out.all_primes = true;
    out.verdict = SieveVerdict::survives;
    return out;
  }
  try {
    if (g != 1) out.surviving_primes = prime_divisors(g);
  } catch (const FactorizationIncomplete& e) {
    for (const auto& pp : e.partial()) out.surviving_primes.push_back(pp.prime);
    out.unfactored = e.cofactor();
    out.verdict = SieveVerdict::unresolved;
    out.eliminated_above = 0;
    return out;
  }
  Integer top = out.surviving_primes.empty() ? Integer(0) : out.surviving_primes.back();
  if (top <= p_min) {
    out.verdict = SieveVerdict::eliminated;
    out.eliminated_above = p_min;
  } else {
    out.verdict = SieveVerdict::survives;
    out.eliminated_above = fits_int64(top) ? to_int64(top) : 0;
  }
  return out;
}

SieveResult sieve_survivors(const NewformData& f, const SieveConfig& cfg, const SieveOptions& options) {
  require(!cfg.ell_list.empty(), ErrorKind::InvalidArgument, "empty sieve prime list");
  check_sieve_config(cfg, f.level);
  PointCounter counter(options.point_count);
  std::vector<SieveConstant> constants(cfg.ell_list.size());
  const std::size_t workers = std::max(1u, options.workers);
  for (std::size_t start = 0; start < cfg.ell_list.size(); start += workers) {
    std::vector<std::future<SieveConstant>> batch;
    const std::size_t stop = std::min(cfg.ell_list.size(), start + workers);
    for (std::size_t i = start; i < stop; ++i)
      batch.push_back(std::async(workers == 1 ? std::launch::deferred : std::launch::async,
                                 [&, i] { return sieve_constant(f, cfg, cfg.ell_list[i], counter); }));
    for (std::size_t i = start; i < stop; ++i) constants[i] = batch[i - start].get();
  }
  SieveResult out = combine_constants(std::move(constants), cfg.p_min);
  out.label = f.label;
  out.cm = f.cm.has_value();
  if (out.cm && out.verdict == SieveVerdict::eliminated) out.verdict = SieveVerdict::survives;
  return out;
}

}  // namespace fsieve
