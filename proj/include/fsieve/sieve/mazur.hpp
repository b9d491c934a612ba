#pragma once

// Mazur's trick: compare traces of the reduced Frey curves with the
// base-changed eigenvalues of a newform and collect the primes p for which
// the congruences can hold.

#include "fsieve/arith/quadratic.hpp"
#include "fsieve/ecurve/point_count.hpp"
#include "fsieve/sieve/newform.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace fsieve {

struct SieveConfig {
  std::int64_t d = 1;
  unsigned chi_order = 1;
  std::vector<std::int64_t> ell_list;
  std::int64_t p_min = 2;
};

struct SieveOptions {
  unsigned workers = 1;
  PointCountOptions point_count;
};

/// Checks that every ell is prime, unramified in K and prime to 6 d level.
void check_sieve_config(const SieveConfig& cfg, std::int64_t level);

/// a_l(f^BC): a_ell if N(l) = ell, a_ell^2 - 2 ell eps(ell) if N(l) = ell^2.
NfElem base_change_coeff(const NewformData& f, const PrimeSplitting& P);

struct LocalSolution {
  FqElem A, B, C;
};

/// Every (A, B) != (0, 0) over the residue field, with C = A^2 + d B^6.
std::vector<LocalSolution> enumerate_local_solutions(std::int64_t d, const PrimeSplitting& P);

/// Reduction of the Frey curve at (A, B) modulo the prime.
WeierstrassModel<FqElem> local_frey_curve(std::int64_t d, const PrimeIdeal& P, const FqElem& A, const FqElem& B);

/// The distinct traces a_l(E_{A,B}) over all local data with C != 0, and
/// whether some datum has C = 0. Uses that E_{t^3 A, t B} and E_{A, B} are
/// isomorphic, so one representative per scaling orbit suffices.
struct LocalTraces {
  std::set<std::int64_t> traces;
  bool has_bad = false;
};
LocalTraces local_traces(std::int64_t d, const PrimeIdeal& P, PointCounter& counter);

struct SieveFactor {
  std::string ideal;          // prime label, or "bad" for the level-lowering factor
  std::optional<std::int64_t> trace;
  Integer value;
};

struct SieveConstant {
  std::int64_t ell = 0;
  Integer value;               // B_ell(f); 0 when ell eliminates nothing
  std::vector<SieveFactor> factors;
  std::size_t zero_factors = 0;
};

/// B_ell(f). A zero factor means some local datum satisfies the congruence
/// for every p, so the whole constant is 0.
SieveConstant sieve_constant(const NewformData& f, const SieveConfig& cfg, std::int64_t ell, PointCounter& counter);
Integer sieve_constant(const NewformData& f, const SieveConfig& cfg, std::int64_t ell);

enum class SieveVerdict { eliminated, survives, unresolved };
std::string_view to_string(SieveVerdict v);

struct SieveResult {
  std::string label;
  SieveVerdict verdict = SieveVerdict::survives;
  // Empty together with all_primes = true when every B_ell vanished.
  std::vector<Integer> surviving_primes;
  bool all_primes = false;
  bool cm = false;
  std::vector<SieveConstant> witnesses;
  std::optional<Integer> unfactored;
  /// Largest surviving prime, or the configured p_min.
  std::int64_t eliminated_above = 0;
};

/// Survivors are the primes dividing every nonzero B_ell. The verdict is
/// eliminated when all of them are <= p_min. CM forms are flagged and never
/// reported as eliminated.
SieveResult sieve_survivors(const NewformData& f, const SieveConfig& cfg, const SieveOptions& options = {});

/// Survivor extraction from precomputed constants.
SieveResult combine_constants(std::vector<SieveConstant> constants, std::int64_t p_min);

}  // namespace fsieve
