#pragma once

// Symplectic criteria at a prime of multiplicative or ramified reduction,
// evaluated symbolically in the exponent p as residue classes.

#include "fsieve/arith/integer.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace fsieve {

/// alpha * p + beta, the shape in which Frey-side valuations are known.
struct AffineValuation {
  Integer alpha = 0;
  Integer beta = 0;

  /// Residue modulo p for every p not dividing beta.
  const Integer& mod_p() const { return beta; }
  std::string str() const;
};

/// Parses "8", "3p-9", "-p+2", "8-12".
AffineValuation parse_affine_valuation(const std::string& text);

enum class SymplecticSign { plus, minus, tied };
std::string_view to_string(SymplecticSign s);

/// Constraint on the type t in {+1 symplectic, -1 anti-symplectic} of an
/// isomorphism E[p] = E'[p]: t = (m/p) when tied, t = sign (m/p) otherwise.
/// Forced symplectic is {m = 1, plus}.
struct SymplecticCondition {
  Integer m = 1;  // square-free kernel
  SymplecticSign sign = SymplecticSign::tied;
  std::string source;
  // Finitely many p where the criterion does not apply.
  std::set<Integer> exceptional_primes;
};

/// Multiplicative reduction at a prime: (vE vE2 / p) = 1 iff symplectic.
SymplecticCondition symplectic_multiplicative(const AffineValuation& vE, const Integer& vE2, const std::string& source = "");

struct RamifiedCertificates {
  bool frey_has_3_torsion = false;
  bool other_has_3_torsion = false;
  bool defect_three = false;
};

/// Ramified prime l = 2 mod 3 with both curves of defect 3 and a 3-torsion
/// point: symplectic iff (l/p)^r = 1, r = 0 when the discriminant
/// valuations agree mod 3.
SymplecticCondition symplectic_ramified(std::int64_t ell, int vE_mod3, int vE2_mod3, const RamifiedCertificates& certs,
                                        const std::string& source = "");

/// Defect of a Kodaira type where it is a lookup: IV and IV* have e = 3.
/// Advisory only; the ramified criterion still needs certified input.
std::optional<int> defect_from_kodaira(const std::string& kodaira);

struct ExclusionResult {
  std::int64_t modulus = 1;
  std::set<std::int64_t> excluded;  // units mod modulus
  Rational density = 0;

  std::string str() const;
};

/// For one curve: the classes of p where no t satisfies all conditions.
/// Enumerated mod 8 * prod(odd primes in any m), then reduced to the
/// minimal modulus.
ExclusionResult combine_conditions(const std::vector<SymplecticCondition>& conds);

/// Classes excluded for every curve in the list (all candidates discarded).
ExclusionResult intersect_exclusions(const std::vector<ExclusionResult>& parts);

/// Smallest divisor modulus on which the set is well defined.
ExclusionResult reduce_modulus(const ExclusionResult& r);

}  // namespace fsieve
