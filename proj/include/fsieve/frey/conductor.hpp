#pragma once

#include "fsieve/arith/integer.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fsieve {

/// Local data of Y^2 = X^3 + 3dB^2 X + 2dA attached to x^2 + d y^6 = (2^a 3^b)^p.
struct ConductorProfile {
  // Conductor exponents at 2 reachable with the given model minimal at 2,
  // and those reachable after the u = 2 change of variables.
  std::vector<int> v2_minimal;
  std::vector<int> v2_nonminimal;
  std::vector<int> v3_options;
  // Primes > 3 dividing d; additive with conductor exponent 2.
  std::vector<std::int64_t> additive_primes;
  std::map<std::int64_t, std::string> notes;

  /// Union of the two 2-adic cases.
  std::vector<int> v2_options() const;
};

/// Transcribes the case list for the conductor of the curve above. The
/// exponents a, b of C and the prime p may be left open, in which case every
/// case compatible with some value is included. v2d, v3d are the valuations
/// of d at 2 and 3. Throws UnhandledCase outside the enumeration.
ConductorProfile conductor_profile(std::int64_t d, std::optional<int> a, std::optional<int> b, int v2d, int v3d,
                                   std::optional<int> p = std::nullopt);

/// Every conductor 2^alpha 3^beta prod(l^2) allowed by the profile, ascending.
std::vector<Integer> admissible_conductors(const ConductorProfile& profile);

}  // namespace fsieve
