#pragma once

#include "fsieve/arith/integer.hpp"
#include "fsieve/error.hpp"

#include <cstdint>
#include <vector>

namespace fsieve {

struct PrimePower {
  Integer prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

using Factorization = std::vector<PrimePower>;

/// Process-wide default seed for Pollard-Brent; factorizations do not
/// depend on it, only the work spent finding them.
std::uint64_t default_factor_seed();
void set_default_factor_seed(std::uint64_t seed);

struct FactorOptions {
  std::uint64_t trial_bound = 1u << 16;
  // Pollard-Brent iterations allowed per composite cofactor.
  std::uint64_t rho_budget = 1u << 22;
  std::uint64_t seed = default_factor_seed();
};

class FactorizationIncomplete : public Error {
 public:
  FactorizationIncomplete(Factorization partial, Integer cofactor)
      : Error(ErrorKind::FactorizationIncomplete,
              "composite cofactor " + to_string(cofactor) + " left unsplit"),
        partial_(std::move(partial)),
        cofactor_(std::move(cofactor)) {}

  const Factorization& partial() const noexcept { return partial_; }
  const Integer& cofactor() const noexcept { return cofactor_; }

 private:
  Factorization partial_;
  Integer cofactor_;
};

bool is_probable_prime(const Integer& n);

/// Complete factorization of |n| as sorted prime powers. Trial division,
/// then Pollard-Brent on each remaining composite cofactor. Throws
/// FactorizationIncomplete when a cofactor resists the configured effort.
Factorization factor(const Integer& n, const FactorOptions& options = {});

std::vector<Integer> prime_divisors(const Integer& n, const FactorOptions& options = {});

}  // namespace fsieve
