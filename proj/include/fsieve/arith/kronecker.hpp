#pragma once

#include "fsieve/arith/integer.hpp"

#include <cstdint>

namespace fsieve {

/// Kronecker symbol (a/n), n != 0. Completely multiplicative in both
/// arguments; reduces to the Legendre symbol for odd prime n.
int kronecker(const Integer& a, const Integer& n);
int kronecker(std::int64_t a, std::int64_t n);

}  // namespace fsieve
