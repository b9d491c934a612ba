#pragma once

#include "fsieve/arith/integer.hpp"

#include <cstdint>
#include <string_view>

namespace fsieve {

enum class CmClass {
  trivial,     // B = 0
  special_d2,  // (d, |A|, |B|) = (2, 5, 1), CM by Z[sqrt(-2)]
  none,
  excluded,    // A = 0: never primitive for square-free d > 1
};

std::string_view to_string(CmClass c);

/// Coefficient of sqrt(-d) in j(E_{A,B}):
/// 864 A B^3 (2A^2 - 25 d B^6)(16A^2 - 11 d B^6) / (A^2 + d B^6)^3.
Rational j_sqrt_part(const Integer& A, const Integer& B, std::int64_t d);

/// Classifies the vanishing of j_sqrt_part, i.e. when E_{A,B} can have CM.
CmClass cm_check(const Integer& A, const Integer& B, std::int64_t d);

}  // namespace fsieve
