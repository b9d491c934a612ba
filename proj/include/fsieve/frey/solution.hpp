#pragma once

#include "fsieve/arith/integer.hpp"

#include <cstdint>

namespace fsieve {

/// A solution of A^2 + d B^6 = C^n.
struct Solution {
  Integer A, B, C;
  std::int64_t d = 1;
  unsigned n = 2;
  bool primitive = false;
  bool nontrivial = false;
};

/// Checks the equation and sets the flags; throws NotASolution.
Solution verify_solution(const Integer& A, const Integer& B, const Integer& C, std::int64_t d, unsigned n);

/// Non-primitive solutions for prime p > 3 from r = u^2 + d v^6:
/// (u r^{(p-1)/2}, v r^{(p-1)/6}, r) when p = 1 mod 6, otherwise
/// (u r^{(5p-1)/2}, v r^{(5p-1)/6}, r^5). Throws DegenerateRadical for r in {-1, 0, 1}.
Solution granville_family(const Integer& u, const Integer& v, std::int64_t d, unsigned p);

}  // namespace fsieve
