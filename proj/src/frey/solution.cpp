#include "fsieve/frey/solution.hpp"

#include "fsieve/arith/quadratic.hpp"
#include "fsieve/error.hpp"

namespace fsieve {

Solution verify_solution(const Integer& A, const Integer& B, const Integer& C, std::int64_t d, unsigned n) {
  require(d >= 1 && is_squarefree(Integer(d)), ErrorKind::InvalidArgument, "d must be square-free and positive");
  require(n >= 2, ErrorKind::InvalidArgument, "exponent must be at least 2");
  Integer lhs = A * A + d * ipow(B, 6);
  if (lhs != ipow(C, n))
    fail(ErrorKind::NotASolution, to_string(A) + "^2 + " + std::to_string(d) + "*" + to_string(B) + "^6 != " + to_string(C) +
                                      "^" + std::to_string(n));
  Solution s{A, B, C, d, n, false, false};
  s.primitive = gcd(gcd(A, B), C) == 1;
  s.nontrivial = A != 0 && B != 0 && C != 0;
  return s;
}

Solution granville_family(const Integer& u, const Integer& v, std::int64_t d, unsigned p) {
  require(p > 3 && is_prime(p), ErrorKind::InvalidArgument, "p must be a prime > 3");
  Integer r = u * u + d * ipow(v, 6);
  if (r == -1 || r == 0 || r == 1) fail(ErrorKind::DegenerateRadical, "u^2 + d v^6 = " + to_string(r));
  if (p % 6 == 1) return verify_solution(u * ipow(r, (p - 1) / 2), v * ipow(r, (p - 1) / 6), r, d, p);
  return verify_solution(u * ipow(r, (5 * p - 1) / 2), v * ipow(r, (5 * p - 1) / 6), ipow(r, 5), d, p);
}

}  // namespace fsieve
