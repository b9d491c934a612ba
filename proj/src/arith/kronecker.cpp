#include "fsieve/arith/kronecker.hpp"

#include "fsieve/error.hpp"

namespace fsieve {

int kronecker(const Integer& a_in, const Integer& n_in) {
  require(n_in != 0, ErrorKind::InvalidArgument, "kronecker symbol with n = 0");
  Integer a = a_in, n = n_in;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  // Strip the 2-part of n: (a/2) = 0 for even a, else +-1 by a mod 8.
  unsigned v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  if (v > 0) {
    if (a % 2 == 0) return 0;
    int r8 = static_cast<int>(mod(a, Integer(8)));
    if ((v & 1u) && (r8 == 3 || r8 == 5)) result = -result;
  }
  // Jacobi symbol (a/n) for odd positive n.
  a = mod(a, n);
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      int r8 = static_cast<int>(n % 8);
      if (r8 == 3 || r8 == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a = a % n;
  }
  return n == 1 ? result : 0;
}

int kronecker(std::int64_t a, std::int64_t n) { return kronecker(Integer(a), Integer(n)); }

}  // namespace fsieve
