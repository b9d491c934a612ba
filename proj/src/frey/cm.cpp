#include "fsieve/frey/cm.hpp"

#include "fsieve/error.hpp"

namespace fsieve {

std::string_view to_string(CmClass c) {
  switch (c) {
    case CmClass::trivial: return "trivial-CM";
    case CmClass::special_d2: return "special-d2-CM";
    case CmClass::none: return "no-CM";
    case CmClass::excluded: return "excluded";
  }
  return "unknown";
}

Rational j_sqrt_part(const Integer& A, const Integer& B, std::int64_t d) {
  Integer B3 = B * B * B, B6 = B3 * B3;
  Integer cp = A * A + d * B6;
  require(cp != 0, ErrorKind::InvalidArgument, "A^2 + d B^6 = 0");
  Integer num = 864 * A * B3 * (2 * A * A - 25 * d * B6) * (16 * A * A - 11 * d * B6);
  return Rational(num, cp * cp * cp);
}

CmClass cm_check(const Integer& A, const Integer& B, std::int64_t d) {
  if (B == 0) return CmClass::trivial;
  if (A == 0) return CmClass::excluded;
  Integer B6 = ipow(B, 6);
  if ((2 * A * A - 25 * d * B6) * (16 * A * A - 11 * d * B6) != 0) return CmClass::none;
  // 2A^2 = 25 d B^6 or 16A^2 = 11 d B^6 with gcd(A, B) = 1 and d square-free.
  if (d == 2 && abs(A) == 5 && abs(B) == 1) return CmClass::special_d2;
  require(gcd(A, B) != 1, ErrorKind::InvariantViolation, "unexpected primitive CM pair");
  return CmClass::excluded;
}

}  // namespace fsieve
