#include "fsieve/frey/conductor.hpp"

#include "fsieve/arith/factor.hpp"
#include "fsieve/error.hpp"

#include <algorithm>

namespace fsieve {

std::vector<int> ConductorProfile::v2_options() const {
  std::vector<int> out(v2_minimal);
  out.insert(out.end(), v2_nonminimal.begin(), v2_nonminimal.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ConductorProfile conductor_profile(std::int64_t d, std::optional<int> a, std::optional<int> b, int v2d, int v3d,
                                   std::optional<int> p) {
  require(d >= 1, ErrorKind::InvalidArgument, "d must be positive");
  require(static_cast<int>(valuation(Integer(d), Integer(2))) == v2d && static_cast<int>(valuation(Integer(d), Integer(3))) == v3d,
          ErrorKind::InvalidArgument, "valuations do not match d");
  for (const auto& pp : factor(Integer(d)))
    if (pp.exponent >= 6) fail(ErrorKind::UnhandledCase, "d is not sixth-power-free");

  ConductorProfile prof;
  for (const auto& q : prime_divisors(Integer(d)))
    if (q > 3) prof.additive_primes.push_back(to_int64(q));

  // At 3.
  if (v3d == 0) {
    bool three_allowed = !b || *b == 0 || (*b == 1 && (!p || *p == 2));
    prof.v3_options = three_allowed ? std::vector<int>{2, 3} : std::vector<int>{2};
    prof.notes[3] = "minimal at 3";
  } else if (v3d == 1 || v3d == 2 || v3d == 4 || v3d == 5) {
    prof.v3_options = {5};
    prof.notes[3] = "minimal at 3";
  } else if (v3d == 3) {
    prof.v3_options = {2, 3};
    prof.notes[3] = "minimal at 3";
  } else {
    fail(ErrorKind::UnhandledCase, "v3(d) = " + std::to_string(v3d));
  }

  // At 2.
  switch (v2d) {
    case 0: {
      prof.v2_minimal = {2, 3, 4, 5, 6};
      // Non-minimality needs a*p >= 6.
      bool nonminimal = !a || (*a > 0 && (!p || *a * *p >= 6));
      if (nonminimal) prof.v2_nonminimal = {0, 1};
      prof.notes[2] = nonminimal ? "minimal, or non-minimal with c4 = -3^2 d B^2, c6 = -3^3 d A" : "minimal at 2";
      break;
    }
    case 1: prof.v2_minimal = {2, 3, 4, 7}; prof.notes[2] = "minimal at 2"; break;
    case 2: prof.v2_minimal = {6}; prof.notes[2] = "minimal at 2"; break;
    case 3:
      prof.v2_minimal = {4, 5};
      prof.v2_nonminimal = {0};
      prof.notes[2] = "minimal, or non-minimal with 2 | B and good reduction at 2";
      break;
    case 4: prof.v2_minimal = {6}; prof.notes[2] = "minimal at 2"; break;
    case 5: prof.v2_nonminimal = {2, 3, 4}; prof.notes[2] = "never minimal at 2"; break;
    default: fail(ErrorKind::UnhandledCase, "v2(d) = " + std::to_string(v2d));
  }
  for (auto q : prof.additive_primes) prof.notes[q] = "additive, conductor exponent 2";
  return prof;
}

std::vector<Integer> admissible_conductors(const ConductorProfile& profile) {
  Integer odd = 1;
  for (auto q : profile.additive_primes) odd *= Integer(q) * q;
  std::vector<Integer> out;
  for (int e2 : profile.v2_options())
    for (int e3 : profile.v3_options) out.push_back(ipow(Integer(2), static_cast<unsigned>(e2)) * ipow(Integer(3), static_cast<unsigned>(e3)) * odd);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace fsieve
