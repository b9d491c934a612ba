#pragma once

#include "fsieve/arith/quadratic.hpp"
#include "fsieve/ecurve/weierstrass.hpp"

#include <cstdint>
#include <string>

namespace fsieve {

struct Torsion3Result {
  bool conclusive = false;
  std::string ideal;
  std::int64_t ell = 0;
  std::int64_t norm = 0;
  std::int64_t trace = 0;
  double bound = 0;  // 4 sqrt(N q)
  std::int64_t scanned = 0;
};

/// First prime q of K (by norm, not above 3, good reduction, integral
/// model) with a_q != 1 + N q (mod 3). Then E and any curve whose
/// mod-p representation has a 3-torsion-type trace cannot be congruent for
/// p > 4 sqrt(N q). Inconclusive when the scan up to norm_limit finds none.
Torsion3Result torsion3_test(const WeierstrassModel<QuadElem>& E, std::int64_t norm_limit);

/// Local type labels: principal-series(n), steinberg, supercuspidal(n).
struct LocalType {
  enum class Family { principal_series, steinberg, supercuspidal } family;
  int order = 1;
};
LocalType parse_local_type(const std::string& label);
std::string to_string(const LocalType& t);

/// For p > 3 congruent forms share family and character order.
bool local_type_compatible(const std::string& type_f, const std::string& type_g, std::int64_t p);

}  // namespace fsieve
