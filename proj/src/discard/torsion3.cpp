#include "fsieve/discard/torsion3.hpp"

#include "fsieve/ecurve/point_count.hpp"
#include "fsieve/error.hpp"

#include <cmath>
#include <regex>

namespace fsieve {

Torsion3Result torsion3_test(const WeierstrassModel<QuadElem>& E, std::int64_t norm_limit) {
  const std::int64_t d = E.a1.d;
  PointCounter counter;
  Torsion3Result out;
  for (const PrimeIdeal& P : prime_ideals_up_to(d, norm_limit)) {
    if (P.ell() == 3) continue;
    WeierstrassModel<FqElem> Ered;
    try {
      Ered = reduce_model(E, P);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NonIntegralReduction) continue;
      throw;
    }
    if (is_singular(Ered)) continue;
    ++out.scanned;
    const std::int64_t a = counter.trace(Ered);
    if (mod(a - 1 - P.norm(), 3) != 0) {
      out.conclusive = true;
      out.ideal = P.label();
      out.ell = P.ell();
      out.norm = P.norm();
      out.trace = a;
      out.bound = 4.0 * std::sqrt(static_cast<double>(P.norm()));
      return out;
    }
  }
  return out;
}

LocalType parse_local_type(const std::string& label) {
  static const std::regex re(R"(^\s*(principal-series|supercuspidal)\s*\(\s*(\d+)\s*\)\s*$|^\s*(steinberg)\s*$)");
  std::smatch m;
  require(std::regex_match(label, m, re), ErrorKind::ParseError, "unknown local type '" + label + "'");
  if (m[3].matched) return {LocalType::Family::steinberg, 1};
  const int n = std::stoi(m[2].str());
  require(n == 1 || n == 2 || n == 3 || n == 4 || n == 6, ErrorKind::InvalidArgument,
          "local type order must be one of 1, 2, 3, 4, 6: '" + label + "'");
  return {m[1].str() == "principal-series" ? LocalType::Family::principal_series : LocalType::Family::supercuspidal, n};
}

std::string to_string(const LocalType& t) {
  switch (t.family) {
    case LocalType::Family::steinberg: return "steinberg";
    case LocalType::Family::principal_series: return "principal-series(" + std::to_string(t.order) + ")";
    case LocalType::Family::supercuspidal: return "supercuspidal(" + std::to_string(t.order) + ")";
  }
  return "?";
}

bool local_type_compatible(const std::string& type_f, const std::string& type_g, std::int64_t p) {
  require(p > 3, ErrorKind::HypothesisViolated, "local types are only preserved for p > 3");
  LocalType a = parse_local_type(type_f), b = parse_local_type(type_g);
  return a.family == b.family && a.order == b.order;
}

}  // namespace fsieve
