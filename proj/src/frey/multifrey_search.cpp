#include "fsieve/frey/multifrey_search.hpp"

#include "fsieve/arith/factor.hpp"
#include "fsieve/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace fsieve {

CurveRow make_curve_row(std::string label, Integer conductor, std::array<Integer, 5> a) {
  CurveRow row{std::move(label), std::move(conductor), std::move(a), 0, 0, 0};
  auto inv = invariants(row.model());
  row.c4 = numerator(inv.c4);
  row.c6 = numerator(inv.c6);
  row.disc = numerator(inv.disc);
  return row;
}

CurveTable CurveTable::filter_conductor(const Integer& conductor) const {
  CurveTable out;
  out.source = source;
  if (covers(conductor)) out.covered.insert(conductor);
  for (const auto& r : rows)
    if (r.conductor == conductor) out.rows.push_back(r);
  return out;
}

std::optional<std::int64_t> MultiFreyResult::bound() const {
  std::optional<std::int64_t> b;
  for (const auto& h : hits)
    for (auto p : h.admissible_p) b = b ? std::max(*b, p) : p;
  return b;
}

namespace {

// (x, y) with c4 = -2^4 3^2 d y^2 and c6 = -2^6 3^3 d x, if integral.
std::optional<std::pair<Integer, Integer>> recover(const Integer& c4, const Integer& c6, std::int64_t d) {
  const Integer k4 = 144 * Integer(d), k6 = 1728 * Integer(d);
  if (c4 >= 0 || c4 % k4 != 0 || c6 % k6 != 0) return std::nullopt;
  Integer y;
  if (!is_square(-c4 / k4, &y)) return std::nullopt;
  return std::make_pair(-c6 / k6, y);
}

}  // namespace

MultiFreyResult multifrey_search(std::int64_t d, const CurveTable& curves) {
  require(d >= 2 && is_squarefree(Integer(d)), ErrorKind::InvalidArgument, "d must be square-free and at least 2");
  auto profile = conductor_profile(d, std::nullopt, std::nullopt, static_cast<int>(valuation(Integer(d), Integer(2))),
                                   static_cast<int>(valuation(Integer(d), Integer(3))));
  MultiFreyResult res;
  res.d = d;
  res.path = "table-search";
  res.conductors = admissible_conductors(profile);
  for (const auto& n : res.conductors)
    if (!curves.covers(n)) fail(ErrorKind::IncompleteTable, "curve table does not cover conductor " + to_string(n));

  std::set<Integer> wanted(res.conductors.begin(), res.conductors.end());
  std::map<std::pair<Integer, Integer>, std::pair<std::tuple<bool, std::string>, MultiFreyHit>> found;
  for (const auto& row : curves.rows) {
    if (!wanted.count(row.conductor)) continue;
    // Conductor exponent at 2 decides which model shape applies.
    int v2 = static_cast<int>(valuation(row.conductor, Integer(2)));
    std::vector<bool> shapes;
    if (std::count(profile.v2_minimal.begin(), profile.v2_minimal.end(), v2)) shapes.push_back(false);
    if (std::count(profile.v2_nonminimal.begin(), profile.v2_nonminimal.end(), v2)) shapes.push_back(true);
    for (bool rescaled : shapes) {
      Integer c4 = rescaled ? 16 * row.c4 : row.c4, c6 = rescaled ? 64 * row.c6 : row.c6;
      auto xy = recover(c4, c6, d);
      if (!xy) continue;
      // A -> -A is the twist by -1, so both signs of c6 are searched and
      // reported with x > 0.
      Integer x = abs(xy->first), y = xy->second;
      if (x == 0 || y == 0 || gcd(x, y) != 1) continue;
      Integer m = x * x + d * ipow(y, 6);
      Integer rest = m;
      unsigned s = 0, t = 0;
      while (rest % 2 == 0) rest /= 2, ++s;
      while (rest % 3 == 0) rest /= 3, ++t;
      if (rest != 1) continue;
      unsigned g = std::gcd(s, t);
      MultiFreyHit hit{row.label, row.conductor, x, y, m, s, t, rescaled, {}};
      for (const auto& q : prime_divisors(Integer(g))) hit.admissible_p.push_back(to_int64(q));
      if (hit.admissible_p.empty()) continue;
      // Keep one row per (x, y): the one with c6 < 0 (x > 0 as read), then
      // the smallest label.
      auto rank = std::make_tuple(xy->first < 0, row.label);
      auto key = std::make_pair(x, y);
      auto it = found.find(key);
      if (it == found.end() || rank < it->second.first) found[key] = {rank, hit};
    }
  }
  for (auto& [key, entry] : found) res.hits.push_back(entry.second);
  std::sort(res.hits.begin(), res.hits.end(), [](const MultiFreyHit& a, const MultiFreyHit& b) {
    return std::tie(a.m, a.x) < std::tie(b.m, b.x);
  });
  return res;
}

bool inertness_shortcut_applies(std::int64_t d) { return mod(d, 8) != 7 && mod(d, 3) != 2; }

MultiFreyResult multifrey_bound(std::int64_t d, const CurveTable& curves) {
  try {
    return multifrey_search(d, curves);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::IncompleteTable || !inertness_shortcut_applies(d)) throw;
    MultiFreyResult res;
    res.d = d;
    res.path = "inertness";
    return res;
  }
}

}  // namespace fsieve
