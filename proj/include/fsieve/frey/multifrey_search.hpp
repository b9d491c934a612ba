#pragma once

#include "fsieve/frey/conductor.hpp"
#include "fsieve/frey/curve_table.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fsieve {

struct MultiFreyHit {
  std::string label;
  Integer conductor;
  Integer x, y;          // canonical: x > 0, y > 0
  Integer m;             // x^2 + d y^6 = 2^s 3^t
  unsigned s = 0, t = 0;
  bool rescaled = false;  // matched through the non-minimal model at 2
  std::vector<std::int64_t> admissible_p;
};

struct MultiFreyResult {
  std::int64_t d = 0;
  std::vector<Integer> conductors;
  std::vector<MultiFreyHit> hits;
  // Which argument produced the answer: "table-search" or "inertness".
  std::string path;

  bool impossible() const { return hits.empty(); }
  /// Largest admissible p over all hits; nullopt for "impossible".
  std::optional<std::int64_t> bound() const;
};

/// Searches the table for curves whose invariants come from a solution of
/// x^2 + d y^6 = (2^a 3^b)^p through c4 = -2^4 3^2 d y^2, c6 = -2^6 3^3 d x.
/// Throws IncompleteTable if an admissible conductor is not covered.
MultiFreyResult multifrey_search(std::int64_t d, const CurveTable& curves);

/// Whether 2 and 3 are both excluded from C by their splitting in K, which
/// rules out C supported on {2, 3}: d != 7 mod 8 and d != 2 mod 3.
bool inertness_shortcut_applies(std::int64_t d);

/// Table search, falling back to the inertness argument when the table does
/// not cover the conductors and the argument applies.
MultiFreyResult multifrey_bound(std::int64_t d, const CurveTable& curves);

}  // namespace fsieve
