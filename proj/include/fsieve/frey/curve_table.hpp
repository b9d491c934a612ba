#pragma once

#include "fsieve/ecurve/weierstrass.hpp"

#include <array>
#include <set>
#include <string>
#include <vector>

namespace fsieve {

struct CurveRow {
  std::string label;
  Integer conductor;
  std::array<Integer, 5> a;  // a1, a2, a3, a4, a6
  // Recomputed from a; never read from input.
  Integer c4, c6, disc;

  WeierstrassModel<Rational> model() const {
    return {Rational(a[0]), Rational(a[1]), Rational(a[2]), Rational(a[3]), Rational(a[4])};
  }
};

/// Rows with the set of conductors the table is complete for.
struct CurveTable {
  std::vector<CurveRow> rows;
  std::set<Integer> covered;
  std::string source;

  bool covers(const Integer& conductor) const { return covered.count(conductor) != 0; }
  CurveTable filter_conductor(const Integer& conductor) const;
};

/// Row with invariants filled in from the a-invariants.
CurveRow make_curve_row(std::string label, Integer conductor, std::array<Integer, 5> a);

}  // namespace fsieve
