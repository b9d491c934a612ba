#include "fsieve/frey/cm.hpp"
#include "fsieve/frey/frey_curve.hpp"
#include "fsieve/frey/multifrey_search.hpp"
#include "fsieve/frey/solution.hpp"
#include "fsieve/io/curve_table.hpp"

#include <doctest.h>

#include <random>

using namespace fsieve;

namespace {

const CurveTable& fixture_table() {
  static const CurveTable t = load_curve_table(std::string(FSIEVE_DATA_DIR) + "/curves/multifrey.csv");
  return t;
}

std::vector<std::int64_t> squarefree_up_to(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d <= n; ++d)
    if (is_squarefree(Integer(d))) out.push_back(d);
  return out;
}

}  // namespace

TEST_CASE("verify_solution: examples") {
  auto s = verify_solution(181, 1, 2, 7, 15);
  CHECK(s.primitive);
  CHECK(s.nontrivial);
  auto t = verify_solution(-1, 0, 1, 11, 5);
  CHECK(!t.nontrivial);
  CHECK(verify_solution(5, 1, 3, 2, 3).primitive);
  CHECK_THROWS_AS(verify_solution(5, 1, 3, 2, 4), Error);
}

TEST_CASE("granville_family") {
  auto s = granville_family(1, 1, 5, 7);
  CHECK(s.A == 216);
  CHECK(s.B == 6);
  CHECK(s.C == 6);
  auto t = granville_family(1, 1, 5, 5);
  CHECK(t.A == ipow(Integer(6), 12));
  CHECK(t.B == ipow(Integer(6), 4));
  CHECK(t.C == ipow(Integer(6), 5));
  CHECK(!t.primitive);
  CHECK_THROWS_AS(granville_family(1, 0, 5, 7), Error);
}

TEST_CASE("frey_curve discriminant closed form") {
  for (std::int64_t d : {1, 2, 5, 6, 7, 11}) {
    for (int A = -6; A <= 6; ++A)
      for (int B = -4; B <= 4; ++B) {
        if (A == 0 && B == 0) continue;
        CHECK(invariants(frey_curve(A, B, d)).disc == frey_discriminant(A, B, d));
      }
  }
  auto j = invariants(frey_curve(1, 0, 7)).j;
  REQUIRE(j);
  CHECK(j->is_rational());
}

TEST_CASE("j_sqrt_part matches the sqrt(-d) coordinate of j") {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> dist(-25, 25);
  for (int i = 0; i < 200; ++i) {
    int A = dist(rng), B = dist(rng);
    std::int64_t d = squarefree_up_to(20)[static_cast<std::size_t>(i) % 13];
    if (A == 0 && B == 0) continue;
    auto inv = invariants(frey_curve(A, B, d));
    if (!inv.j) continue;
    CHECK(inv.j->y == j_sqrt_part(A, B, d));
  }
}

TEST_CASE("multifrey_curve") {
  auto E = multifrey_curve(5, 1, 2);
  auto inv = invariants(E);
  CHECK(E.a4 == 6);
  CHECK(E.a6 == 20);
  CHECK(inv.disc == -186624);
  auto T = invariants(multifrey_curve(1, 0, 7));
  CHECK(T.disc == -1728 * 49);
  CHECK(*T.j == 0);
  for (std::int64_t d : squarefree_up_to(20))
    for (int A = -7; A <= 7; ++A)
      for (int B = -7; B <= 7; ++B) {
        auto I = invariants(multifrey_curve(A, B, d));
        Rational cp = Rational(A * A) + d * rpow(Rational(B), 6);
        CHECK(I.disc == -1728 * d * d * cp);
        CHECK(I.c4 == -144 * d * B * B);
        CHECK(I.c6 == -1728 * d * A);
        if (I.j) CHECK(*I.j * I.disc == I.c4 * I.c4 * I.c4);
      }
}

TEST_CASE("cm_check: examples") {
  CHECK(cm_check(1, 0, 5) == CmClass::trivial);
  CHECK(cm_check(5, 1, 2) == CmClass::special_d2);
  CHECK(cm_check(-5, -1, 2) == CmClass::special_d2);
  CHECK(cm_check(3, 1, 2) == CmClass::none);
}

TEST_CASE("conductor_profile: examples") {
  auto p2 = conductor_profile(2, std::nullopt, std::nullopt, 1, 0);
  CHECK(p2.v2_options() == std::vector<int>{2, 3, 4, 7});
  CHECK(p2.v3_options == std::vector<int>{2, 3});
  CHECK(conductor_profile(4, std::nullopt, std::nullopt, 2, 0).v2_options() == std::vector<int>{6});
  CHECK(conductor_profile(3, std::nullopt, std::nullopt, 0, 1).v3_options == std::vector<int>{5});
  CHECK(conductor_profile(2, std::nullopt, 2, 1, 0).v3_options == std::vector<int>{2});
  CHECK(conductor_profile(7, 0, std::nullopt, 0, 0).v2_nonminimal.empty());
  CHECK(conductor_profile(7, std::nullopt, std::nullopt, 0, 0).v2_options() == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
  CHECK(conductor_profile(35, std::nullopt, std::nullopt, 0, 0).additive_primes == std::vector<std::int64_t>{5, 7});
  CHECK_THROWS_AS(conductor_profile(2 * 64, std::nullopt, std::nullopt, 7, 0), Error);
}

TEST_CASE("multifrey_search: d = 2 and d = 13") {
  auto r2 = multifrey_search(2, fixture_table());
  REQUIRE(r2.hits.size() == 1);
  CHECK(r2.hits[0].x == 5);
  CHECK(r2.hits[0].y == 1);
  CHECK(r2.hits[0].admissible_p == std::vector<std::int64_t>{3});
  CHECK(multifrey_search(13, fixture_table()).impossible());
}

TEST_CASE("multifrey_search: recovered (x, y) reproduce the curve") {
  for (std::int64_t d : {2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17}) {
    auto res = multifrey_search(d, fixture_table());
    MESSAGE("d = " << d << ": " << res.hits.size() << " hits, bound " << (res.bound() ? std::to_string(*res.bound()) : "-"));
    for (const auto& h : res.hits) {
      MESSAGE("  " << h.label << " (" << h.x << "," << h.y << ") m=" << h.m);
      auto inv = invariants(multifrey_curve(h.x, h.y, d));
      for (const auto& row : fixture_table().rows) {
        if (row.label != h.label) continue;
        Integer k4 = h.rescaled ? 16 : 1, k6 = h.rescaled ? 64 : 1;
        CHECK(abs(numerator(inv.c4)) == abs(k4 * row.c4));
        CHECK(abs(numerator(inv.c6)) == abs(k6 * row.c6));
      }
    }
  }
  CHECK_THROWS_AS(multifrey_search(19, fixture_table()), Error);
  CHECK(multifrey_bound(19, fixture_table()).path == "inertness");
}
