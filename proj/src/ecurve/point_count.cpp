#include "fsieve/ecurve/point_count.hpp"

#include "fsieve/error.hpp"

namespace fsieve {

const std::vector<std::int8_t>& PointCounter::character_table(const FiniteField& f) {
  Key key{f.p, f.degree, f.c0, f.c1};
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = tables_.find(key);
  if (it != tables_.end()) return *it->second;
  const std::int64_t q = f.order();
  auto table = std::make_shared<std::vector<std::int8_t>>(static_cast<std::size_t>(q), std::int8_t(-1));
  (*table)[0] = 0;
  for (std::int64_t i = 1; i < q; ++i) {
    FqElem x = FqElem::from_index(f, i);
    (*table)[static_cast<std::size_t>((x * x).index())] = 1;
  }
  return *tables_.emplace(key, std::move(table)).first->second;
}

std::int64_t PointCounter::count(const WeierstrassModel<FqElem>& E) {
  const FiniteField& f = E.a1.field;
  const std::int64_t q = f.order();
  require(q <= options_.max_field_order, ErrorKind::FieldTooLarge,
          "field of order " + std::to_string(q) + " exceeds the configured limit");
  require(!is_singular(E), ErrorKind::SingularModel, "point count on a singular model " + to_string(E));
  std::int64_t n = 1;
  if (f.p == 2) {
    for (std::int64_t i = 0; i < q; ++i) {
      FqElem x = FqElem::from_index(f, i);
      FqElem rhs = x * x * x + E.a2 * x * x + E.a4 * x + E.a6;
      FqElem lin = E.a1 * x + E.a3;
      for (std::int64_t k = 0; k < q; ++k) {
        FqElem y = FqElem::from_index(f, k);
        if ((y * y + lin * y) == rhs) ++n;
      }
    }
    return n;
  }
  const auto& chi = character_table(f);
  auto inv = invariants(E);
  // Completing the square: (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6.
  const FqElem four = FqElem(f, 4), two = FqElem(f, 2);
  for (std::int64_t i = 0; i < q; ++i) {
    FqElem x = FqElem::from_index(f, i);
    FqElem r = ((four * x + inv.b2) * x + two * inv.b4) * x + inv.b6;
    n += 1 + chi[static_cast<std::size_t>(r.index())];
  }
  return n;
}

std::int64_t PointCounter::trace(const WeierstrassModel<FqElem>& E) { return E.a1.field.order() + 1 - count(E); }

std::int64_t count_points(const WeierstrassModel<FqElem>& E, const PointCountOptions& options) {
  PointCounter counter(options);
  return counter.trace(E);
}

}  // namespace fsieve
