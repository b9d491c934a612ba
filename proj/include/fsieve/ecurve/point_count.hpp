#pragma once

#include "fsieve/ecurve/weierstrass.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

namespace fsieve {

struct PointCountOptions {
  std::int64_t max_field_order = 1'000'000;
};

/// Naive point counting with a cached quadratic-character table per field.
/// Safe to share between threads.
class PointCounter {
 public:
  explicit PointCounter(PointCountOptions options = {}) : options_(options) {}

  /// #E(F_q), including the point at infinity.
  std::int64_t count(const WeierstrassModel<FqElem>& E);
  /// a_q = q + 1 - #E(F_q).
  std::int64_t trace(const WeierstrassModel<FqElem>& E);

 private:
  using Key = std::tuple<std::int64_t, int, std::int64_t, std::int64_t>;
  const std::vector<std::int8_t>& character_table(const FiniteField& f);

  PointCountOptions options_;
  std::mutex mutex_;
  std::map<Key, std::shared_ptr<const std::vector<std::int8_t>>> tables_;
};

/// Trace of Frobenius a_q; throws SingularModel or FieldTooLarge.
std::int64_t count_points(const WeierstrassModel<FqElem>& E, const PointCountOptions& options = {});

}  // namespace fsieve
