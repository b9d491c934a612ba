#pragma once

#include "fsieve/arith/number_field.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace fsieve {

/// Hecke eigenvalue data of one Galois orbit of newforms in S_2(Gamma_0(N), eps).
struct NewformData {
  std::string label;
  std::int64_t level = 1;
  unsigned char_order = 1;
  NumberFieldPtr field;
  std::map<std::int64_t, NfElem> a_map;
  std::map<std::int64_t, NfElem> eps_map;
  std::optional<std::int64_t> cm;
  // Where the data came from and the position in the source's ordering.
  std::string provenance;
  std::optional<int> ordinal;

  const NfElem& a(std::int64_t ell) const;
  /// eps(ell); 1 when the character is trivial and no value is stored.
  NfElem eps(std::int64_t ell) const;
  bool has(std::int64_t ell) const { return a_map.count(ell) != 0; }
};

/// Checks that every eps value is a root of unity of order dividing
/// char_order and that every a_ell satisfies |sigma(a_ell)| <= 2 sqrt(ell)
/// (tolerance 1e-6) in all complex embeddings. Throws InvariantViolation.
void check_newform(const NewformData& f);

}  // namespace fsieve
