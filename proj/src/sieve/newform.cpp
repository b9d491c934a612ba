#include "fsieve/sieve/newform.hpp"

#include "fsieve/error.hpp"

#include <cmath>

namespace fsieve {

const NfElem& NewformData::a(std::int64_t ell) const {
  auto it = a_map.find(ell);
  if (it == a_map.end()) fail(ErrorKind::MissingEigenvalue, label + ": no a_" + std::to_string(ell));
  return it->second;
}

NfElem NewformData::eps(std::int64_t ell) const {
  auto it = eps_map.find(ell);
  if (it != eps_map.end()) return it->second;
  if (char_order == 1) return NfElem::rational(field, 1);
  fail(ErrorKind::MissingEigenvalue, label + ": no eps(" + std::to_string(ell) + ")");
}

void check_newform(const NewformData& f) {
  require(f.field != nullptr, ErrorKind::InvariantViolation, f.label + ": missing coefficient field");
  require(f.level >= 1 && f.char_order >= 1, ErrorKind::InvariantViolation, f.label + ": bad level or character order");
  for (const auto& [ell, e] : f.eps_map) {
    require(*e.field == *f.field, ErrorKind::InvariantViolation, f.label + ": eps value outside the coefficient field");
    if (ell % f.level == 0 || f.level % ell == 0) {
      if (e.is_zero()) continue;
    }
    if (pow(e, f.char_order) != NfElem::rational(f.field, 1))
      fail(ErrorKind::InvariantViolation, f.label + ": eps(" + std::to_string(ell) + ") is not a root of unity of order dividing " +
                                              std::to_string(f.char_order));
  }
  for (const auto& [ell, a] : f.a_map) {
    require(*a.field == *f.field, ErrorKind::InvariantViolation, f.label + ": eigenvalue outside the coefficient field");
    const double bound = 2.0 * std::sqrt(static_cast<double>(ell)) + 1e-6;
    for (const auto& z : embeddings_double(a))
      if (std::abs(z) > bound)
        fail(ErrorKind::InvariantViolation, f.label + ": a_" + std::to_string(ell) + " violates the Hecke bound");
  }
}

}  // namespace fsieve
