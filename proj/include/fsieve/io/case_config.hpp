#pragma once

// Per-d case files: levels of the newform spaces, character data, sieve
// primes, the candidate curves attached to surviving forms, and the
// external inputs (Ellenberg bound) the final statement depends on.

#include "fsieve/arith/quadratic.hpp"
#include "fsieve/ecurve/weierstrass.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fsieve {

struct LevelSpec {
  std::int64_t level = 1;
  std::int64_t p_min = 2;                 // Mazur verdict threshold for this space
  std::optional<int> orbits;              // expected number of Galois orbits
  std::optional<int> cm_orbits;
  std::string newform_file;               // relative to the config file
};

struct CandidateCurve {
  std::string name;
  std::vector<std::string> forms;         // form labels this curve is attached to
  WeierstrassModel<QuadElem> model;
  // Frey-side discriminant valuations at primes of multiplicative
  // reduction, keyed by prime label ("p2a"), as affine expressions in p.
  std::map<std::string, std::string> frey_valuations;
  // Ramified symplectic data: prime label -> Frey valuation mod 3.
  struct Ramified {
    std::int64_t ell;
    int frey_mod3;
    bool defect_three;
  };
  std::vector<Ramified> ramified;
  std::optional<std::string> local_type_frey, local_type_form;
  std::int64_t torsion_scan_limit = 1000;
};

struct CaseConfig {
  std::int64_t d = 1;
  std::string status = "active";          // active | unfeasible | solved-elsewhere
  std::vector<LevelSpec> levels;
  unsigned nebentypus_order = 1;
  std::int64_t nebentypus_conductor = 1;
  unsigned chi_order = 1;
  std::vector<std::int64_t> ell_list;
  std::optional<std::int64_t> ellenberg_q;
  std::optional<std::int64_t> ellenberg_bound;
  std::string ellenberg_source;
  std::optional<std::int64_t> multifrey_bound;
  std::vector<CandidateCurve> curves;
  std::string known_conclusions;
  std::filesystem::path base_dir;
};

CaseConfig parse_case_config(const std::string& text, const std::filesystem::path& base_dir = {});
CaseConfig load_case_config(const std::filesystem::path& path);

/// Element x + y sqrt(-d) from a pair of rational strings.
QuadElem parse_quad_pair(const std::string& x, const std::string& y, std::int64_t d);

}  // namespace fsieve
