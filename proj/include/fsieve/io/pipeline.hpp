#pragma once

#include "fsieve/discard/symplectic.hpp"
#include "fsieve/frey/curve_table.hpp"
#include "fsieve/io/case_config.hpp"
#include "fsieve/io/report.hpp"
#include "fsieve/sieve/mazur.hpp"

#include <map>
#include <vector>

namespace fsieve {

struct PipelineOptions {
  unsigned workers = 1;
  PointCountOptions point_count;
};

/// Newforms per level, in file order.
using NewformSet = std::map<std::int64_t, std::vector<NewformData>>;

/// Loads every level's newform file named in the case config and records
/// input digests.
NewformSet load_case_newforms(const CaseConfig& c, std::map<std::string, std::string>* digests = nullptr);

/// Symplectic conditions between the Frey curve and a candidate curve: one
/// per multiplicative prime in frey_valuations and one per ramified entry.
std::vector<SymplecticCondition> curve_conditions(const CaseConfig& c, const CandidateCurve& cc);

/// Per form: CM flag, Mazur sieve, then for survivors with an attached
/// candidate curve the 3-torsion test, symplectic conditions and local
/// types. A failure in one form is recorded and does not stop the run.
FormReport run_form(const CaseConfig& c, const LevelSpec& level, const NewformData& f);

SieveReport run_pipeline(const CaseConfig& c, const NewformSet& forms, const PipelineOptions& options = {});

/// The final statement from the per-form reports.
Statement final_statement(const CaseConfig& c, const std::vector<FormReport>& forms);

}  // namespace fsieve
