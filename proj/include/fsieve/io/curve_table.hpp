#pragma once

#include "fsieve/frey/curve_table.hpp"
#include "fsieve/io/fetch.hpp"

#include <filesystem>
#include <string>

namespace fsieve {

/// CSV with header `label,conductor,a1,a2,a3,a4,a6[,c4,c6,disc]`. Comment
/// lines `# source: ...` and `# covers: N N ...` carry the table's provenance
/// and the conductors it is complete for. Optional invariant columns are
/// checked against the recomputed ones; mismatches raise SchemaMismatch.
CurveTable load_curve_table(const std::filesystem::path& path);
CurveTable parse_curve_table(const std::string& text, const std::string& origin = "<memory>");
std::string serialize_curve_table(const CurveTable& table);

/// Parses a JSON curve-service payload: {"data": [{"lmfdb_label", "conductor", "ainvs"}]}.
CurveTable parse_curve_payload(const std::string& json, const Integer& conductor);

/// Curves of every conductor in [lo, hi] through the cache; one request per
/// conductor.
CurveTable fetch_curves(const Integer& lo, const Integer& hi, CachedFetcher& fetcher, const std::string& endpoint);

/// Sanity checks on a row: nonsingular and every prime of the conductor
/// divides the discriminant.
void validate_row(const CurveRow& row);

}  // namespace fsieve
