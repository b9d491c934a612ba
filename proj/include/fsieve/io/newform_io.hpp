#pragma once

// Newform files: JSON Lines, one Galois orbit per line.
//
//   {"label": "294.a", "level": 294, "char_order": 2, "field_poly": ["-3", "0", "1"],
//    "a": {"11": ["1", "-1/2"]}, "eps": {"11": ["-1", "0"]}, "cm": null,
//    "ordinal": 1, "provenance": "..."}
//
// Polynomials list integer coefficients from the constant term up; field
// elements are rational coordinate vectors on the power basis.

#include "fsieve/sieve/newform.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace fsieve {

std::vector<NewformData> parse_newforms(const std::string& text, const std::string& origin = "<memory>");
std::vector<NewformData> load_newforms(const std::filesystem::path& path);
std::string serialize_newform(const NewformData& f);
std::string serialize_newforms(const std::vector<NewformData>& forms);

}  // namespace fsieve
