#pragma once

// Per-form sieve reports and their JSON form. Timestamps live in a separate
// envelope so the report body is reproducible byte for byte.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fsieve {

enum class FormVerdict { cm, eliminated, torsion3, local_type, partial, survives, unresolved, error };
std::string_view to_string(FormVerdict v);
FormVerdict parse_form_verdict(const std::string& s);

struct MazurRecord {
  std::string verdict;
  std::vector<std::string> surviving_primes;
  bool all_primes = false;
  std::map<std::int64_t, std::string> constants;  // ell -> B_ell
  std::optional<std::string> unfactored;
  friend bool operator==(const MazurRecord&, const MazurRecord&) = default;
};

struct Torsion3Record {
  bool conclusive = false;
  std::string ideal;
  std::int64_t norm = 0;
  std::int64_t trace = 0;
  std::string bound;  // fixed 6 decimals
  friend bool operator==(const Torsion3Record&, const Torsion3Record&) = default;
};

struct ConditionRecord {
  std::string m;
  std::string sign;
  std::string source;
  friend bool operator==(const ConditionRecord&, const ConditionRecord&) = default;
};

struct ExclusionRecord {
  std::int64_t modulus = 1;
  std::vector<std::int64_t> classes;
  std::string density;
  friend bool operator==(const ExclusionRecord&, const ExclusionRecord&) = default;
};

struct FormReport {
  std::string label;
  std::int64_t level = 0;
  std::optional<int> ordinal;
  FormVerdict verdict = FormVerdict::survives;
  bool cm = false;
  std::optional<MazurRecord> mazur;
  std::optional<std::string> curve;
  std::optional<bool> curve_has_3_torsion;
  std::optional<Torsion3Record> torsion3;
  std::vector<ConditionRecord> conditions;
  std::optional<ExclusionRecord> exclusion;
  std::optional<bool> local_type_compatible;
  // Discarded for every p > this when verdict is eliminated or torsion3.
  std::optional<std::int64_t> eliminated_above;
  std::vector<std::string> filters;  // filters that produced a witness
  std::string error;
  friend bool operator==(const FormReport&, const FormReport&) = default;
};

struct LevelRecord {
  std::int64_t level = 0;
  int orbits = 0;
  std::optional<int> expected_orbits;
  int cm = 0;
  std::optional<int> expected_cm;
  std::map<std::string, int> verdicts;
  friend bool operator==(const LevelRecord&, const LevelRecord&) = default;
};

struct Statement {
  bool conclusive = false;
  std::optional<std::int64_t> bound;       // p >= bound
  std::optional<ExclusionRecord> classes;  // restriction on p, if any
  std::map<std::string, std::int64_t> bound_sources;
  std::string text;
  friend bool operator==(const Statement&, const Statement&) = default;
};

struct SieveReport {
  std::int64_t d = 0;
  std::string status;
  std::map<std::string, std::string> inputs;  // file -> sha256
  std::vector<LevelRecord> levels;
  std::vector<FormReport> forms;
  Statement statement;
  friend bool operator==(const SieveReport&, const SieveReport&) = default;
};

std::string serialize_report(const SieveReport& r);
SieveReport parse_report(const std::string& json);
/// {"envelope": {...}, "report": ...} with a UTC timestamp and tool version.
std::string wrap_envelope(const std::string& report_json, const std::string& generated_at);
std::string utc_timestamp();
std::string render_text(const SieveReport& r);

}  // namespace fsieve
