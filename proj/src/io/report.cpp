#include "fsieve/io/report.hpp"

#include "fsieve/error.hpp"

#include <json.hpp>

#include <chrono>
#include <ctime>
#include <sstream>

namespace fsieve {
namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

constexpr const char* kToolVersion = "fsieve 0.1.0";

const std::vector<std::pair<FormVerdict, const char*>> kVerdicts = {
    {FormVerdict::cm, "cm"},           {FormVerdict::eliminated, "eliminated"}, {FormVerdict::torsion3, "torsion3"},
    {FormVerdict::local_type, "local-type"}, {FormVerdict::partial, "partial"},  {FormVerdict::survives, "survives"},
    {FormVerdict::unresolved, "unresolved"}, {FormVerdict::error, "error"}};

template <class T>
ordered opt(const std::optional<T>& v) {
  return v ? ordered(*v) : ordered();
}

ordered exclusion_json(const ExclusionRecord& e) {
  return ordered{{"modulus", e.modulus}, {"classes", e.classes}, {"density", e.density}};
}

ExclusionRecord exclusion_from(const json& j) {
  return {j.at("modulus").get<std::int64_t>(), j.at("classes").get<std::vector<std::int64_t>>(),
          j.at("density").get<std::string>()};
}

template <class T>
std::optional<T> opt_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

std::string_view to_string(FormVerdict v) {
  for (auto& [k, s] : kVerdicts)
    if (k == v) return s;
  return "?";
}

FormVerdict parse_form_verdict(const std::string& s) {
  for (auto& [k, name] : kVerdicts)
    if (s == name) return k;
  fail(ErrorKind::ParseError, "unknown verdict '" + s + "'");
}

std::string serialize_report(const SieveReport& r) {
  ordered j;
  j["d"] = r.d;
  j["status"] = r.status;
  j["inputs"] = r.inputs;
  ordered levels = ordered::array();
  for (const auto& l : r.levels)
    levels.push_back({{"level", l.level},
                      {"orbits", l.orbits},
                      {"expected_orbits", opt(l.expected_orbits)},
                      {"cm", l.cm},
                      {"expected_cm", opt(l.expected_cm)},
                      {"verdicts", l.verdicts}});
  j["levels"] = levels;
  ordered forms = ordered::array();
  for (const auto& f : r.forms) {
    ordered o;
    o["label"] = f.label;
    o["level"] = f.level;
    o["ordinal"] = opt(f.ordinal);
    o["verdict"] = std::string(to_string(f.verdict));
    o["cm"] = f.cm;
    if (f.mazur) {
      ordered consts = ordered::object();
      for (const auto& [ell, v] : f.mazur->constants) consts[std::to_string(ell)] = v;
      o["mazur"] = {{"verdict", f.mazur->verdict},
                    {"surviving_primes", f.mazur->surviving_primes},
                    {"all_primes", f.mazur->all_primes},
                    {"constants", consts},
                    {"unfactored", opt(f.mazur->unfactored)}};
    } else {
      o["mazur"] = nullptr;
    }
    o["curve"] = opt(f.curve);
    o["curve_has_3_torsion"] = opt(f.curve_has_3_torsion);
    if (f.torsion3)
      o["torsion3"] = {{"conclusive", f.torsion3->conclusive}, {"ideal", f.torsion3->ideal},
                       {"norm", f.torsion3->norm},             {"trace", f.torsion3->trace},
                       {"bound", f.torsion3->bound}};
    else
      o["torsion3"] = nullptr;
    ordered conds = ordered::array();
    for (const auto& c : f.conditions) conds.push_back({{"m", c.m}, {"sign", c.sign}, {"source", c.source}});
    o["conditions"] = conds;
    o["exclusion"] = f.exclusion ? exclusion_json(*f.exclusion) : ordered();
    o["local_type_compatible"] = opt(f.local_type_compatible);
    o["eliminated_above"] = opt(f.eliminated_above);
    o["filters"] = f.filters;
    o["error"] = f.error;
    forms.push_back(o);
  }
  j["forms"] = forms;
  j["statement"] = {{"conclusive", r.statement.conclusive},
                    {"bound", opt(r.statement.bound)},
                    {"classes", r.statement.classes ? exclusion_json(*r.statement.classes) : ordered()},
                    {"bound_sources", r.statement.bound_sources},
                    {"text", r.statement.text}};
  return j.dump(2) + "\n";
}

SieveReport parse_report(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::ParseError, std::string("report: ") + e.what());
  }
  if (j.contains("report")) j = j.at("report");
  SieveReport r;
  try {
    r.d = j.at("d").get<std::int64_t>();
    r.status = j.at("status").get<std::string>();
    r.inputs = j.at("inputs").get<std::map<std::string, std::string>>();
    for (const auto& l : j.at("levels"))
      r.levels.push_back({l.at("level").get<std::int64_t>(), l.at("orbits").get<int>(), opt_from<int>(l, "expected_orbits"),
                          l.at("cm").get<int>(), opt_from<int>(l, "expected_cm"),
                          l.at("verdicts").get<std::map<std::string, int>>()});
    for (const auto& o : j.at("forms")) {
      FormReport f;
      f.label = o.at("label").get<std::string>();
      f.level = o.at("level").get<std::int64_t>();
      f.ordinal = opt_from<int>(o, "ordinal");
      f.verdict = parse_form_verdict(o.at("verdict").get<std::string>());
      f.cm = o.at("cm").get<bool>();
      if (!o.at("mazur").is_null()) {
        const auto& m = o.at("mazur");
        MazurRecord mr;
        mr.verdict = m.at("verdict").get<std::string>();
        mr.surviving_primes = m.at("surviving_primes").get<std::vector<std::string>>();
        mr.all_primes = m.at("all_primes").get<bool>();
        for (auto it = m.at("constants").begin(); it != m.at("constants").end(); ++it)
          mr.constants[std::stoll(it.key())] = it.value().get<std::string>();
        mr.unfactored = opt_from<std::string>(m, "unfactored");
        f.mazur = mr;
      }
      f.curve = opt_from<std::string>(o, "curve");
      f.curve_has_3_torsion = opt_from<bool>(o, "curve_has_3_torsion");
      if (!o.at("torsion3").is_null()) {
        const auto& t = o.at("torsion3");
        f.torsion3 = Torsion3Record{t.at("conclusive").get<bool>(), t.at("ideal").get<std::string>(),
                                    t.at("norm").get<std::int64_t>(), t.at("trace").get<std::int64_t>(),
                                    t.at("bound").get<std::string>()};
      }
      for (const auto& c : o.at("conditions"))
        f.conditions.push_back({c.at("m").get<std::string>(), c.at("sign").get<std::string>(), c.at("source").get<std::string>()});
      if (!o.at("exclusion").is_null()) f.exclusion = exclusion_from(o.at("exclusion"));
      f.local_type_compatible = opt_from<bool>(o, "local_type_compatible");
      f.eliminated_above = opt_from<std::int64_t>(o, "eliminated_above");
      f.filters = o.at("filters").get<std::vector<std::string>>();
      f.error = o.at("error").get<std::string>();
      r.forms.push_back(std::move(f));
    }
    const auto& s = j.at("statement");
    r.statement.conclusive = s.at("conclusive").get<bool>();
    r.statement.bound = opt_from<std::int64_t>(s, "bound");
    if (!s.at("classes").is_null()) r.statement.classes = exclusion_from(s.at("classes"));
    r.statement.bound_sources = s.at("bound_sources").get<std::map<std::string, std::int64_t>>();
    r.statement.text = s.at("text").get<std::string>();
  } catch (const json::exception& e) {
    fail(ErrorKind::SchemaMismatch, std::string("report: ") + e.what());
  }
  return r;
}

std::string utc_timestamp() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string wrap_envelope(const std::string& report_json, const std::string& generated_at) {
  ordered j;
  j["envelope"] = {{"generated_at", generated_at}, {"tool", kToolVersion}};
  j["report"] = ordered::parse(report_json);
  return j.dump(2) + "\n";
}

std::string render_text(const SieveReport& r) {
  std::ostringstream os;
  os << "d = " << r.d << " (" << r.status << ")\n";
  for (const auto& l : r.levels) {
    os << "level " << l.level << ": " << l.orbits << " orbits";
    if (l.expected_orbits) os << " (expected " << *l.expected_orbits << ")";
    os << ", " << l.cm << " CM";
    for (const auto& [v, n] : l.verdicts) os << ", " << n << " " << v;
    os << "\n";
  }
  for (const auto& f : r.forms) {
    os << "  " << f.label << ": " << to_string(f.verdict);
    if (f.eliminated_above) os << " for p > " << *f.eliminated_above;
    if (f.exclusion && !f.exclusion->classes.empty()) {
      os << ", excluded p = ";
      for (std::size_t i = 0; i < f.exclusion->classes.size(); ++i) os << (i ? "," : "") << f.exclusion->classes[i];
      os << " (mod " << f.exclusion->modulus << ")";
    }
    if (f.verdict == FormVerdict::survives && f.mazur && !f.mazur->all_primes && !f.mazur->surviving_primes.empty()) {
      os << ", survivors";
      for (const auto& p : f.mazur->surviving_primes) os << " " << p;
    }
    if (!f.error.empty()) os << " (" << f.error << ")";
    os << "\n";
  }
  os << r.statement.text << "\n";
  return os.str();
}

}  // namespace fsieve
