#include "fsieve/io/case_config.hpp"

#include "fsieve/error.hpp"
#include "fsieve/io/digest.hpp"

#include <json.hpp>

namespace fsieve {
namespace {

using nlohmann::json;

template <class T>
T get(const json& j, const char* key, const std::string& ctx) {
  if (!j.contains(key)) fail(ErrorKind::ParseError, ctx + ": missing '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    fail(ErrorKind::ParseError, ctx + ": field '" + key + "': " + e.what());
  }
}

QuadElem coeff(const json& v, std::int64_t d, const std::string& ctx) {
  require(v.is_array() && v.size() == 2, ErrorKind::ParseError, ctx + ": coefficient must be [x, y] for x + y sqrt(-d)");
  auto text = [&](const json& t) { return t.is_string() ? t.get<std::string>() : t.dump(); };
  return parse_quad_pair(text(v[0]), text(v[1]), d);
}

}  // namespace

QuadElem parse_quad_pair(const std::string& x, const std::string& y, std::int64_t d) {
  return {parse_rational(x), parse_rational(y), d};
}

CaseConfig parse_case_config(const std::string& text, const std::filesystem::path& base_dir) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::ParseError, std::string("case config: ") + e.what());
  }
  CaseConfig c;
  c.base_dir = base_dir;
  c.d = get<std::int64_t>(j, "d", "case config");
  const std::string ctx = "case d=" + std::to_string(c.d);
  require(c.d > 0 && is_squarefree(Integer(c.d)), ErrorKind::InvalidArgument, ctx + ": d must be square-free and positive");
  c.status = j.value("status", std::string("active"));
  require(c.status == "active" || c.status == "unfeasible" || c.status == "solved-elsewhere", ErrorKind::ParseError,
          ctx + ": unknown status '" + c.status + "'");
  if (j.contains("nebentypus")) {
    c.nebentypus_order = get<unsigned>(j["nebentypus"], "order", ctx + " nebentypus");
    c.nebentypus_conductor = get<std::int64_t>(j["nebentypus"], "conductor", ctx + " nebentypus");
  }
  for (const auto& l : j.value("levels", json::array())) {
    LevelSpec s;
    s.level = get<std::int64_t>(l, "level", ctx + " level");
    require(s.level > 0, ErrorKind::InvalidArgument, ctx + ": level must be positive");
    require(s.level % c.nebentypus_conductor == 0, ErrorKind::InvalidArgument,
            ctx + ": nebentypus conductor " + std::to_string(c.nebentypus_conductor) + " does not divide level " +
                std::to_string(s.level));
    s.p_min = l.value("p_min", std::int64_t{2});
    if (l.contains("orbits")) s.orbits = l["orbits"].get<int>();
    if (l.contains("cm_orbits")) s.cm_orbits = l["cm_orbits"].get<int>();
    s.newform_file = l.value("newforms", std::string());
    c.levels.push_back(s);
  }
  c.chi_order = j.value("chi_order", 1u);
  c.ell_list = j.value("ell_list", std::vector<std::int64_t>{});
  if (j.contains("ellenberg")) {
    const auto& e = j["ellenberg"];
    c.ellenberg_q = get<std::int64_t>(e, "q", ctx + " ellenberg");
    if (e.contains("bound") && !e["bound"].is_null()) c.ellenberg_bound = e["bound"].get<std::int64_t>();
    c.ellenberg_source = e.value("source", std::string());
  }
  if (j.contains("multifrey_bound") && !j["multifrey_bound"].is_null())
    c.multifrey_bound = j["multifrey_bound"].get<std::int64_t>();
  for (const auto& cj : j.value("curves", json::array())) {
    CandidateCurve cc;
    cc.name = get<std::string>(cj, "name", ctx + " curve");
    const std::string cctx = ctx + " curve " + cc.name;
    cc.forms = cj.value("forms", std::vector<std::string>{});
    const auto& a = cj.at("ainvs");
    require(a.is_array() && a.size() == 5, ErrorKind::ParseError, cctx + ": ainvs must have 5 entries");
    cc.model = {coeff(a[0], c.d, cctx), coeff(a[1], c.d, cctx), coeff(a[2], c.d, cctx), coeff(a[3], c.d, cctx),
                coeff(a[4], c.d, cctx)};
    require(!is_singular(cc.model), ErrorKind::InvalidArgument, cctx + ": singular model");
    cc.frey_valuations = cj.value("frey_valuations", std::map<std::string, std::string>{});
    for (const auto& r : cj.value("ramified", json::array()))
      cc.ramified.push_back({get<std::int64_t>(r, "ell", cctx), get<int>(r, "frey_mod3", cctx),
                             r.value("defect_three", false)});
    if (cj.contains("local_type_frey")) cc.local_type_frey = cj["local_type_frey"].get<std::string>();
    if (cj.contains("local_type_form")) cc.local_type_form = cj["local_type_form"].get<std::string>();
    cc.torsion_scan_limit = cj.value("torsion_scan_limit", std::int64_t{1000});
    c.curves.push_back(std::move(cc));
  }
  c.known_conclusions = j.value("known_conclusions", std::string());
  return c;
}

CaseConfig load_case_config(const std::filesystem::path& path) {
  return parse_case_config(read_file(path), path.parent_path());
}

}  // namespace fsieve
