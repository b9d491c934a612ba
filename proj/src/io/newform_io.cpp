#include "fsieve/io/newform_io.hpp"

#include "fsieve/error.hpp"
#include "fsieve/io/digest.hpp"

#include <json.hpp>

#include <sstream>

namespace fsieve {
namespace {

using nlohmann::json;

struct Where {
  const std::string& origin;
  int line;
  std::string at(const std::string& field) const {
    return origin + ":" + std::to_string(line) + ": field '" + field + "'";
  }
};

std::string scalar_text(const json& v, const std::string& ctx) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  fail(ErrorKind::ParseError, ctx + ": expected an integer or rational string");
}

NfElem parse_elem(const json& v, const NumberFieldPtr& field, const std::string& ctx) {
  if (!v.is_array()) {
    try {
      return NfElem::rational(field, parse_rational(scalar_text(v, ctx)));
    } catch (const Error& e) {
      fail(ErrorKind::ParseError, ctx + ": " + e.what());
    }
  }
  require(static_cast<int>(v.size()) <= field->degree(), ErrorKind::ParseError,
          ctx + ": " + std::to_string(v.size()) + " coordinates for a field of degree " + std::to_string(field->degree()));
  std::vector<Rational> c;
  for (const auto& x : v) {
    try {
      c.push_back(parse_rational(scalar_text(x, ctx)));
    } catch (const Error& e) {
      fail(ErrorKind::ParseError, ctx + ": " + e.what());
    }
  }
  return NfElem(field, std::move(c));
}

json elem_json(const NfElem& e) {
  json out = json::array();
  for (const auto& c : e.coords) out.push_back(to_string(c));
  return out;
}

std::map<std::int64_t, NfElem> parse_map(const json& obj, const NumberFieldPtr& field, const Where& w, const std::string& name) {
  std::map<std::int64_t, NfElem> out;
  if (obj.is_null()) return out;
  require(obj.is_object(), ErrorKind::ParseError, w.at(name) + ": expected an object keyed by prime");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    std::int64_t ell = 0;
    try {
      ell = to_int64(parse_integer(it.key()));
    } catch (const Error&) {
      fail(ErrorKind::ParseError, w.at(name) + ": key '" + it.key() + "' is not an integer");
    }
    require(is_prime(ell), ErrorKind::ParseError, w.at(name) + ": key " + it.key() + " is not prime");
    out.emplace(ell, parse_elem(it.value(), field, w.at(name + "." + it.key())));
  }
  return out;
}

NewformData parse_record(const json& j, const Where& w) {
  require(j.is_object(), ErrorKind::ParseError, w.origin + ":" + std::to_string(w.line) + ": expected a JSON object");
  NewformData f;
  auto need = [&](const char* k) -> const json& {
    if (!j.contains(k)) fail(ErrorKind::ParseError, w.at(k) + ": missing");
    return j.at(k);
  };
  try {
    f.label = need("label").get<std::string>();
    f.level = need("level").get<std::int64_t>();
    f.char_order = j.value("char_order", 1u);
  } catch (const json::exception& e) {
    fail(ErrorKind::ParseError, w.origin + ":" + std::to_string(w.line) + ": " + e.what());
  }
  std::vector<Integer> poly;
  const json& fp = need("field_poly");
  require(fp.is_array() && fp.size() >= 2, ErrorKind::ParseError, w.at("field_poly") + ": expected a coefficient list");
  for (const auto& c : fp) {
    try {
      poly.push_back(parse_integer(scalar_text(c, w.at("field_poly"))));
    } catch (const Error& e) {
      fail(ErrorKind::ParseError, w.at("field_poly") + ": " + e.what());
    }
  }
  require(poly.back() == 1, ErrorKind::ParseError, w.at("field_poly") + ": polynomial must be monic");
  f.field = make_number_field(std::move(poly));
  f.a_map = parse_map(need("a"), f.field, w, "a");
  f.eps_map = parse_map(j.value("eps", json()), f.field, w, "eps");
  if (j.contains("cm") && !j.at("cm").is_null()) f.cm = j.at("cm").get<std::int64_t>();
  if (j.contains("ordinal") && !j.at("ordinal").is_null()) f.ordinal = j.at("ordinal").get<int>();
  f.provenance = j.value("provenance", std::string());
  try {
    check_newform(f);
  } catch (const Error& e) {
    fail(ErrorKind::InvariantViolation, w.origin + ":" + std::to_string(w.line) + ": " + e.what());
  }
  return f;
}

}  // namespace

std::vector<NewformData> parse_newforms(const std::string& text, const std::string& origin) {
  std::vector<NewformData> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      fail(ErrorKind::ParseError, origin + ":" + std::to_string(lineno) + ": " + e.what());
    }
    out.push_back(parse_record(j, Where{origin, lineno}));
  }
  return out;
}

std::vector<NewformData> load_newforms(const std::filesystem::path& path) {
  return parse_newforms(read_file(path), path.string());
}

std::string serialize_newform(const NewformData& f) {
  json j;
  j["label"] = f.label;
  j["level"] = f.level;
  j["char_order"] = f.char_order;
  json poly = json::array();
  for (const auto& c : f.field->poly) poly.push_back(to_string(c));
  j["field_poly"] = poly;
  json a = json::object(), e = json::object();
  for (const auto& [ell, v] : f.a_map) a[std::to_string(ell)] = elem_json(v);
  for (const auto& [ell, v] : f.eps_map) e[std::to_string(ell)] = elem_json(v);
  j["a"] = a;
  j["eps"] = e;
  j["cm"] = f.cm ? json(*f.cm) : json();
  j["ordinal"] = f.ordinal ? json(*f.ordinal) : json();
  j["provenance"] = f.provenance;
  return j.dump();
}

std::string serialize_newforms(const std::vector<NewformData>& forms) {
  std::string out;
  for (const auto& f : forms) out += serialize_newform(f) + "\n";
  return out;
}

}  // namespace fsieve
