#include "fsieve/io/curve_table.hpp"

#include "fsieve/arith/factor.hpp"
#include "fsieve/error.hpp"
#include "fsieve/io/digest.hpp"

#include <json.hpp>

#include <sstream>

namespace fsieve {
namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.pop_back();
  std::size_t b = s.find_first_not_of(' ');
  return b == std::string::npos ? "" : s.substr(b);
}

}  // namespace

void validate_row(const CurveRow& row) {
  if (row.disc == 0) fail(ErrorKind::SchemaMismatch, row.label + ": singular a-invariants");
  if (1728 * row.disc != row.c4 * row.c4 * row.c4 - row.c6 * row.c6)
    fail(ErrorKind::SchemaMismatch, row.label + ": 1728 disc != c4^3 - c6^2");
  if (row.conductor <= 0) fail(ErrorKind::SchemaMismatch, row.label + ": non-positive conductor");
  for (const auto& q : prime_divisors(row.conductor))
    if (row.disc % q != 0) fail(ErrorKind::SchemaMismatch, row.label + ": conductor prime " + to_string(q) + " does not divide the discriminant");
}

CurveTable parse_curve_table(const std::string& text, const std::string& origin) {
  CurveTable table;
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> header;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty()) continue;
    auto where = origin + ":" + std::to_string(lineno);
    if (line[0] == '#') {
      std::string body = trim(line.substr(1));
      if (body.rfind("source:", 0) == 0) table.source = trim(body.substr(7));
      if (body.rfind("covers:", 0) == 0) {
        std::istringstream ns(body.substr(7));
        std::string tok;
        while (ns >> tok) table.covered.insert(parse_integer(tok));
      }
      continue;
    }
    auto fields = split(line, ',');
    if (header.empty()) {
      header = fields;
      if (header.size() < 7 || header[0] != "label" || header[1] != "conductor")
        fail(ErrorKind::ParseError, where + ": expected header label,conductor,a1,a2,a3,a4,a6");
      continue;
    }
    if (fields.size() != header.size()) fail(ErrorKind::ParseError, where + ": expected " + std::to_string(header.size()) + " fields");
    std::array<Integer, 5> a;
    Integer conductor;
    try {
      conductor = parse_integer(fields[1]);
      for (int i = 0; i < 5; ++i) a[static_cast<std::size_t>(i)] = parse_integer(fields[static_cast<std::size_t>(2 + i)]);
    } catch (const Error& e) {
      fail(ErrorKind::ParseError, where + ": " + e.what());
    }
    CurveRow row = make_curve_row(fields[0], conductor, a);
    for (std::size_t i = 7; i < header.size(); ++i) {
      Integer stored = parse_integer(fields[i]);
      const Integer* mine = header[i] == "c4" ? &row.c4 : header[i] == "c6" ? &row.c6 : header[i] == "disc" ? &row.disc : nullptr;
      if (mine && *mine != stored) fail(ErrorKind::SchemaMismatch, where + ": stored " + header[i] + " disagrees with the a-invariants");
    }
    validate_row(row);
    table.rows.push_back(std::move(row));
  }
  if (header.empty()) fail(ErrorKind::ParseError, origin + ": no header line");
  return table;
}

CurveTable load_curve_table(const std::filesystem::path& path) { return parse_curve_table(read_file(path), path.string()); }

std::string serialize_curve_table(const CurveTable& table) {
  std::ostringstream out;
  if (!table.source.empty()) out << "# source: " << table.source << "\n";
  if (!table.covered.empty()) {
    out << "# covers:";
    for (const auto& n : table.covered) out << ' ' << n;
    out << "\n";
  }
  out << "label,conductor,a1,a2,a3,a4,a6,c4,c6,disc\n";
  for (const auto& r : table.rows) {
    out << r.label << ',' << r.conductor;
    for (const auto& x : r.a) out << ',' << x;
    out << ',' << r.c4 << ',' << r.c6 << ',' << r.disc << "\n";
  }
  return out.str();
}

CurveTable parse_curve_payload(const std::string& text, const Integer& conductor) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    fail(ErrorKind::SchemaMismatch, std::string("curve payload is not JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("data") || !j["data"].is_array())
    fail(ErrorKind::SchemaMismatch, "curve payload has no data array");
  CurveTable table;
  table.covered.insert(conductor);
  for (const auto& rec : j["data"]) {
    if (!rec.contains("lmfdb_label") || !rec.contains("ainvs") || !rec["ainvs"].is_array() || rec["ainvs"].size() != 5)
      fail(ErrorKind::SchemaMismatch, "curve record lacks lmfdb_label or ainvs");
    std::array<Integer, 5> a;
    for (std::size_t i = 0; i < 5; ++i) {
      const auto& v = rec["ainvs"][i];
      a[i] = v.is_string() ? parse_integer(v.get<std::string>()) : Integer(v.get<long long>());
    }
    Integer n = rec.contains("conductor") ? Integer(rec["conductor"].get<long long>()) : conductor;
    if (n != conductor) fail(ErrorKind::SchemaMismatch, "record conductor " + to_string(n) + " outside request");
    CurveRow row = make_curve_row(rec["lmfdb_label"].get<std::string>(), n, a);
    validate_row(row);
    table.rows.push_back(std::move(row));
  }
  return table;
}

CurveTable fetch_curves(const Integer& lo, const Integer& hi, CachedFetcher& fetcher, const std::string& endpoint) {
  CurveTable out;
  out.source = endpoint;
  for (Integer n = lo; n <= hi; ++n) {
    std::string url = endpoint + "?conductor=" + to_string(n) + "&_format=json&_fields=lmfdb_label,conductor,ainvs";
    CurveTable part = parse_curve_payload(fetcher.get("curves-" + to_string(n), url), n);
    out.rows.insert(out.rows.end(), part.rows.begin(), part.rows.end());
    out.covered.insert(n);
  }
  return out;
}

}  // namespace fsieve
