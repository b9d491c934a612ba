#include "fsieve/error.hpp"
#include "fsieve/io/case_config.hpp"
#include "fsieve/io/curve_table.hpp"
#include "fsieve/io/digest.hpp"
#include "fsieve/io/fetch.hpp"
#include "fsieve/io/newform_io.hpp"
#include "fsieve/io/pipeline.hpp"
#include "fsieve/io/report.hpp"

#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <functional>

using namespace fsieve;

namespace {

const std::string kData = FSIEVE_DATA_DIR;

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidArgument;
}

class CountingTransport : public Transport {
 public:
  std::string get(const std::string&) override {
    ++calls;
    return R"({"data": [{"lmfdb_label": "24.a5", "conductor": 24, "ainvs": [0, -1, 0, -4, 4]}]})";
  }
  int calls = 0;
};

std::filesystem::path scratch_dir(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("fsieve-test-" + name);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("newform files round-trip") {
  const auto forms = load_newforms(kData + "/newforms/d7/2646.jsonl");
  REQUIRE(forms.size() == 6);
  const auto again = parse_newforms(serialize_newforms(forms));
  REQUIRE(again.size() == forms.size());
  for (std::size_t i = 0; i < forms.size(); ++i) {
    CHECK(serialize_newform(again[i]) == serialize_newform(forms[i]));
    CHECK(again[i].ordinal == forms[i].ordinal);
    check_newform(again[i]);
  }
}

TEST_CASE("newform with a bad character value is rejected") {
  auto f = load_newforms(kData + "/newforms/d7/294.jsonl").front();
  REQUIRE(!f.eps_map.empty());
  f.eps_map.begin()->second = NfElem::rational(f.field, 2);
  CHECK(kind_of([&] { check_newform(f); }) == ErrorKind::InvariantViolation);
}

TEST_CASE("newform parse errors") {
  CHECK(kind_of([] { parse_newforms("{not json"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_newforms(R"({"label": "x", "level": 1, "field_poly": ["0", "1"], "a": {"5": "abc"}})"); }) ==
        ErrorKind::ParseError);
  CHECK(parse_newforms("").empty());
}

TEST_CASE("curve table: invariants and corrupted rows") {
  const CurveTable t = load_curve_table(kData + "/curves/multifrey.csv");
  const auto rows = t.filter_conductor(1152).rows;
  auto it = std::find_if(rows.begin(), rows.end(), [](const CurveRow& r) { return r.label == "1152f1"; });
  REQUIRE(it != rows.end());
  CHECK(it->c4 == -288);
  CHECK(it->c6 == -17280);
  CHECK(it->disc == -186624);
  for (const auto& r : rows) CHECK(r.conductor == 1152);
  CHECK(t.covers(1152));
  CHECK(!t.covers(1153));

  const std::string good = "label,conductor,a1,a2,a3,a4,a6,c4,c6,disc\n1152f1,1152,0,0,0,6,20,-288,-17280,-186624\n";
  CHECK(parse_curve_table(good).rows.size() == 1);
  const std::string bad = "label,conductor,a1,a2,a3,a4,a6,c4,c6,disc\n1152f1,1152,0,0,0,6,20,-287,-17280,-186624\n";
  CHECK(kind_of([&] { parse_curve_table(bad); }) == ErrorKind::SchemaMismatch);

  const CurveTable back = parse_curve_table(serialize_curve_table(t));
  CHECK(back.rows.size() == t.rows.size());
  CHECK(back.covered == t.covered);
}

TEST_CASE("offline fetch never calls the transport") {
  CountingTransport net;
  const auto dir = scratch_dir("offline");
  CachedFetcher offline({dir, "https://example.invalid/api", true}, &net);
  CHECK(kind_of([&] { offline.get("curves-24", "https://example.invalid/api?conductor=24"); }) ==
        ErrorKind::NetworkUnavailable);
  CHECK(net.calls == 0);

  CachedFetcher online({dir, "https://example.invalid/api", false}, &net);
  const auto t = fetch_curves(24, 24, online, "https://example.invalid/api");
  CHECK(net.calls == 1);
  CHECK(t.rows.size() == 1);
  // Now served from the cache, also offline.
  CHECK(fetch_curves(24, 24, offline, "https://example.invalid/api").rows.size() == 1);
  CHECK(net.calls == 1);
  std::filesystem::remove_all(dir);
}

TEST_CASE("digests and atomic writes") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  const auto dir = scratch_dir("atomic");
  write_file_atomic(dir / "x.json", "{}");
  CHECK(read_file(dir / "x.json") == "{}");
  CHECK(sha256_file(dir / "x.json") == sha256_hex("{}"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("case config parse errors") {
  CHECK(kind_of([] { parse_case_config("[]"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_case_config(R"({"d": 4, "status": "active"})"); }) != ErrorKind::IncompleteTable);
  const std::string text = read_file(kData + "/cases/d19.json");
  const CaseConfig c = parse_case_config(text, kData + "/cases");
  CHECK(c.d == 19);
  CHECK(c.ellenberg_bound == 1031);
  std::string broken = text;
  broken.replace(broken.find("\"status\": \"active\""), 18, "\"status\": \"maybe\"");
  CHECK(kind_of([&] { parse_case_config(broken); }) == ErrorKind::ParseError);
}

TEST_CASE("bundled d = 19 data has the expected orbit counts") {
  const CaseConfig c = load_case_config(kData + "/cases/d19.json");
  const NewformSet forms = load_case_newforms(c);
  REQUIRE(forms.count(4332) == 1);
  REQUIRE(forms.count(38988) == 1);
  CHECK(forms.at(4332).size() == 10);
  CHECK(forms.at(38988).size() == 18);
}

TEST_CASE("pipeline on d = 13: every non-CM orbit is eliminated") {
  const CaseConfig c = load_case_config(kData + "/cases/d13.json");
  const SieveReport r = run_pipeline(c, load_case_newforms(c));
  int cm = 0, eliminated = 0;
  for (const auto& f : r.forms) {
    if (f.verdict == FormVerdict::cm) ++cm;
    else if (f.verdict == FormVerdict::eliminated) ++eliminated;
  }
  CHECK(cm == 17);
  CHECK(cm + eliminated == static_cast<int>(r.forms.size()));
  CHECK(r.statement.conclusive);
  CHECK(r.statement.bound == 3491);
}

TEST_CASE("reports round-trip and are deterministic") {
  const CaseConfig c = load_case_config(kData + "/cases/d7.json");
  const NewformSet forms = load_case_newforms(c);
  const SieveReport a = run_pipeline(c, forms);
  const SieveReport b = run_pipeline(c, forms, {4, {}});
  CHECK(serialize_report(a) == serialize_report(b));
  const SieveReport back = parse_report(serialize_report(a));
  CHECK(back == a);
  CHECK(render_text(a).find("337") != std::string::npos);
}

TEST_CASE("empty newform set") {
  const CaseConfig c = load_case_config(kData + "/cases/d7.json");
  const SieveReport r = run_pipeline(c, {});
  CHECK(r.forms.empty());
  CHECK(!r.statement.conclusive);
}

TEST_CASE("final statement keeps the largest bound per source") {
  const CaseConfig c = load_case_config(kData + "/cases/d7.json");
  FormReport low, high;
  low.label = "x.1";
  low.verdict = FormVerdict::eliminated;
  low.eliminated_above = 7;
  high = low;
  high.label = "x.2";
  high.eliminated_above = 400;
  const Statement s = final_statement(c, {high, low});
  CHECK(s.bound_sources.at("eliminated") == 401);
  CHECK(s.bound == 401);
}
