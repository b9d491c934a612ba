// Command-line front end.
//
// Exit codes: 0 ok, 2 invalid input, 3 unresolved (incomplete factorization,
// exhausted scan, inconclusive statement), 4 missing external data.

#include "fsieve/arith/factor.hpp"
#include "fsieve/discard/symplectic.hpp"
#include "fsieve/discard/torsion3.hpp"
#include "fsieve/ecurve/torsion.hpp"
#include "fsieve/ellenberg/bound.hpp"
#include "fsieve/error.hpp"
#include "fsieve/frey/cm.hpp"
#include "fsieve/frey/frey_curve.hpp"
#include "fsieve/frey/multifrey_search.hpp"
#include "fsieve/frey/solution.hpp"
#include "fsieve/io/case_config.hpp"
#include "fsieve/io/curve_table.hpp"
#include "fsieve/io/digest.hpp"
#include "fsieve/io/fetch.hpp"
#include "fsieve/io/newform_io.hpp"
#include "fsieve/io/pipeline.hpp"
#include "fsieve/io/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace fsieve;
using ojson = nlohmann::ordered_json;

namespace {

struct Globals {
  std::string config;
  bool offline = false;
  std::string cache_dir;
  unsigned precision = 38;
  std::string output = "text";
  std::uint64_t seed = 0x5eed;
};

void print_text(const ojson& j, const std::string& indent = "", const std::string& first = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& lead = it == j.begin() && !first.empty() ? first : indent;
    if (it->is_object()) {
      std::cout << lead << it.key() << ":\n";
      print_text(*it, indent + "  ");
    } else if (it->is_array() && !it->empty() && it->front().is_object()) {
      std::cout << lead << it.key() << ":\n";
      for (const auto& e : *it) print_text(e, indent + "    ", indent + "  - ");
    } else {
      std::cout << lead << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
    }
  }
}

void emit(const Globals& g, const ojson& j) {
  if (g.output == "json") std::cout << j.dump(2) << "\n";
  else print_text(j);
}

ojson model_json(const WeierstrassModel<QuadElem>& E) {
  const auto inv = invariants(E);
  return {{"ainvs", {to_string(E.a1), to_string(E.a2), to_string(E.a3), to_string(E.a4), to_string(E.a6)}},
          {"c4", to_string(inv.c4)},
          {"c6", to_string(inv.c6)},
          {"disc", to_string(inv.disc)}};
}

ojson model_json(const WeierstrassModel<Rational>& E) {
  const auto inv = invariants(E);
  return {{"ainvs", {to_string(E.a1), to_string(E.a2), to_string(E.a3), to_string(E.a4), to_string(E.a6)}},
          {"c4", to_string(inv.c4)},
          {"c6", to_string(inv.c6)},
          {"disc", to_string(inv.disc)}};
}

ojson solution_json(const Solution& s) {
  return {{"A", to_string(s.A)}, {"B", to_string(s.B)}, {"C", to_string(s.C)}, {"d", s.d},
          {"n", s.n},            {"primitive", s.primitive}, {"nontrivial", s.nontrivial}};
}

CaseConfig need_config(const Globals& g) {
  require(!g.config.empty(), ErrorKind::InvalidArgument, "this command needs --config <case file>");
  return load_case_config(g.config);
}

// "x:y,x:y,..." with five entries, each x + y sqrt(-d); ":y" may be omitted.
WeierstrassModel<QuadElem> parse_ainvs(const std::string& text, std::int64_t d) {
  std::vector<QuadElem> c;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    c.push_back(colon == std::string::npos ? parse_quad_pair(item, "0", d)
                                           : parse_quad_pair(item.substr(0, colon), item.substr(colon + 1), d));
  }
  require(c.size() == 5, ErrorKind::ParseError, "--ainvs needs five coefficients");
  return {c[0], c[1], c[2], c[3], c[4]};
}

const CandidateCurve& find_curve(const CaseConfig& c, const std::string& name) {
  for (const auto& cc : c.curves)
    if (cc.name == name || std::find(cc.forms.begin(), cc.forms.end(), name) != cc.forms.end()) return cc;
  fail(ErrorKind::InvalidArgument, "no curve or form '" + name + "' in the case config");
}

ojson exclusion_json(const ExclusionResult& e) {
  return {{"modulus", e.modulus},
          {"classes", std::vector<std::int64_t>(e.excluded.begin(), e.excluded.end())},
          {"density", to_string(e.density)},
          {"text", e.str()}};
}

int run(CLI::App& app, int argc, char** argv) {
  Globals g;
  app.add_option("--config", g.config, "case config file");
  app.add_flag("--offline", g.offline, "never touch the network");
  app.add_option("--cache-dir", g.cache_dir, "cache directory for fetched data");
  app.add_option("--precision", g.precision, "decimal digits for real arithmetic")->check(CLI::Range(38u, 2000u));
  app.add_option("--output", g.output, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", g.seed, "seed for randomized factoring");
  app.require_subcommand(1);
  app.fallthrough();

  std::string A, B, C, u, v;
  std::int64_t d = 0;
  unsigned n = 0, p = 0;

  auto* verify = app.add_subcommand("verify", "check A^2 + d B^6 = C^n");
  verify->add_option("A", A)->required();
  verify->add_option("B", B)->required();
  verify->add_option("C", C)->required();
  verify->add_option("--d", d)->required();
  verify->add_option("--n", n)->required();

  auto* frey = app.add_subcommand("frey", "Frey curve E_{A,B} over Q(sqrt(-d))");
  frey->add_option("A", A)->required();
  frey->add_option("B", B)->required();
  frey->add_option("--d", d)->required();

  auto* multifrey = app.add_subcommand("multifrey", "rational curve Y^2 = X^3 + 3dB^2 X + 2dA");
  multifrey->add_option("A", A)->required();
  multifrey->add_option("B", B)->required();
  multifrey->add_option("--d", d)->required();

  auto* cm = app.add_subcommand("cm-check", "can E_{A,B} have CM");
  cm->add_option("A", A)->required();
  cm->add_option("B", B)->required();
  cm->add_option("--d", d)->required();

  auto* granville = app.add_subcommand("granville", "non-primitive solution from u, v");
  granville->add_option("u", u)->required();
  granville->add_option("v", v)->required();
  granville->add_option("--d", d)->required();
  granville->add_option("--p", p)->required();

  std::string newforms, form_label;
  std::int64_t level = 0;
  unsigned workers = 1;
  auto* mazur = app.add_subcommand("mazur", "Mazur sieve on newforms of a case");
  mazur->add_option("--newforms", newforms, "newform file (default: every level of the case)");
  mazur->add_option("--level", level, "only this level");
  mazur->add_option("--form", form_label, "only this form");
  mazur->add_option("--workers", workers)->check(CLI::Range(1u, 256u));

  std::vector<std::string> tied, plus, minus, mult, ram;
  std::string curve_name;
  auto* symp = app.add_subcommand("symplectic", "combine symplectic conditions into excluded classes of p");
  symp->add_option("--tied", tied, "square class m tied to the isomorphism type");
  symp->add_option("--plus", plus, "square class m forcing a symplectic isomorphism");
  symp->add_option("--minus", minus, "square class m forcing an anti-symplectic isomorphism");
  symp->add_option("--multiplicative", mult, "FREY:V, Frey valuation (affine in p) and curve valuation");
  symp->add_option("--ramified", ram, "ELL:A:B, valuations mod 3 (certificates taken as given)");
  symp->add_option("--curve", curve_name, "conditions of a candidate curve from --config");

  std::string ainvs;
  std::int64_t scan = 1000;
  auto* tors = app.add_subcommand("torsion3", "3-torsion point and Frobenius witness");
  tors->add_option("--curve", curve_name, "candidate curve or form label from --config");
  tors->add_option("--ainvs", ainvs, "x:y,... five coefficients x + y sqrt(-d)");
  tors->add_option("--d", d);
  tors->add_option("--scan", scan, "norm bound for the prime scan");

  std::string table, fetch_range;
  auto* mfs = app.add_subcommand("multifrey-search", "search the curve table for multi-Frey hits");
  mfs->add_option("--d", d)->required();
  mfs->add_option("--table", table, "curve table CSV");
  mfs->add_option("--fetch", fetch_range, "LO:HI conductor range from the curve service");

  std::int64_t q = 0, p_start = 23, p_max = 20000, at_p = 0;
  std::string terms;
  bool omit = false;
  auto* ell = app.add_subcommand("ellenberg", "explicit Ellenberg bound");
  ell->add_option("--q", q, "character conductor")->required();
  ell->add_option("--p", at_p, "evaluate the terms at one prime instead of searching");
  ell->add_option("--terms", terms, "CSV of the reference terms (term,q,p,m,value)");
  ell->add_flag("--omit-reference-terms", omit, "drop missing reference terms (partial, not a bound)");
  ell->add_option("--p-start", p_start);
  ell->add_option("--p-max", p_max);

  std::string report_path;
  auto* pipe = app.add_subcommand("pipeline", "full per-case run");
  pipe->add_option("--workers", workers)->check(CLI::Range(1u, 256u));
  pipe->add_option("--report", report_path, "also write the JSON report (with envelope) here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  set_default_factor_seed(g.seed);

  if (*verify) {
    emit(g, solution_json(verify_solution(parse_integer(A), parse_integer(B), parse_integer(C), d, n)));
    return 0;
  }
  if (*frey) {
    const auto E = frey_curve(parse_integer(A), parse_integer(B), d);
    ojson j = model_json(E);
    j["disc_formula"] = to_string(frey_discriminant(parse_integer(A), parse_integer(B), d));
    emit(g, j);
    return 0;
  }
  if (*multifrey) {
    emit(g, model_json(multifrey_curve(parse_integer(A), parse_integer(B), d)));
    return 0;
  }
  if (*cm) {
    const Integer a = parse_integer(A), b = parse_integer(B);
    ojson j{{"class", std::string(to_string(cm_check(a, b, d)))}};
    if (b != 0 || a != 0) j["j_sqrt_part"] = to_string(j_sqrt_part(a, b, d));
    emit(g, j);
    return 0;
  }
  if (*granville) {
    Solution s = granville_family(parse_integer(u), parse_integer(v), d, p);
    Solution check = verify_solution(s.A, s.B, s.C, s.d, s.n);
    ojson j = solution_json(check);
    emit(g, j);
    return 0;
  }
  if (*mazur) {
    const CaseConfig c = need_config(g);
    NewformSet set;
    if (!newforms.empty()) {
      for (auto& f : load_newforms(newforms)) set[f.level].push_back(std::move(f));
    } else {
      set = load_case_newforms(c);
    }
    ojson out = ojson::array();
    bool unresolved = false;
    for (const auto& lspec : c.levels) {
      if (level != 0 && lspec.level != level) continue;
      auto it = set.find(lspec.level);
      if (it == set.end()) continue;
      for (const auto& f : it->second) {
        if (!form_label.empty() && f.label != form_label) continue;
        SieveOptions opt;
        opt.workers = workers;
        SieveResult r = sieve_survivors(f, {c.d, c.chi_order, c.ell_list, lspec.p_min}, opt);
        unresolved = unresolved || r.verdict == SieveVerdict::unresolved;
        ojson j{{"label", f.label}, {"verdict", std::string(to_string(r.verdict))}, {"cm", r.cm}};
        std::vector<std::string> surv;
        for (const auto& s : r.surviving_primes) surv.push_back(to_string(s));
        j["surviving_primes"] = surv;
        j["all_primes"] = r.all_primes;
        ojson consts = ojson::object();
        for (const auto& w : r.witnesses) consts[std::to_string(w.ell)] = to_string(w.value);
        j["constants"] = consts;
        if (r.unfactored) j["unfactored"] = to_string(*r.unfactored);
        out.push_back(j);
      }
    }
    if (g.output == "json") {
      std::cout << out.dump(2) << "\n";
    } else {
      for (const auto& j : out) {
        std::cout << j["label"].get<std::string>() << ": " << j["verdict"].get<std::string>();
        if (j["cm"].get<bool>()) std::cout << " (CM)";
        if (j["all_primes"].get<bool>()) std::cout << ", every B_l vanishes";
        else if (!j["surviving_primes"].empty()) {
          std::cout << ", survivors";
          for (const auto& s : j["surviving_primes"]) std::cout << " " << s.get<std::string>();
        }
        std::cout << "\n";
      }
    }
    return unresolved ? 3 : 0;
  }
  if (*symp) {
    std::vector<SymplecticCondition> conds;
    auto add = [&](const std::vector<std::string>& ms, SymplecticSign s) {
      for (const auto& m : ms) conds.push_back({parse_integer(m), s, "--" + std::string(to_string(s)) + " " + m, {}});
    };
    add(tied, SymplecticSign::tied);
    add(plus, SymplecticSign::plus);
    add(minus, SymplecticSign::minus);
    for (const auto& m : mult) {
      auto colon = m.rfind(':');
      require(colon != std::string::npos, ErrorKind::ParseError, "--multiplicative needs FREY:V");
      conds.push_back(symplectic_multiplicative(parse_affine_valuation(m.substr(0, colon)),
                                                parse_integer(m.substr(colon + 1)), m));
    }
    for (const auto& r : ram) {
      std::stringstream ss(r);
      std::string a, b, c;
      std::getline(ss, a, ':');
      std::getline(ss, b, ':');
      std::getline(ss, c, ':');
      conds.push_back(symplectic_ramified(std::stoll(a), std::stoi(b), std::stoi(c), {true, true, true}, r));
    }
    if (!curve_name.empty()) {
      const CaseConfig c = need_config(g);
      const CandidateCurve& cc = find_curve(c, curve_name);
      for (auto& cond : curve_conditions(c, cc)) conds.push_back(std::move(cond));
    }
    require(!conds.empty(), ErrorKind::InvalidArgument, "no conditions given");
    ojson j;
    ojson cj = ojson::array();
    for (const auto& c : conds) cj.push_back({{"m", to_string(c.m)}, {"sign", std::string(to_string(c.sign))}, {"source", c.source}});
    j["conditions"] = cj;
    j["excluded"] = exclusion_json(combine_conditions(conds));
    emit(g, j);
    return 0;
  }
  if (*tors) {
    WeierstrassModel<QuadElem> E;
    std::string name;
    std::int64_t limit = scan;
    if (!curve_name.empty()) {
      const CaseConfig c = need_config(g);
      const CandidateCurve& cc = find_curve(c, curve_name);
      E = cc.model;
      name = cc.name;
      if (!tors->count("--scan")) limit = cc.torsion_scan_limit;
    } else {
      require(!ainvs.empty() && d > 0, ErrorKind::InvalidArgument, "torsion3 needs --curve or --ainvs with --d");
      E = parse_ainvs(ainvs, d);
      name = "curve";
    }
    ojson j{{"curve", name}};
    if (auto P = has_3_torsion(E)) {
      j["point_of_order_3"] = {to_string(P->x), to_string(P->y)};
      j["conclusive"] = false;
      emit(g, j);
      return 0;
    }
    j["point_of_order_3"] = nullptr;
    Torsion3Result t = torsion3_test(E, limit);
    j["conclusive"] = t.conclusive;
    j["scanned"] = t.scanned;
    if (t.conclusive) {
      std::ostringstream b;
      b << std::fixed << std::setprecision(6) << t.bound;
      j["ideal"] = t.ideal;
      j["norm"] = t.norm;
      j["trace"] = t.trace;
      j["bound"] = b.str();
    }
    emit(g, j);
    return t.conclusive ? 0 : 3;
  }
  if (*mfs) {
    CurveTable t;
    if (!fetch_range.empty()) {
      auto colon = fetch_range.find(':');
      require(colon != std::string::npos, ErrorKind::ParseError, "--fetch needs LO:HI");
      FetchOptions fo = fetch_options_from_env();
      if (!g.cache_dir.empty()) fo.cache_dir = g.cache_dir;
      fo.offline = fo.offline || g.offline;
      std::unique_ptr<Transport> http = fo.offline ? nullptr : make_http_transport();
      CachedFetcher fetcher(fo, http.get());
      t = fetch_curves(parse_integer(fetch_range.substr(0, colon)), parse_integer(fetch_range.substr(colon + 1)), fetcher,
                       fo.endpoint);
    } else {
      const std::string path = table.empty() ? std::string(FSIEVE_DATA_DIR) + "/curves/multifrey.csv" : table;
      if (!std::filesystem::exists(path)) fail(ErrorKind::MissingExternalData, "curve table not found: " + path);
      t = load_curve_table(path);
    }
    MultiFreyResult r = multifrey_bound(d, t);
    ojson hits = ojson::array();
    for (const auto& h : r.hits)
      hits.push_back({{"label", h.label}, {"conductor", to_string(h.conductor)}, {"x", to_string(h.x)},
                      {"y", to_string(h.y)}, {"m", to_string(h.m)}, {"admissible_p", h.admissible_p}});
    ojson j{{"d", d}, {"path", r.path}, {"impossible", r.impossible()}, {"hits", hits}};
    j["bound"] = r.bound() ? ojson(*r.bound()) : ojson(nullptr);
    emit(g, j);
    return 0;
  }
  if (*ell) {
    BoundParams bp;
    bp.q = q;
    bp.precision = g.precision;
    bp.omit_reference_terms = omit;
    if (!terms.empty()) {
      if (!std::filesystem::exists(terms)) fail(ErrorKind::MissingExternalData, "term table not found: " + terms);
      bp.terms = load_tabulated_terms(terms);
    }
    auto fmt = [&](const Real& x) { return x.str(static_cast<std::streamsize>(g.precision)); };
    if (at_p != 0) {
      ojson j{{"q", q}, {"p", at_p}, {"E4", fmt(eval_E4(at_p, q, g.precision))},
              {"leading", fmt(leading_term(at_p, q, g.precision))}};
      j["rhs"] = fmt(eval_rhs(at_p, bp));
      j["partial"] = omit;
      emit(g, j);
      return 0;
    }
    BoundReport r = find_bound(bp, p_start, p_max);
    ojson j{{"q", q}, {"partial", r.partial}, {"monotone", r.monotone}, {"terms", r.terms}};
    j["first_positive_prime"] = r.first_positive_prime ? ojson(*r.first_positive_prime) : ojson(nullptr);
    j["trace_points"] = r.rhs_trace.size();
    if (!r.rhs_trace.empty()) j["last_value"] = fmt(r.rhs_trace.back().value);
    emit(g, j);
    return r.first_positive_prime ? 0 : 3;
  }
  if (*pipe) {
    const CaseConfig c = need_config(g);
    std::map<std::string, std::string> digests;
    digests[std::filesystem::path(g.config).filename().string()] = sha256_file(g.config);
    NewformSet set = load_case_newforms(c, &digests);
    PipelineOptions po;
    po.workers = workers;
    SieveReport rep = run_pipeline(c, set, po);
    rep.inputs = digests;
    const std::string body = serialize_report(rep);
    if (!report_path.empty()) write_file_atomic(report_path, wrap_envelope(body, utc_timestamp()));
    if (g.output == "json") std::cout << body << "\n";
    else std::cout << render_text(rep);
    if (c.status != "active" || rep.statement.conclusive) return 0;
    bool missing = set.empty();
    return missing ? 4 : 3;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fsieve: modular-method sieve for x^2 + d y^6 = z^p"};
  try {
    return run(app, argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
