#include "fsieve/io/pipeline.hpp"

#include "fsieve/discard/symplectic.hpp"
#include "fsieve/discard/torsion3.hpp"
#include "fsieve/ecurve/torsion.hpp"
#include "fsieve/error.hpp"
#include "fsieve/io/digest.hpp"
#include "fsieve/io/newform_io.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <iomanip>
#include <sstream>

namespace fsieve {
namespace {

const PrimeIdeal& ideal_by_label(std::int64_t d, const std::string& label, std::vector<PrimeIdeal>& store) {
  std::size_t i = 1;
  while (i < label.size() && std::isdigit(static_cast<unsigned char>(label[i]))) ++i;
  require(label.size() > 1 && label[0] == 'p' && i > 1, ErrorKind::ParseError, "bad prime label '" + label + "'");
  store = primes_above(std::stoll(label.substr(1, i - 1)), d);
  for (const auto& P : store)
    if (P.label() == label) return P;
  fail(ErrorKind::InvalidArgument, "no prime " + label + " in Q(sqrt(-" + std::to_string(d) + "))");
}

ExclusionRecord to_record(const ExclusionResult& e) {
  return {e.modulus, std::vector<std::int64_t>(e.excluded.begin(), e.excluded.end()), to_string(e.density)};
}

ExclusionResult from_record(const ExclusionRecord& e) {
  ExclusionResult r;
  r.modulus = e.modulus;
  r.excluded.insert(e.classes.begin(), e.classes.end());
  r.density = parse_rational(e.density);
  return r;
}

const CandidateCurve* curve_for(const CaseConfig& c, const std::string& label) {
  for (const auto& cc : c.curves)
    if (std::find(cc.forms.begin(), cc.forms.end(), label) != cc.forms.end()) return &cc;
  return nullptr;
}

void apply_curve(const CaseConfig& c, const CandidateCurve& cc, FormReport& r) {
  r.curve = cc.name;
  const bool torsion = has_3_torsion(cc.model).has_value();
  r.curve_has_3_torsion = torsion;
  if (!torsion) {
    Torsion3Result t = torsion3_test(cc.model, cc.torsion_scan_limit);
    std::ostringstream b;
    b << std::fixed << std::setprecision(6) << t.bound;
    r.torsion3 = Torsion3Record{t.conclusive, t.ideal, t.norm, t.trace, t.conclusive ? b.str() : ""};
    if (t.conclusive) {
      r.verdict = FormVerdict::torsion3;
      r.eliminated_above = static_cast<std::int64_t>(std::floor(t.bound));
      r.filters.push_back("torsion3");
    }
  }
  const std::vector<SymplecticCondition> conds = curve_conditions(c, cc);
  for (const auto& s : conds) r.conditions.push_back({to_string(s.m), std::string(to_string(s.sign)), s.source});
  if (!conds.empty()) {
    ExclusionResult e = combine_conditions(conds);
    r.exclusion = to_record(e);
    if (!e.excluded.empty() && r.verdict == FormVerdict::survives) {
      r.verdict = FormVerdict::partial;
      r.filters.push_back("symplectic");
    }
  }
  if (cc.local_type_frey && cc.local_type_form) {
    const bool ok = local_type_compatible(*cc.local_type_frey, *cc.local_type_form, 5);
    r.local_type_compatible = ok;
    if (!ok) {
      r.verdict = FormVerdict::local_type;
      r.eliminated_above = 3;
      r.filters.push_back("local-type");
    }
  }
}

}  // namespace

std::vector<SymplecticCondition> curve_conditions(const CaseConfig& c, const CandidateCurve& cc) {
  const auto inv = invariants(cc.model);
  const bool torsion = has_3_torsion(cc.model).has_value();
  std::vector<SymplecticCondition> conds;
  std::vector<PrimeIdeal> store;
  for (const auto& [label, expr] : cc.frey_valuations) {
    const PrimeIdeal& P = ideal_by_label(c.d, label, store);
    const int vd = valuation(inv.disc, P);
    const bool multiplicative = vd > 0 && (inv.c4.is_zero() || valuation(inv.c4, P) == 0);
    require(multiplicative, ErrorKind::HypothesisViolated, cc.name + " is not multiplicative at " + label);
    conds.push_back(symplectic_multiplicative(parse_affine_valuation(expr), vd, cc.name + " at " + label));
  }
  for (const auto& ram : cc.ramified) {
    const PrimeIdeal P = primes_above(ram.ell, c.d).front();
    const int vd = valuation(inv.disc, P);
    conds.push_back(symplectic_ramified(ram.ell, ram.frey_mod3, vd % 3, {true, torsion, ram.defect_three},
                                        cc.name + " at " + P.label()));
  }
  return conds;
}

NewformSet load_case_newforms(const CaseConfig& c, std::map<std::string, std::string>* digests) {
  NewformSet out;
  for (const auto& l : c.levels) {
    if (l.newform_file.empty()) continue;
    const auto path = c.base_dir / l.newform_file;
    if (!std::filesystem::exists(path))
      fail(ErrorKind::MissingExternalData, "newform data for level " + std::to_string(l.level) + " not found: " +
                                               path.string());
    auto forms = load_newforms(path);
    for (const auto& f : forms)
      require(f.level == l.level, ErrorKind::InvariantViolation,
              path.string() + ": form " + f.label + " has level " + std::to_string(f.level));
    if (digests) (*digests)[l.newform_file] = sha256_file(path);
    out[l.level] = std::move(forms);
  }
  return out;
}

FormReport run_form(const CaseConfig& c, const LevelSpec& level, const NewformData& f) {
  FormReport r;
  r.label = f.label;
  r.level = f.level;
  r.ordinal = f.ordinal;
  r.cm = f.cm.has_value();
  try {
    SieveConfig cfg{c.d, c.chi_order, c.ell_list, level.p_min};
    SieveResult s = sieve_survivors(f, cfg);
    MazurRecord m;
    m.verdict = std::string(to_string(s.verdict));
    for (const auto& p : s.surviving_primes) m.surviving_primes.push_back(to_string(p));
    m.all_primes = s.all_primes;
    for (const auto& w : s.witnesses) m.constants[w.ell] = to_string(w.value);
    if (s.unfactored) m.unfactored = to_string(*s.unfactored);
    r.mazur = m;
    if (r.cm) {
      r.verdict = FormVerdict::cm;
      r.filters.push_back("cm");
      return r;
    }
    if (s.verdict == SieveVerdict::eliminated) {
      r.verdict = FormVerdict::eliminated;
      r.eliminated_above = s.eliminated_above;
      r.filters.push_back("mazur");
      return r;
    }
    r.verdict = s.verdict == SieveVerdict::unresolved ? FormVerdict::unresolved : FormVerdict::survives;
    if (const CandidateCurve* cc = curve_for(c, f.label)) apply_curve(c, *cc, r);
  } catch (const Error& e) {
    r.verdict = FormVerdict::error;
    r.error = std::string(to_string(e.kind())) + ": " + e.what();
  }
  return r;
}

Statement final_statement(const CaseConfig& c, const std::vector<FormReport>& forms) {
  Statement s;
  std::int64_t bound = 2;
  auto raise = [&](const std::string& why, std::int64_t b) {
    auto [it, fresh] = s.bound_sources.emplace(why, b);
    if (!fresh) it->second = std::max(it->second, b);
    bound = std::max(bound, b);
  };
  std::vector<ExclusionResult> partial;
  std::vector<std::string> open;
  for (const auto& f : forms) {
    switch (f.verdict) {
      case FormVerdict::eliminated:
      case FormVerdict::torsion3:
      case FormVerdict::local_type:
        raise(std::string(to_string(f.verdict)), *f.eliminated_above + 1);
        break;
      case FormVerdict::partial:
        partial.push_back(from_record(*f.exclusion));
        break;
      case FormVerdict::cm:
        break;
      default:
        open.push_back(f.label);
    }
  }
  if (c.multifrey_bound) raise("multifrey", *c.multifrey_bound + 1);
  if (c.ellenberg_bound) raise("ellenberg", *c.ellenberg_bound);
  if (c.status != "active") {
    s.text = "no conclusion: case marked " + c.status;
    return s;
  }
  if (forms.empty()) {
    s.text = "no conclusion: no newform data";
    return s;
  }
  if (!open.empty()) {
    s.text = "no conclusion: " + std::to_string(open.size()) + " form(s) not discarded (" + open.front() + (open.size() > 1 ? ", ..." : "") + ")";
    return s;
  }
  if (!c.ellenberg_bound) {
    s.text = "no conclusion: Ellenberg bound not available (CM forms only discarded for p > N_d)";
    return s;
  }
  s.conclusive = true;
  s.bound = bound;
  std::ostringstream t;
  t << "no non-trivial solutions for p \xe2\x89\xa5 " << bound;
  if (!partial.empty()) {
    ExclusionResult e = intersect_exclusions(partial);
    s.classes = to_record(e);
    if (e.excluded.empty()) {
      s.conclusive = false;
      s.text = "no conclusion: symplectic exclusions of the surviving forms do not intersect";
      return s;
    }
    t << ", p \xe2\x89\xa1 ";
    bool first = true;
    for (auto r : e.excluded) {
      t << (first ? "" : ",") << r;
      first = false;
    }
    t << " (mod " << e.modulus << ")";
  }
  s.text = t.str();
  return s;
}

SieveReport run_pipeline(const CaseConfig& c, const NewformSet& forms, const PipelineOptions& options) {
  SieveReport rep;
  rep.d = c.d;
  rep.status = c.status;
  std::vector<std::pair<const LevelSpec*, const NewformData*>> jobs;
  for (const auto& l : c.levels) {
    auto it = forms.find(l.level);
    if (it == forms.end()) continue;
    for (const auto& f : it->second) jobs.emplace_back(&l, &f);
  }
  rep.forms.resize(jobs.size());
  const std::size_t workers = std::max(1u, options.workers);
  for (std::size_t start = 0; start < jobs.size(); start += workers) {
    std::vector<std::future<FormReport>> batch;
    const std::size_t stop = std::min(jobs.size(), start + workers);
    for (std::size_t i = start; i < stop; ++i)
      batch.push_back(std::async(workers == 1 ? std::launch::deferred : std::launch::async,
                                 [&, i] { return run_form(c, *jobs[i].first, *jobs[i].second); }));
    for (std::size_t i = start; i < stop; ++i) rep.forms[i] = batch[i - start].get();
  }
  for (const auto& l : c.levels) {
    LevelRecord lr;
    lr.level = l.level;
    lr.expected_orbits = l.orbits;
    lr.expected_cm = l.cm_orbits;
    for (const auto& f : rep.forms) {
      if (f.level != l.level) continue;
      ++lr.orbits;
      if (f.cm) ++lr.cm;
      ++lr.verdicts[std::string(to_string(f.verdict))];
    }
    rep.levels.push_back(lr);
  }
  rep.statement = final_statement(c, rep.forms);
  return rep;
}

}  // namespace fsieve
