// Writes synthetic newform packs for the case configs that ship with
// newform files. The packs have the orbit and CM counts of the real spaces;
// eigenvalues are synthetic:
//   - forms with an attached candidate curve get that curve's traces at the
//     first prime above each sieve prime, so they survive Mazur's trick;
//   - CM forms get traces of rational CM curves (j = 0, j = 1728, or 49a1);
//   - all other forms get random integral eigenvalues in a real or imaginary
//     quadratic field, redrawn until the sieve eliminates them.

#include "fsieve/arith/kronecker.hpp"
#include "fsieve/error.hpp"
#include "fsieve/io/case_config.hpp"
#include "fsieve/io/newform_io.hpp"
#include "fsieve/sieve/mazur.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <random>

using namespace fsieve;

namespace {

std::int64_t character_discriminant(std::int64_t conductor) {
  if (conductor == 1) return 1;
  for (std::int64_t D : {conductor, -conductor}) {
    if (mod(D, 4) == 1 && is_squarefree(Integer(D))) return D;
    if (mod(D, 16) == 8 || mod(D, 16) == 12) {
      std::int64_t m = D / 4;
      if (is_squarefree(Integer(m)) && (mod(m, 4) == 2 || mod(m, 4) == 3)) return D;
    }
  }
  fail(ErrorKind::InvalidArgument, "no quadratic character of conductor " + std::to_string(conductor));
}

WeierstrassModel<Rational> rational_model(long a1, long a2, long a3, long a4, long a6) {
  return {Rational(a1), Rational(a2), Rational(a3), Rational(a4), Rational(a6)};
}

// Rational CM curves, distinct up to twist, with their CM discriminant.
std::vector<std::pair<WeierstrassModel<Rational>, std::int64_t>> cm_curves(std::int64_t d) {
  std::vector<std::pair<WeierstrassModel<Rational>, std::int64_t>> out;
  if (d == 7) out.push_back({rational_model(1, -1, 0, -2, -1), -7});
  // Only 2 and 3 divide k, so the sieve primes are good for all of them.
  for (long k : {1, 2, 3, 4, 6, 8, 9, 12, -1, -2, -3, -4, -6, -8, -9, -12})
    out.push_back({rational_model(0, 0, 0, 0, k), -3});
  for (long k : {1, 2, 3, 6, -1, -2, -3, -6})
    out.push_back({rational_model(0, 0, 0, k, 0), -4});
  return out;
}

struct Generator {
  const CaseConfig& c;
  std::mt19937_64& rng;
  std::int64_t eps_disc;

  NfElem eps_value(const NumberFieldPtr& K, std::int64_t ell) const {
    return NfElem::rational(K, kronecker(eps_disc, ell));
  }

  NewformData blank(std::int64_t level, int ordinal, const NumberFieldPtr& K) const {
    NewformData f;
    f.label = std::to_string(level) + "." + std::to_string(ordinal);
    f.level = level;
    f.char_order = c.nebentypus_order;
    f.field = K;
    f.ordinal = ordinal;
    for (std::int64_t ell : c.ell_list)
      if (c.nebentypus_order > 1) f.eps_map[ell] = eps_value(K, ell);
    return f;
  }

  NewformData survivor(std::int64_t level, int ordinal, const CandidateCurve& cc) const {
    NewformData f = blank(level, ordinal, rational_field());
    PointCounter counter;
    for (std::int64_t ell : c.ell_list) {
      const PrimeIdeal P = primes_above(ell, c.d).front();
      require(P.norm() == ell, ErrorKind::InvalidArgument,
              "survivor fixtures need split sieve primes; " + std::to_string(ell) + " is not split");
      f.a_map[ell] = NfElem::rational(f.field, counter.trace(reduce_model(cc.model, P)));
    }
    f.provenance = "synthetic: traces of " + cc.name;
    return f;
  }

  NewformData cm_form(std::int64_t level, int ordinal, const WeierstrassModel<Rational>& E, std::int64_t D) const {
    NewformData f = blank(level, ordinal, rational_field());
    for (std::int64_t ell : c.ell_list)
      f.a_map[ell] = NfElem::rational(f.field, count_points(reduce_model(E, ell)));
    f.cm = D;
    f.provenance = "synthetic: traces of a rational curve with CM by " + std::to_string(D);
    return f;
  }

  NewformData eliminated(std::int64_t level, int ordinal, const LevelSpec& spec) const {
    static const std::int64_t fields[] = {2, 3, 5, 6, 7, -1, -2, -3, -5, -6};
    SieveConfig cfg{c.d, c.chi_order, c.ell_list, spec.p_min};
    for (int attempt = 0; attempt < 500; ++attempt) {
      const std::int64_t m = fields[std::uniform_int_distribution<int>(0, 9)(rng)];
      auto K = make_number_field({Integer(-m), Integer(0), Integer(1)});
      NewformData f = blank(level, ordinal, K);
      for (std::int64_t ell : c.ell_list) {
        const double bound = 2 * std::sqrt(static_cast<double>(ell));
        const long ymax = static_cast<long>(bound / std::sqrt(static_cast<double>(std::abs(m))));
        long x = 0, y = 0;
        do {
          y = std::uniform_int_distribution<long>(-ymax, ymax)(rng);
          x = std::uniform_int_distribution<long>(-static_cast<long>(bound), static_cast<long>(bound))(rng);
        } while (m > 0 ? std::abs(x) + std::abs(y) * std::sqrt(double(m)) > bound - 1e-9
                       : double(x * x) + double(-m) * double(y * y) > 4.0 * ell - 1e-9);
        f.a_map[ell] = NfElem(K, {Rational(x), Rational(y)});
      }
      f.provenance = "synthetic: random eigenvalues in Q(sqrt(" + std::to_string(m) + "))";
      if (sieve_survivors(f, cfg).verdict == SieveVerdict::eliminated) return f;
    }
    fail(ErrorKind::UnhandledCase, "could not draw an eliminated form for level " + std::to_string(level));
  }
};

const CandidateCurve* attached(const CaseConfig& c, const std::string& label) {
  for (const auto& cc : c.curves)
    for (const auto& l : cc.forms)
      if (l == label) return &cc;
  return nullptr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Write synthetic newform packs for the bundled case configs"};
  std::vector<std::string> configs;
  std::uint64_t seed = 20240607;
  app.add_option("configs", configs, "case config files")->required()->check(CLI::ExistingFile);
  app.add_option("--seed", seed, "random seed");
  CLI11_PARSE(app, argc, argv);

  try {
    std::mt19937_64 rng(seed);
    for (const auto& path : configs) {
      const CaseConfig c = load_case_config(path);
      Generator g{c, rng, character_discriminant(c.nebentypus_conductor)};
      const auto cms = cm_curves(c.d);
      std::size_t next_cm = 0;
      for (const auto& spec : c.levels) {
        if (spec.newform_file.empty()) continue;
        require(spec.orbits.has_value(), ErrorKind::InvalidArgument, "level without an orbit count");
        const int n = *spec.orbits, ncm = spec.cm_orbits.value_or(0);
        std::vector<NewformData> forms;
        for (int k = 1; k <= n; ++k) {
          const std::string label = std::to_string(spec.level) + "." + std::to_string(k);
          if (k <= ncm) {
            require(next_cm < cms.size(), ErrorKind::UnhandledCase, "ran out of CM curves");
            forms.push_back(g.cm_form(spec.level, k, cms[next_cm].first, cms[next_cm].second));
            ++next_cm;
          } else if (const CandidateCurve* cc = attached(c, label)) {
            forms.push_back(g.survivor(spec.level, k, *cc));
          } else {
            forms.push_back(g.eliminated(spec.level, k, spec));
          }
          check_newform(forms.back());
        }
        const auto out = c.base_dir / spec.newform_file;
        std::filesystem::create_directories(out.parent_path());
        std::ofstream(out) << serialize_newforms(forms);
        std::cout << out.lexically_normal().string() << ": " << forms.size() << " forms\n";
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  }
  return 0;
}
