// Command-line workbench for primitive-root counts, Hooley densities,
// Dirichlet character sums, and the related census experiments. All
// subcommands are deterministic: identical flags produce byte-identical
// files, independent of the thread count.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "artinlab/artin.hpp"
#include "artinlab/census.hpp"
#include "artinlab/config.hpp"
#include "artinlab/io.hpp"

using namespace artinlab;

namespace {

struct GlobalOpts {
  std::string config_path;
  int threads_flag = 0;  // 0 = not given
};

RunConfig resolve_config(const GlobalOpts& g) {
  RunConfig cfg = g.config_path.empty() ? default_config() : load_config(g.config_path);
  apply_env(cfg);
  if (g.threads_flag > 0) cfg.threads = g.threads_flag;
  return cfg;
}

PrimeTable acquire_primes(uint64_t limit, const RunConfig& cfg) {
  if (limit > budget_of(cfg, "sieve_limit")) throw BudgetError("prime table exceeds sieve budget");
  if (!cfg.prime_cache.empty()) {
    try {
      PrimeTable t = load_prime_cache(cfg.prime_cache);
      if (t.limit >= limit) return t;
    } catch (const std::exception&) {
      // cache missing or stale; rebuild below
    }
    PrimeTable t = sieve_primes(limit);
    save_prime_cache(t, cfg.prime_cache);
    return t;
  }
  return sieve_primes(limit);
}

void emit(const std::string& csv, const std::string& json, OutputFormat fmt,
          const std::string& out_path) {
  const std::string& payload = fmt == OutputFormat::Csv ? csv : json;
  if (out_path.empty()) {
    std::fputs(payload.c_str(), stdout);
  } else {
    write_text_file(out_path, payload);
    std::printf("wrote %s\n", out_path.c_str());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"artinlab: primitive-root and character-sum workbench"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand name

  GlobalOpts gopts;
  app.add_option("--config", gopts.config_path, "key=value config file");
  app.add_option("--threads", gopts.threads_flag, "worker threads (overrides config and env)");

  // ---- na ----
  auto* na = app.add_subcommand("na", "count primes p <= x with a a primitive root");
  int64_t na_a = 0;
  uint64_t na_x = 0;
  uint64_t na_cutoff = 0;
  na->add_option("--a", na_a, "base a")->required();
  na->add_option("--x", na_x, "prime bound x")->required();
  na->add_option("--cutoff", na_cutoff, "Euler product cutoff");

  // ---- na-range ----
  auto* nar = app.add_subcommand("na-range", "N_a(x) for every a in [amin, amax]");
  int64_t nar_lo = 0, nar_hi = 0;
  uint64_t nar_x = 0, nar_cutoff = 0;
  std::string nar_out, nar_fmt = "csv";
  nar->add_option("--amin", nar_lo, "lower end of a range")->required();
  nar->add_option("--amax", nar_hi, "upper end of a range")->required();
  nar->add_option("--x", nar_x, "prime bound x")->required();
  nar->add_option("--cutoff", nar_cutoff, "Euler product cutoff");
  nar->add_option("--out", nar_out, "output file");
  nar->add_option("--format", nar_fmt, "csv or json");

  // ---- density ----
  auto* den = app.add_subcommand("density", "Hooley density profile of a");
  int64_t den_a = 0;
  uint64_t den_cutoff = 0;
  den->add_option("--a", den_a, "base a")->required();
  den->add_option("--cutoff", den_cutoff, "Euler product cutoff");

  // ---- artin-const ----
  auto* ac = app.add_subcommand("artin-const", "truncated Artin constant with tail bound");
  uint64_t ac_cutoff = 0;
  ac->add_option("--cutoff", ac_cutoff, "Euler product cutoff");

  // ---- charsum ----
  auto* cs = app.add_subcommand("charsum", "max primitive character sum for one modulus");
  uint64_t cs_q = 0, cs_y = 0;
  cs->add_option("--q", cs_q, "modulus")->required();
  cs->add_option("--y", cs_y, "sum length")->required();

  // ---- census ----
  auto* cen = app.add_subcommand("census", "character-sum census over 3 <= q <= x");
  uint64_t cen_x = 0, cen_y = 0;
  double cen_lambda = 3.0;
  std::vector<double> cen_thresholds{0.0, 0.001, 0.01, 0.05, 0.1, 0.5, 1.0};
  std::string cen_out, cen_summary, cen_fmt = "csv";
  cen->add_option("--x", cen_x, "modulus bound")->required();
  cen->add_option("--y", cen_y, "character sum length")->required();
  cen->add_option("--lambda", cen_lambda, "exponent parameter for the normalized column");
  cen->add_option("--thresholds", cen_thresholds, "delta thresholds (fractions of y)");
  cen->add_option("--out", cen_out, "census CSV/JSON file");
  cen->add_option("--summary", cen_summary, "summary JSON file");
  cen->add_option("--format", cen_fmt, "csv or json");

  // ---- levelsets ----
  auto* ls = app.add_subcommand("levelsets", "counts of A_w(y) = {n <= y : Omega(n) = w}");
  uint64_t ls_y = 0;
  std::string ls_out, ls_fmt = "csv";
  ls->add_option("--y", ls_y, "range bound")->required();
  ls->add_option("--out", ls_out, "output file");
  ls->add_option("--format", ls_fmt, "csv or json");

  // ---- flambda ----
  auto* fl = app.add_subcommand("flambda", "count of a <= y with Omega(a) > lambda log log y");
  uint64_t fl_y = 0;
  double fl_lambda = 0.0;
  fl->add_option("--y", fl_y, "range bound")->required();
  fl->add_option("--lambda", fl_lambda, "threshold multiplier")->required();

  // ---- tk ----
  auto* tk = app.add_subcommand("tk", "solutions of a_1...a_k = b_1...b_k inside A_w(y)");
  uint32_t tk_k = 0, tk_w = 0;
  uint64_t tk_y = 0;
  tk->add_option("--k", tk_k, "tuple length")->required();
  tk->add_option("--w", tk_w, "Omega level")->required();
  tk->add_option("--y", tk_y, "range bound")->required();

  // ---- large-sieve ----
  auto* lsv = app.add_subcommand("large-sieve", "S_k / ((x^2 + y^k) T_k) ratio check");
  uint32_t lsv_k = 0, lsv_w = 0;
  uint64_t lsv_x = 0, lsv_y = 0;
  lsv->add_option("--k", lsv_k, "moment order")->required();
  lsv->add_option("--w", lsv_w, "Omega level")->required();
  lsv->add_option("--x", lsv_x, "modulus bound")->required();
  lsv->add_option("--y", lsv_y, "range bound")->required();

  // ---- moments ----
  auto* mom = app.add_subcommand("moments", "first/second moment of N_a(x) over |a| <= y");
  uint64_t mom_x = 0, mom_y = 0, mom_cutoff = 0;
  double mom_d = 10.0;
  std::string mom_out, mom_fmt = "csv";
  mom->add_option("--x", mom_x, "prime bound")->required();
  mom->add_option("--y", mom_y, "base range")->required();
  mom->add_option("--d", mom_d, "D parameter for the reported lambda");
  mom->add_option("--cutoff", mom_cutoff, "Euler product cutoff");
  mom->add_option("--out", mom_out, "output file");
  mom->add_option("--format", mom_fmt, "csv or json");

  // ---- phi-sum ----
  auto* ps = app.add_subcommand("phi-sum", "sum of phi(p-1)/p over p <= x");
  uint64_t ps_x = 0;
  ps->add_option("--x", ps_x, "prime bound")->required();

  // ---- titchmarsh ----
  auto* ti = app.add_subcommand("titchmarsh", "sum of 2^omega(p-1) over p <= x");
  uint64_t ti_x = 0;
  std::string ti_out, ti_fmt = "csv";
  ti->add_option("--x", ti_x, "prime bound")->required();
  ti->add_option("--out", ti_out, "output file");
  ti->add_option("--format", ti_fmt, "csv or json");

  // ---- lambda ----
  auto* la = app.add_subcommand("lambda", "lambda choice and range checks");
  double la_d = 10.0, la_x = 0.0, la_y = 0.0, la_c = 20.0;
  la->add_option("--d", la_d, "D parameter")->required();
  la->add_option("--x", la_x, "x")->required();
  la->add_option("--y", la_y, "y")->required();
  la->add_option("--range-constant", la_c, "multiplier in the lower range bound (default 20)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    RunConfig cfg = resolve_config(gopts);

    if (*na) {
      uint64_t cutoff = na_cutoff ? na_cutoff : cfg.prime_cutoff;
      PrimeTable primes = acquire_primes(na_x, cfg);
      SpfTable spf = sieve_spf(na_x);
      uint64_t n = count_na(na_a, na_x, primes, spf);
      double pred = predicted_count(na_a, na_x, primes, cutoff);
      std::printf("N_a=%llu\n", static_cast<unsigned long long>(n));
      std::printf("prediction=%s\n", format_double(pred).c_str());
    } else if (*nar) {
      uint64_t cutoff = nar_cutoff ? nar_cutoff : cfg.prime_cutoff;
      PrimeTable primes = acquire_primes(nar_x, cfg);
      SpfTable spf = sieve_spf(nar_x);
      auto counts = count_na_batch(nar_lo, nar_hi, nar_x, primes, spf, cfg.threads);
      DensityCalculator calc(cutoff);
      double pix = double(std::upper_bound(primes.primes.begin(), primes.primes.end(), nar_x) -
                          primes.primes.begin());
      std::vector<NaRangeRow> rows(counts.size());
      for (size_t i = 0; i < counts.size(); ++i) {
        rows[i].a = nar_lo + int64_t(i);
        rows[i].count = counts[i];
        rows[i].predicted = rows[i].a == 0 ? 0.0 : calc.density(rows[i].a).density * pix;
      }
      emit(na_range_csv(rows), na_range_json(rows), parse_format(nar_fmt), nar_out);
    } else if (*den) {
      uint64_t cutoff = den_cutoff ? den_cutoff : cfg.prime_cutoff;
      DensityCalculator calc(cutoff);
      ArtinProfile lit = calc.density(den_a, SquarefreeSign::AbsoluteValue);
      ArtinProfile sgn = calc.density(den_a, SquarefreeSign::Signed);
      std::printf("a=%lld\n", static_cast<long long>(lit.a));
      std::printf("h=%u\n", lit.h);
      std::printf("b=%llu\n", static_cast<unsigned long long>(lit.b));
      std::printf("negative=%s\n", lit.negative ? "true" : "false");
      std::printf("degenerate=%s\n", lit.degenerate ? "true" : "false");
      std::printf("density=%s\n", format_double(lit.density).c_str());
      std::printf("density_signed_convention=%s\n", format_double(sgn.density).c_str());
    } else if (*ac) {
      uint64_t cutoff = ac_cutoff ? ac_cutoff : cfg.prime_cutoff;
      EulerProductValue v = artin_constant(cutoff);
      std::printf("artin_constant=%s\n", format_double(v.value).c_str());
      std::printf("cutoff=%llu\n", static_cast<unsigned long long>(v.prime_cutoff));
      std::printf("tail_bound=%s\n", format_double(v.tail_bound).c_str());
    } else if (*cs) {
      UnitGroup g(cs_q);
      CharSumRecord rec = max_primitive_char_sum(g, cs_y);
      std::printf("q=%llu\n", static_cast<unsigned long long>(rec.q));
      std::printf("num_primitive=%llu\n", static_cast<unsigned long long>(rec.num_primitive));
      std::printf("max_abs=%s\n", format_double(rec.max_abs).c_str());
      std::string tuple;
      for (size_t i = 0; i < rec.argmax_c.size(); ++i) {
        if (i) tuple += ",";
        tuple += std::to_string(rec.argmax_c[i]);
      }
      std::printf("argmax_c=(%s)\n", tuple.c_str());
    } else if (*cen) {
      auto t0 = std::chrono::steady_clock::now();
      CensusResult r = charsum_census(cen_x, cen_y, cen_thresholds, cen_lambda, cfg.threads,
                                      budget_of(cfg, "census_x"));
      double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      emit(census_csv(r), census_json(r), parse_format(cen_fmt), cen_out);
      if (!cen_summary.empty()) {
        write_text_file(cen_summary, census_summary_json(r, cfg.threads, wall));
        std::printf("wrote %s\n", cen_summary.c_str());
      }
      for (size_t i = 0; i < r.thresholds.size(); ++i) {
        std::printf("threshold=%s count=%llu\n", format_double(r.thresholds[i]).c_str(),
                    static_cast<unsigned long long>(r.exceed_counts[i]));
      }
    } else if (*ls) {
      MultTables mult = table_mult(sieve_spf(ls_y));
      auto rows = level_set_counts(ls_y, mult);
      emit(levelsets_csv(rows), levelsets_json(rows), parse_format(ls_fmt), ls_out);
    } else if (*fl) {
      MultTables mult = table_mult(sieve_spf(fl_y));
      std::printf("f_lambda=%llu\n",
                  static_cast<unsigned long long>(f_lambda(fl_y, fl_lambda, mult)));
    } else if (*tk) {
      MultTables mult = table_mult(sieve_spf(std::max<uint64_t>(tk_y, 2)));
      TkResult r = t_k_bruteforce(tk_k, tk_w, tk_y, mult, budget_of(cfg, "tk_tuples"));
      std::printf("value=%llu\n", static_cast<unsigned long long>(r.value));
      std::printf("bound=%s\n", format_double(r.bound).c_str());
    } else if (*lsv) {
      MultTables mult = table_mult(sieve_spf(std::max<uint64_t>(lsv_y, 2)));
      double ratio = large_sieve_check(lsv_k, lsv_w, lsv_x, lsv_y, mult,
                                       budget_of(cfg, "large_sieve_x"),
                                       budget_of(cfg, "large_sieve_y"));
      std::printf("ratio=%s\n", format_double(ratio).c_str());
    } else if (*mom) {
      uint64_t cutoff = mom_cutoff ? mom_cutoff : cfg.prime_cutoff;
      PrimeTable primes = acquire_primes(mom_x, cfg);
      SpfTable spf = sieve_spf(mom_x);
      MomentReport r = moments(mom_x, mom_y, mom_d, cutoff, primes, spf, cfg.threads,
                               budget_of(cfg, "moments_cells"));
      emit(moments_csv(r), moments_json(r), parse_format(mom_fmt), mom_out);
    } else if (*ps) {
      PrimeTable primes = acquire_primes(ps_x, cfg);
      SpfTable spf = sieve_spf(ps_x);
      double s = phi_ratio_sum(ps_x, primes, spf);
      double a_const = artin_constant(cfg.prime_cutoff).value;
      double pix = double(std::upper_bound(primes.primes.begin(), primes.primes.end(), ps_x) -
                          primes.primes.begin());
      std::printf("phi_ratio_sum=%s\n", format_double(s).c_str());
      std::printf("A_pi_x=%s\n", format_double(a_const * pix).c_str());
    } else if (*ti) {
      PrimeTable primes = acquire_primes(ti_x, cfg);
      MultTables mult = table_mult(sieve_spf(ti_x));
      std::vector<TitchmarshResult> rows{titchmarsh_sum(ti_x, primes, mult)};
      emit(titchmarsh_csv(rows), titchmarsh_json(rows), parse_format(ti_fmt), ti_out);
    } else if (*la) {
      LambdaChoice lc = lambda_of(la_d, la_x, la_y, la_c);
      std::printf("lambda=%s\n", format_double(lc.lambda).c_str());
      std::printf("range_c_ok=%s\n", lc.range_c_ok ? "true" : "false");
      std::printf("range_y_ok=%s\n", lc.range_y_ok ? "true" : "false");
    }
  } catch (const BudgetError& e) {
    std::fprintf(stderr, "budget error: %s\n", e.what());
    return 3;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
