#include "opbar/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <ostream>

#include "opbar/asymptotics.hpp"
#include "opbar/inequalities.hpp"
#include "opbar/report.hpp"
#include "opbar/search.hpp"

namespace opbar {

namespace {

struct RunConfig {
  long precision_bits = kDefaultPrec;
  std::string cache_path;
  std::string format = "json";
};

void emit_json(std::ostream& out, const ojson& j) { out << j.dump(2) << "\n"; }

void emit(std::ostream& out, const RunConfig& cfg, const ojson& j,
          const Table& data, const std::vector<std::string>& header) {
  switch (parse_format(cfg.format)) {
    case Format::Json:
      emit_json(out, j);
      break;
    case Format::Csv:
      out << render_csv(data);
      break;
    case Format::Text: {
      Table t;
      t.push_back(header);
      t.insert(t.end(), data.begin(), data.end());
      out << render_text(t);
      break;
    }
  }
}

class CacheGuard {
 public:
  explicit CacheGuard(const std::string& path) : path_(path) {
    if (!path_.empty() && std::filesystem::exists(path_)) {
      cache_ = PbarCache::load(path_);
      loaded_max_ = cache_.n_max();
    }
  }
  PbarCache& get() { return cache_; }
  // persist only on success and only if the cache grew
  void persist() {
    if (!path_.empty() && cache_.n_max() > loaded_max_) cache_.save(path_);
  }

 private:
  std::string path_;
  PbarCache cache_;
  long loaded_max_ = -1;
};

int exit_code_for(bool any_undecided) { return any_undecided ? 2 : 0; }

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"overpartition inequality artifact"};
  app.require_subcommand(1);

  RunConfig cfg;
  if (const char* env = std::getenv("OPBAR_PRECISION_BITS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0') {
      err << "error: OPBAR_PRECISION_BITS is not an integer\n";
      return 1;
    }
    cfg.precision_bits = v;
  }
  app.add_option("--precision", cfg.precision_bits,
                 "working precision in bits [128, 8192]")
      ->capture_default_str();
  app.add_option("--cache", cfg.cache_path, "pbar cache file path");
  app.add_option("--format", cfg.format, "output format: json|csv|text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();

  long from = 0, to = 0, k = 3, n = 0, terms = 2, hi = 0, window = 100;
  std::vector<long> ks;
  std::string predicate;
  bool trace = false;

  auto* seq = app.add_subcommand("seq", "print exact pbar(n)");
  seq->add_option("--from", from)->required();
  seq->add_option("--to", to)->required();

  auto* bounds =
      app.add_subcommand("bounds", "per-n B1, pbar, B2 with verdicts");
  bounds->add_option("--from", from)->required();
  bounds->add_option("--to", to)->required();

  auto* profile =
      app.add_subcommand("profile", "u, s, f, g, s1, s2, phi(s) rows");
  profile->add_option("--from", from)->required();
  profile->add_option("--to", to)->required();

  auto* det = app.add_subcommand("det", "exact Toeplitz determinants");
  det->add_option("--k", k)->required();
  det->add_option("--from", from)->required();
  det->add_option("--to", to)->required();

  auto* threshold =
      app.add_subcommand("threshold", "empirical threshold for a predicate");
  threshold->add_option("--predicate", predicate)->required();
  threshold->add_option("--hi", hi)->required();
  long lo_override = -1;
  threshold->add_option("--lo", lo_override,
                        "scan start (default: predicate domain minimum)");
  threshold->add_option("--window", window)->capture_default_str();

  auto* p51 = app.add_subcommand("problem51", "k x k determinant explorer");
  p51->add_option("--k", ks, "order(s); repeat for a growth table")
      ->required();
  p51->add_option("--hi", hi)->required();
  p51->add_option("--window", window)->capture_default_str();
  p51->add_flag("--trace", trace, "include determinant sign run-lengths");

  auto* zuck = app.add_subcommand(
      "zuckerman", "truncated series estimate vs exact value");
  zuck->add_option("--n", n)->required();
  zuck->add_option("--terms", terms)->capture_default_str();

  // the common flags live on the parent; let them match after the
  // subcommand token too (CLI11 keeps subcommands sealed by default)
  for (auto* s : {seq, bounds, profile, det, threshold, p51, zuck})
    s->fallthrough();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }

  if (cfg.precision_bits < 128 || cfg.precision_bits > 8192) {
    err << "error: precision must lie in [128, 8192]\n";
    return 1;
  }
  const auto prec = static_cast<mpfr_prec_t>(cfg.precision_bits);

  try {
    CacheGuard guard(cfg.cache_path);
    PbarCache& cache = guard.get();
    bool any_undecided = false;

    if (seq->parsed()) {
      const auto vals = cache.range(from, to);
      emit(out, cfg, seq_json(vals, from), seq_table(vals, from),
           {"n", "pbar"});
    } else if (bounds->parsed()) {
      if (from < 1 || from > to)
        throw std::domain_error("bounds: need 1 <= from <= to");
      cache.ensure(to);
      ojson rows = ojson::array();
      std::vector<ojson> rowv;
      for (long i = from; i <= to; ++i) {
        const mpz_class& pb = cache.at(i);
        const Verdict lower = compare_escalate(
            [i](mpfr_prec_t p) { return b1(i, p); },
            [&pb](mpfr_prec_t p) { return CReal::from_mpz(pb, p); }, prec);
        const Verdict upper = compare_escalate(
            [&pb](mpfr_prec_t p) { return CReal::from_mpz(pb, p); },
            [i](mpfr_prec_t p) { return b2(i, p); }, prec);
        any_undecided |= lower == Verdict::Undecided ||
                         upper == Verdict::Undecided;
        ojson row =
            bounds_row_json(i, b1(i, prec), pb, b2(i, prec), lower, upper);
        rows.push_back(row);
        rowv.push_back(std::move(row));
      }
      emit(out, cfg, rows, bounds_table(rowv),
           {"n", "b1_lo", "b1_hi", "pbar", "b2_lo", "b2_hi", "lower",
            "upper", "ok"});
    } else if (profile->parsed()) {
      if (from < 3 || from > to)
        throw std::domain_error("profile: need 3 <= from <= to");
      ojson rows = ojson::array();
      std::vector<ojson> rowv;
      for (long i = from; i <= to; ++i) {
        ojson row = profile_json(bound_profile(cache, i, prec));
        rows.push_back(row);
        rowv.push_back(std::move(row));
      }
      emit(out, cfg, rows, profile_table(rowv),
           {"n", "u", "s", "f_lo", "f_hi", "g_lo", "g_hi", "s1_lo", "s1_hi",
            "s2_lo", "s2_hi", "phi_lo", "phi_hi"});
    } else if (det->parsed()) {
      if (from > to) throw std::domain_error("det: need from <= to");
      ojson rows = ojson::array();
      std::vector<ojson> rowv;
      for (long i = from; i <= to; ++i) {
        ojson row = toeplitz_json(toeplitz_det(cache, i, k));
        rows.push_back(row);
        rowv.push_back(std::move(row));
      }
      std::vector<std::string> header{"n", "k", "det"};
      if (k == 3) {
        for (int m = 0; m < 9; ++m)
          header.push_back("minor" + std::to_string(m));
        for (int m = 0; m < 9; ++m)
          header.push_back("sign" + std::to_string(m));
      }
      emit(out, cfg, rows, toeplitz_table(rowv), header);
    } else if (threshold->parsed()) {
      const long lo =
          lo_override >= 0 ? lo_override : predicate_min_lo(predicate);
      const ThresholdResult res =
          find_threshold(cache, predicate, lo, hi, prec, window);
      any_undecided |= !res.undecided.empty();
      const ojson j = threshold_json(res);
      emit(out, cfg, j, threshold_table(j),
           {"predicate", "lo", "hi", "window", "precision_cap", "minimal_n",
            "stable", "sharp", "n_violations", "violations", "undecided"});
    } else if (p51->parsed()) {
      std::vector<Problem51Result> results;
      for (long kk : ks)
        results.push_back(problem51_explore(cache, kk, hi, window, trace));
      if (results.size() == 1) {
        const ojson j = problem51_json(results[0]);
        emit(out, cfg, j, problem51_table(j),
             {"k", "lo", "hi", "window", "empirical_n_k", "stable", "sharp",
              "n_violations", "violations", "exploratory"});
      } else {
        ojson j{{"results", ojson::array()},
                {"growth", growth_json(growth_summary(results))}};
        Table data;
        for (const auto& r : results) {
          const ojson rj = problem51_json(r);
          j["results"].push_back(rj);
          const Table t = problem51_table(rj);
          data.insert(data.end(), t.begin(), t.end());
        }
        const Table gt = growth_table(j["growth"]);
        data.insert(data.end(), gt.begin(), gt.end());
        emit(out, cfg, j, data,
             {"k", "lo", "hi", "window", "empirical_n_k", "stable", "sharp",
              "n_violations", "violations", "exploratory"});
      }
    } else if (zuck->parsed()) {
      const ZuckEstimate z = zuckerman_estimate(n, terms, prec);
      const ojson j = zuckerman_json(z, cache.at(n));
      emit(out, cfg, j, zuckerman_table(j),
           {"n", "terms_used", "value_lo", "value_hi", "error_lo",
            "error_hi", "pbar", "within_bound"});
    }

    guard.persist();
    return exit_code_for(any_undecided);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace opbar
