#pragma once

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "l2lab/epstein.hpp"
#include "l2lab/identities/verify.hpp"
#include "l2lab/lfunctions.hpp"
#include "l2lab/modular/eta.hpp"
#include "l2lab/series/sigma_gr.hpp"
#include "l2lab/series/tables.hpp"

namespace l2lab {

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2, kExitCorpus = 3 };

struct CliConfig {
  int digits = 40;
  std::string corpus_path;  // empty: embedded corpus
  bool json = false;
  std::string cache_path;
  int jobs = 1;
};

namespace detail {

inline int default_digits() {
  if (const char* env = std::getenv("L2LAB_DIGITS")) {
    try {
      size_t used = 0;
      int d = std::stoi(env, &used);
      if (used == std::string(env).size()) return d;
    } catch (const std::exception&) {
    }
    throw DomainError(std::string("L2LAB_DIGITS is not an integer: '") + env + "'");
  }
  return 40;
}

inline Corpus open_corpus(const CliConfig& cfg) {
  return cfg.corpus_path.empty() ? default_corpus() : load_corpus(cfg.corpus_path);
}

// real part only when the imaginary part is below the displayed precision
inline std::string format_value(const Complex& z, int digits) {
  Real scale = max(Real(1), abs(z.re));
  if (abs(z.im) < pow10(-digits) * scale) return to_fixed(z.re, digits);
  return to_fixed(z, digits);
}

inline Json value_json(const Complex& z, int digits) {
  return Json{{"re", to_fixed(z.re, digits)}, {"im", to_fixed(z.im, digits)}};
}

inline int cmd_verify(const CliConfig& cfg, bool all, const std::vector<std::string>& ids, const std::string& filter,
                      bool timing, std::ostream& out) {
  Corpus corpus = open_corpus(cfg);
  PrecisionContext ctx = PrecisionContext::with_digits(cfg.digits);
  ConstantCache cache(cfg.cache_path);
  std::vector<VerificationReport> reports;
  if (!ids.empty()) {
    for (const auto& id : ids) reports.push_back(verify_identity(corpus, id, ctx, cache));
  } else {
    VerifyOptions opts;
    opts.filter = all ? "*" : filter;
    opts.jobs = cfg.jobs;
    reports = verify_all(corpus, ctx, cache, opts);
  }
  cache.save();
  bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
  if (cfg.json) {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(report_json(r, timing));
    out << Json{{"reports", arr}, {"summary", summary_json(reports, cfg.digits)}}.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      out << (r.pass ? "PASS " : "FAIL ") << r.id;
      if (r.error.empty()) out << "  residual=" << to_sci(r.abs_residual) << "  terms=" << r.terms_used;
      else out << "  error: " << r.error;
      if (timing) out << "  ms=" << static_cast<long>(r.elapsed_ms);
      out << "\n";
    }
    Json s = summary_json(reports, cfg.digits);
    out << s["passed"].get<size_t>() << "/" << s["total"].get<size_t>() << " passed at " << cfg.digits << " digits\n";
  }
  return ok ? kExitPass : kExitFail;
}

inline int cmd_lvalue(const CliConfig& cfg, long long d, std::ostream& out) {
  PrecisionContext ctx = PrecisionContext::with_digits(cfg.digits);
  PrecisionScope scope(ctx);
  Real v = dirichlet_l2(d, ctx);
  if (cfg.json) out << Json{{"d", d}, {"digits", cfg.digits}, {"value", to_fixed(v, cfg.digits)}}.dump(2) << "\n";
  else out << "L_" << d << "(2) = " << to_fixed(v, cfg.digits) << "\n";
  return kExitPass;
}

inline int cmd_epstein(const CliConfig& cfg, const std::string& z, int N, std::ostream& out) {
  PrecisionContext ctx = PrecisionContext::with_digits(cfg.digits);
  PrecisionScope scope(ctx);
  CMPoint p = CMPoint::parse(z);
  Real v = epstein_gamma0(p.point(ctx), N, ctx);
  if (cfg.json)
    out << Json{{"z", z}, {"N", N}, {"digits", cfg.digits}, {"value", to_fixed(v, cfg.digits)}}.dump(2) << "\n";
  else
    out << "E_" << N << "(" << z << ", 2) = " << to_fixed(v, cfg.digits) << "\n";
  return kExitPass;
}

inline int cmd_alpha(const CliConfig& cfg, const std::string& z, int N, std::ostream& out) {
  PrecisionContext ctx = PrecisionContext::with_digits(cfg.digits);
  PrecisionScope scope(ctx);
  CMPoint p = CMPoint::parse(z);
  Complex a = alpha_n(p.point(ctx), N, ctx);
  if (cfg.json)
    out << Json{{"z", z}, {"N", N}, {"digits", cfg.digits}, {"alpha", value_json(a, cfg.digits)}}.dump(2) << "\n";
  else
    out << "alpha_" << N << "(" << z << ") = " << format_value(a, cfg.digits) << "\n";
  return kExitPass;
}

// (1 - 2 alpha)/Im z, R/Im z and m: the quantities tabulated per CM point
inline int cmd_constants(const CliConfig& cfg, const std::string& z, int N, std::ostream& out) {
  PrecisionContext ctx = PrecisionContext::with_digits(cfg.digits);
  PrecisionScope scope(ctx);
  CMPoint p = CMPoint::parse(z);
  HalfPlanePoint w = p.point(ctx);
  SeriesConstants k = series_constants_from_cm(w, N, ctx);
  const Real& y = w.im();
  Complex c1 = k.c1 / (y * 2), c2 = k.c2 / y;
  if (cfg.json) {
    out << Json{{"z", z},
                {"N", N},
                {"digits", cfg.digits},
                {"one_minus_two_alpha_over_y", value_json(c1, cfg.digits)},
                {"r_over_y", value_json(c2, cfg.digits)},
                {"m", value_json(k.m, cfg.digits)}}
               .dump(2)
        << "\n";
  } else {
    out << "(1-2alpha)/Im z = " << format_value(c1, cfg.digits) << "\n";
    out << "R/Im z          = " << format_value(c2, cfg.digits) << "\n";
    out << "m               = " << format_value(k.m, cfg.digits) << "\n";
  }
  return kExitPass;
}

inline int cmd_tables(const CliConfig& cfg, std::optional<int> which, std::ostream& out) {
  Corpus corpus = open_corpus(cfg);
  PrecisionContext ctx = PrecisionContext::with_digits(cfg.digits);
  PrecisionScope scope(ctx);
  std::vector<const Table*> selected;
  if (which) {
    const Table* t = corpus.find_table(*which);
    if (!t) throw NotFoundError("no table " + std::to_string(*which) + " in the corpus");
    selected.push_back(t);
  } else {
    for (const auto& t : corpus.tables) selected.push_back(&t);
  }
  bool ok = true;
  Json arr = Json::array();
  const char* names[] = {"(1-2alpha)/Im z", "R/Im z", "m"};
  for (const Table* t : selected) {
    TableCheck chk = reconstruct_table(*t, ctx);
    ok = ok && chk.pass;
    if (!cfg.json) out << "table " << chk.number << " (level " << chk.level << ")\n";
    Json rows = Json::array();
    for (const auto& r : chk.rows) {
      const CellCheck* cells[] = {&r.c1, &r.c2, &r.m};
      if (!cfg.json) out << "  z = " << r.point << (r.pass ? "  ok" : "  MISMATCH") << "\n";
      Json jr{{"point", r.point}, {"pass", r.pass}};
      for (int i = 0; i < 3; ++i) {
        const CellCheck& c = *cells[i];
        if (cfg.json) {
          jr[i == 0 ? "c1" : i == 1 ? "c2" : "m"] = Json{{"exact", to_fixed(c.exact, cfg.digits)},
                                                         {"computed", format_value(c.computed, cfg.digits)},
                                                         {"residual", to_sci(c.residual)},
                                                         {"pass", c.pass}};
        } else {
          out << "    " << names[i] << ": exact " << to_fixed(c.exact, cfg.digits) << "  computed "
              << format_value(c.computed, cfg.digits) << "  residual " << to_sci(c.residual) << "\n";
        }
      }
      rows.push_back(jr);
    }
    arr.push_back(Json{{"table", chk.number}, {"level", chk.level}, {"pass", chk.pass}, {"rows", rows}});
  }
  if (cfg.json) out << Json{{"digits", cfg.digits}, {"tables", arr}, {"pass", ok}}.dump(2) << "\n";
  return ok ? kExitPass : kExitFail;
}

}  // namespace detail

// Entry point shared by the l2lab tool and the tests.
inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CliConfig cfg;
  try {
    cfg.digits = detail::default_digits();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  cfg.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  CLI::App app{"Verify series and lattice-sum identities for L-values at s = 2", "l2lab"};
  app.require_subcommand(1);
  auto common = [&](CLI::App* sub) {
    sub->add_option("--digits", cfg.digits, "significant digits (default 40, or $L2LAB_DIGITS)");
    sub->add_flag("--json", cfg.json, "machine-readable output");
  };

  bool all = false, timing = false;
  std::vector<std::string> ids;
  std::string filter;
  auto* verify = app.add_subcommand("verify", "check corpus identities");
  common(verify);
  auto* opt_all = verify->add_flag("--all", all, "every record");
  auto* opt_id = verify->add_option("--id", ids, "record id (repeatable)");
  auto* opt_filter = verify->add_option("--filter", filter, "glob over record ids, e.g. 'd-*'");
  opt_all->excludes(opt_id)->excludes(opt_filter);
  opt_id->excludes(opt_filter);
  verify->add_option("--corpus", cfg.corpus_path, "corpus JSON file (default: built-in)");
  verify->add_option("--cache", cfg.cache_path, "constants cache file");
  verify->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1, 256));
  verify->add_flag("--timing", timing, "include elapsed_ms");

  long long d = 0;
  auto* lvalue = app.add_subcommand("lvalue", "Dirichlet L-value L_d(2)");
  common(lvalue);
  lvalue->add_option("--d", d, "discriminant")->required();

  std::string z;
  int N = 1;
  auto* epstein = app.add_subcommand("epstein", "lattice sum E(z, 2) (or its level-N coset version)");
  common(epstein);
  epstein->add_option("--z", z, "CM point, e.g. '1/2 + 1/2*sqrt(7)*i'")->required();
  epstein->add_option("--N", N, "level 1..4")->check(CLI::Range(1, 4));

  int level = 4;
  auto* alpha = app.add_subcommand("alpha", "modular invariant alpha_N(z)");
  common(alpha);
  alpha->add_option("--z", z, "CM point")->required();
  alpha->add_option("--N", level, "level 2..4")->check(CLI::Range(2, 4));

  auto* constants = app.add_subcommand("constants", "series constants at a CM point");
  common(constants);
  constants->add_option("--z", z, "CM point")->required();
  constants->add_option("--N", level, "level 2..4")->check(CLI::Range(2, 4));

  std::optional<int> table;
  auto* tables = app.add_subcommand("tables", "recompute the tabulated CM-point constants");
  common(tables);
  tables->add_option("--table", table, "table number (default: all)")->check(CLI::Range(1, 3));
  tables->add_option("--corpus", cfg.corpus_path, "corpus JSON file (default: built-in)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (cfg.digits < 10) throw DomainError("--digits must be >= 10");
    if (verify->parsed()) {
      if (!all && ids.empty() && filter.empty()) {
        err << "error: verify needs --all, --id or --filter\n";
        return kExitUsage;
      }
      return detail::cmd_verify(cfg, all, ids, filter, timing, out);
    }
    if (lvalue->parsed()) return detail::cmd_lvalue(cfg, d, out);
    if (epstein->parsed()) return detail::cmd_epstein(cfg, z, N, out);
    if (alpha->parsed()) return detail::cmd_alpha(cfg, z, level, out);
    if (constants->parsed()) return detail::cmd_constants(cfg, z, level, out);
    if (tables->parsed()) return detail::cmd_tables(cfg, table, out);
  } catch (const CorpusError& e) {
    err << "error: " << e.what() << "\n";
    return kExitCorpus;
  } catch (const NotFoundError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}

}  // namespace l2lab
