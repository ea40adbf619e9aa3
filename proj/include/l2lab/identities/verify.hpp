#pragma once

#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "l2lab/epstein.hpp"
#include "l2lab/identities/constants.hpp"
#include "l2lab/identities/corpus.hpp"
#include "l2lab/numerics/format.hpp"

namespace l2lab {

struct VerificationReport {
  std::string id;
  std::string kind;  // "identity" or "kronecker"
  int digits = 0;
  Real lhs_value, rhs_value, abs_residual;
  bool pass = false;
  long terms_used = 0;
  double elapsed_ms = 0;
  std::string error;  // set when evaluation threw
};

inline Real pass_threshold(int digits) { return pow10(-(digits - 5)); }

namespace detail {

inline Real evaluate_lhs_term(const LhsTerm& t, const PrecisionContext& ctx, ConstantCache& cache, long& terms) {
  Real v;
  if (const auto* s = std::get_if<UpsideDownSeries>(&t.body)) {
    auto r = evaluate_updown(*s, ctx);
    terms += r.terms;
    v = r.value;
  } else if (const auto* f = std::get_if<FibLucasSeries>(&t.body)) {
    auto r = evaluate_fib_series(*f, ctx);
    terms += r.terms;
    v = r.value;
  } else {
    const auto& c = std::get<ConstantTerm>(t.body);
    v = embed_quadratic(c.coeff, ctx) * cache.evaluate(c.constant, ctx);
  }
  if (t.scale) v *= embed_quadratic(*t.scale, ctx);
  return v;
}

inline Real kronecker_term_value(const KroneckerTerm& t, const PrecisionContext& ctx, ConstantCache& cache) {
  Real pref = Real(t.twist) * Real(static_cast<long>(t.d1 * t.d2)) / (cache.evaluate("ZETA4", ctx) * 4);
  if (t.kind == KroneckerKind::KRONECKER) {
    Real l1 = cache.evaluate("L(" + std::to_string(t.d1) + ")", ctx);
    Real l2 = cache.evaluate("L(" + std::to_string(t.d2) + ")", ctx);
    return -(pref * l1 * l2);
  }
  std::int64_t D0 = fundamental_part(t.d1 * t.d2);
  return -(pref * cache.evaluate("ZETA2", ctx) * cache.evaluate("L(" + std::to_string(D0) + ")", ctx));
}

template <class F>
VerificationReport timed_report(std::string id, std::string kind, const PrecisionContext& ctx, F&& body) {
  VerificationReport rep;
  rep.id = std::move(id);
  rep.kind = std::move(kind);
  rep.digits = ctx.digits;
  auto t0 = std::chrono::steady_clock::now();
  PrecisionScope scope(ctx);
  try {
    body(rep);
    rep.abs_residual = abs(rep.lhs_value - rep.rhs_value);
    rep.pass = rep.abs_residual < pass_threshold(ctx.digits);
  } catch (const Error& e) {
    rep.error = e.what();
    rep.pass = false;
  }
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace detail

inline VerificationReport verify_identity(const IdentityRecord& r, const PrecisionContext& ctx, ConstantCache& cache) {
  return detail::timed_report(r.id, "identity", ctx, [&](VerificationReport& rep) {
    Real lhs(0), rhs(0);
    for (const auto& t : r.lhs) lhs += detail::evaluate_lhs_term(t, ctx, cache, rep.terms_used);
    for (const auto& t : r.rhs) rhs += embed_quadratic(t.coeff, ctx) * cache.evaluate(t.constant, ctx);
    rep.lhs_value = lhs;
    rep.rhs_value = rhs;
  });
}

// sum of sign * E(w, 2) over the points against the L-value right-hand side
inline VerificationReport verify_kronecker(const KroneckerInstance& k, const PrecisionContext& ctx, ConstantCache& cache) {
  if (k.points.size() != k.signs.size()) throw DomainError("verify_kronecker: points and signs differ in length");
  return detail::timed_report(k.id, "kronecker", ctx, [&](VerificationReport& rep) {
    Real lhs(0), rhs(0);
    for (size_t i = 0; i < k.points.size(); ++i) {
      Real e = epstein_sl2(k.points[i].point(ctx), ctx);
      if (k.signs[i] > 0) lhs += e; else lhs -= e;
    }
    for (const auto& t : k.rhs) rhs += detail::kronecker_term_value(t, ctx, cache);
    rep.lhs_value = lhs;
    rep.rhs_value = rhs;
    rep.terms_used = static_cast<long>(k.points.size());
  });
}

// Looks the id up among identities and Kronecker instances.
inline VerificationReport verify_identity(const Corpus& c, std::string_view id, const PrecisionContext& ctx,
                                          ConstantCache& cache) {
  if (const auto* r = c.find_identity(id)) return verify_identity(*r, ctx, cache);
  if (const auto* k = c.find_kronecker(id)) return verify_kronecker(*k, ctx, cache);
  throw NotFoundError("unknown identity id '" + std::string(id) + "'");
}

inline bool glob_match(const std::string& pattern, const std::string& text) {
  return fnmatch(pattern.c_str(), text.c_str(), 0) == 0;
}

struct VerifyOptions {
  std::string filter = "*";
  int jobs = 1;
};

// Every selected record, verified on `jobs` threads, reported in id order.
inline std::vector<VerificationReport> verify_all(const Corpus& c, const PrecisionContext& ctx, ConstantCache& cache,
                                                  const VerifyOptions& opts = {}) {
  std::vector<std::pair<std::string, std::function<VerificationReport()>>> work;
  for (const auto& r : c.identities)
    if (glob_match(opts.filter, r.id)) work.emplace_back(r.id, [&r, &ctx, &cache] { return verify_identity(r, ctx, cache); });
  for (const auto& k : c.kronecker)
    if (glob_match(opts.filter, k.id)) work.emplace_back(k.id, [&k, &ctx, &cache] { return verify_kronecker(k, ctx, cache); });
  std::sort(work.begin(), work.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<VerificationReport> out(work.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < work.size(); i = next++) out[i] = work[i].second();
  };
  int jobs = std::max(1, std::min<int>(opts.jobs, static_cast<int>(work.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return out;
}

inline Json report_json(const VerificationReport& r, bool timing) {
  Json j{{"id", r.id},
         {"kind", r.kind},
         {"digits", r.digits},
         {"pass", r.pass},
         {"terms_used", r.terms_used}};
  if (r.error.empty()) {
    j["lhs_value"] = to_fixed(r.lhs_value, r.digits);
    j["rhs_value"] = to_fixed(r.rhs_value, r.digits);
    j["abs_residual"] = to_sci(r.abs_residual);
  } else {
    j["error"] = r.error;
  }
  if (timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

inline Json summary_json(const std::vector<VerificationReport>& reports, int digits) {
  size_t passed = static_cast<size_t>(std::count_if(reports.begin(), reports.end(), [](const auto& r) { return r.pass; }));
  return Json{{"total", reports.size()}, {"passed", passed}, {"failed", reports.size() - passed}, {"digits", digits}};
}

}  // namespace l2lab
