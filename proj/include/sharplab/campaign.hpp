#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "sharplab/bernstein.hpp"
#include "sharplab/markov.hpp"
#include "sharplab/random_instances.hpp"
#include "sharplab/report.hpp"
#include "sharplab/sharp_constant.hpp"

namespace sharplab {

inline const std::set<std::string>& campaign_check_catalog() {
  static const std::set<std::string> ids = {"1.2", "1.2a", "2.4", "2.8",
                                            "2.9", "3.1", "3.2", "3.3", "3.7"};
  return ids;
}

struct CampaignSpec {
  std::string id = "campaign";
  std::vector<std::string> inequalities;
  int dim = 2;
  std::string bodies = "lp";  // lp | hrep | vrep | any
  double sigma = 3.0;
  int degree = 3;
  int max_terms = 12;
  int trials = 100;
  int points = 8;
  std::uint64_t seed = 0;
  int resolution = 64;
  double allowance = -1.0;        // negative: per-check automatic policy
  std::string coeff = "both";     // real | complex | both
  int threads = 0;                // 0: hardware count capped by SHARPNESS_LAB_THREADS

  void validate() const {
    for (const auto& id_ : inequalities) {
      if (!campaign_check_catalog().count(id_)) {
        throw std::invalid_argument("campaign: unknown inequality id '" + id_ + "'");
      }
    }
    if (dim < 1) throw std::invalid_argument("campaign: dim must be >= 1");
    if (trials < 0) throw std::invalid_argument("campaign: trials must be >= 0");
    if (points < 1) throw std::invalid_argument("campaign: points must be >= 1");
    if (bodies != "lp" && bodies != "hrep" && bodies != "vrep" && bodies != "any") {
      throw std::invalid_argument("campaign: unknown body class '" + bodies + "'");
    }
    if (coeff != "real" && coeff != "complex" && coeff != "both") {
      throw std::invalid_argument("campaign: unknown coefficient tag '" + coeff + "'");
    }
  }
};

inline int campaign_worker_cap(int requested) {
  if (requested >= 1) return requested;
  int cap = static_cast<int>(std::thread::hardware_concurrency());
  if (cap < 1) cap = 1;
  if (const char* s = std::getenv("SHARPNESS_LAB_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(s, &end, 10);
    if (end != s && v >= 1) cap = std::min(cap, static_cast<int>(v));
  }
  return cap;
}

namespace detail {

inline bool wants(const std::set<std::string>& ids, const char* id) { return ids.count(id) != 0; }

/// Body pair for checks whose right-hand side uses M(K, V): drawn so the
/// constant is computed by an exact rung, never the sampling fallback.
inline std::pair<ConvexBody, ConvexBody> campaign_pair(Rng& rng, int m, const std::string& bodies) {
  if (bodies == "lp") return {random_body(rng, m, "lp"), random_body(rng, m, "lp")};
  if (bodies == "vrep") {
    ConvexBody K = rng.uniform() < 0.5 ? random_body(rng, m, "lp") : random_body(rng, m, "vrep");
    return {std::move(K), random_body(rng, m, "vrep")};
  }
  if (bodies == "hrep") return {random_body(rng, m, "hrep"), random_body(rng, m, "any")};
  return random_exact_pair(rng, m);
}

inline std::string body_class_name(const ConvexBody& b) {
  if (b.is_lp()) return "lp";
  return b.is_hrep() ? "hrep" : "vrep";
}

inline void keep_requested(VerificationReport& from, const std::set<std::string>& ids,
                           VerificationReport& into, int trial, const std::string& instance) {
  for (auto& e : from.entries) {
    const bool sharp_companion = e.inequality.size() > 4 && ids.count(e.inequality.substr(0, 3));
    if (ids.count(e.inequality) || sharp_companion) {
      e.trial = trial;
      if (e.instance.empty()) e.instance = instance;
      into.add(std::move(e));
    }
  }
}

inline void run_campaign_trial(const CampaignSpec& spec, int trial, VerificationReport& out) {
  const std::set<std::string> ids(spec.inequalities.begin(), spec.inequalities.end());
  Rng rng = Rng(spec.seed).fork(static_cast<std::uint64_t>(trial));
  const int m = spec.dim;
  const bool exact_class = spec.bodies == "lp" || spec.bodies == "hrep";
  const double tight = spec.allowance >= 0.0 ? spec.allowance : 1e-6;
  const bool real_coeff = spec.coeff == "real" || (spec.coeff == "both" && trial % 2 == 0);

  if (wants(ids, "1.2")) {
    auto [K, V] = random_exact_pair(rng, m);
    const WitnessedConstant fwd = sharp_constant(K, V);
    const WitnessedConstant rev = sharp_constant(polar(V), polar(K));
    const std::string instance = "duality " + body_class_name(K) + "/" + body_class_name(V);
    const double scale_ref = std::max(1.0, fwd.value);
    out.add(make_entry(trial, instance, "1.2", std::abs(fwd.value - rev.value), tight * scale_ref,
                       fwd.witness_a, 0.0));
    const double pairing = std::abs(dot(fwd.witness_b, fwd.witness_a));
    out.add(make_entry(trial, instance + " witness pairing", "1.2",
                       std::abs(pairing - fwd.value), tight * scale_ref, fwd.witness_b, 0.0));
  }

  if (wants(ids, "1.2a")) {
    const ConvexBody V = random_body(rng, m, spec.bodies == "any" ? "lp" : spec.bodies);
    const ConvexBody B = ConvexBody::lp_ball(LpExponent::finite(2.0), m, 1.0);
    const double t1 = width_diameter(polar(V)).diameter / 2.0;
    const double t2 = sharp_constant(B, polar(V)).value;
    const double t3 = sharp_constant(V, B).value;
    const double t4 = 2.0 / width_diameter(V).width;
    const double spread = std::max({t1, t2, t3, t4}) - std::min({t1, t2, t3, t4});
    const double tol = spec.allowance >= 0.0 ? spec.allowance
                       : (V.is_lp() || V.is_hrep()) ? 1e-9
                                                    : 1e-2;
    out.add(make_entry(trial, "width-diameter chain " + body_class_name(V), "1.2a", spread,
                       tol * std::max(1.0, t3), Vec{}, 0.0));
  }

  const bool any_bernstein = wants(ids, "2.4") || wants(ids, "2.8") || wants(ids, "2.9");
  if (any_bernstein) {
    const bool force_real = wants(ids, "2.9");
    BernsteinOptions opts;
    opts.resolution = spec.resolution;
    opts.allowance = spec.allowance;
    for (int attempt = 0;; ++attempt) {
      try {
        auto [K, V] = campaign_pair(rng, m, spec.bodies);
        const TrigPolynomial f =
            random_trig(rng, V, spec.sigma, spec.max_terms, force_real || real_coeff);
        std::vector<Vec> pts;
        for (int i = 0; i < spec.points; ++i) pts.push_back(random_torus_point(rng, m));
        VerificationReport r = check_bernstein(f, K, f.spectrum(), pts, opts);
        keep_requested(r, ids, out, trial,
                       "trig " + body_class_name(K) + "/" + body_class_name(V) +
                           (force_real || real_coeff ? " real" : " complex"));
        break;
      } catch (const GenerationError&) {
        if (attempt >= 20) throw;
      }
    }
  }

  const bool any_markov = wants(ids, "3.1") || wants(ids, "3.2") || wants(ids, "3.3");
  if (any_markov) {
    ConvexBody K = ConvexBody::lp_ball(LpExponent::finite(2.0), m, 1.0);
    ConvexBody V = K;
    if (wants(ids, "3.2")) {
      V = random_body(rng, m, exact_class ? spec.bodies : "lp");
    } else {
      auto pair = campaign_pair(rng, m, spec.bodies);
      K = std::move(pair.first);
      V = std::move(pair.second);
    }
    const MultiPolynomial P = random_poly(rng, spec.degree, m, !real_coeff);
    std::vector<Vec> pts;
    for (int i = 0; i < spec.points; ++i) pts.push_back(random_point_in_body(rng, V));
    MarkovOptions opts;
    opts.resolution = spec.resolution;
    opts.allowance = spec.allowance;
    VerificationReport r = markov_check(P, K, V, pts, opts);
    keep_requested(r, ids, out, trial,
                   "poly " + body_class_name(K) + "/" + body_class_name(V) +
                       (real_coeff ? " real" : " complex"));
  }

  if (wants(ids, "3.7")) {
    const ConvexBody K = random_body(rng, m, "lp");
    const ConvexBody base = random_body(rng, m, "lp");
    const WeightedBody W = WeightedBody::make(base);
    const MultiPolynomial Q = random_poly(rng, spec.degree, m, !real_coeff);
    std::vector<Vec> pts;
    for (int i = 0; i < spec.points; ++i) {
      Vec x = random_point_in_body(rng, base);
      for (auto& c : x) c = c * c;
      pts.push_back(std::move(x));
    }
    MarkovOptions opts;
    opts.resolution = spec.resolution;
    opts.allowance = spec.allowance;
    VerificationReport r = weighted_markov_check(Q, K, W, pts, opts);
    keep_requested(r, ids, out, trial,
                   "weighted lp/lp" + std::string(real_coeff ? " real" : " complex"));
  }
}

}  // namespace detail

/// Runs the requested checks over seeded random instances. Trials are
/// independent; each derives its stream from (seed, trial index), so parallel
/// and serial execution produce the same report. Trial-level errors become
/// failing entries instead of aborting the run.
inline VerificationReport run_campaign(const CampaignSpec& spec) {
  spec.validate();
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.campaign = spec.id;
  if (spec.inequalities.empty() || spec.trials == 0) {
    report.finalize(0);
    return report;
  }

  std::vector<VerificationReport> per_trial(static_cast<std::size_t>(spec.trials));
  const int workers = std::min(campaign_worker_cap(spec.threads), spec.trials);
  std::atomic<int> next{0};
  auto work = [&]() {
    for (;;) {
      const int t = next.fetch_add(1);
      if (t >= spec.trials) return;
      auto& local = per_trial[static_cast<std::size_t>(t)];
      try {
        detail::run_campaign_trial(spec, t, local);
      } catch (const std::exception& ex) {
        ReportEntry e;
        e.trial = t;
        e.instance = std::string("error: ") + ex.what();
        e.inequality = spec.inequalities.front();
        e.pass = false;
        local.add(std::move(e));
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  for (auto& r : per_trial) report.merge(std::move(r));
  report.finalize(spec.trials);
  report.summary.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace sharplab
