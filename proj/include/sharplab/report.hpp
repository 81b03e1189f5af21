#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sharplab/vec.hpp"

namespace sharplab {

/// One checked instance of one inequality. `ratio` is lhs/rhs when rhs > 0;
/// a vanishing rhs is a degenerate (vacuous) case that passes only when the
/// lhs vanishes too.
struct ReportEntry {
  int trial = 0;
  std::string instance;
  std::string inequality;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  Vec witness;
  bool pass = true;
};

struct ReportSummary {
  int trials = 0;
  int failures = 0;
  double max_ratio = 0.0;
  double wall_seconds = 0.0;  // in-memory only, never serialized
};

struct VerificationReport {
  std::string campaign;
  std::vector<ReportEntry> entries;
  ReportSummary summary;

  void add(ReportEntry e) { entries.push_back(std::move(e)); }

  void merge(VerificationReport&& other) {
    for (auto& e : other.entries) entries.push_back(std::move(e));
  }

  /// Recompute failure count and max ratio; `trials` is the number of
  /// generated instances, which the caller knows.
  void finalize(int trials) {
    summary.trials = trials;
    summary.failures = 0;
    summary.max_ratio = 0.0;
    for (const auto& e : entries) {
      if (!e.pass) ++summary.failures;
      if (std::isfinite(e.ratio)) summary.max_ratio = std::max(summary.max_ratio, e.ratio);
    }
  }

  int distinct_trials() const {
    std::set<int> ids;
    for (const auto& e : entries) ids.insert(e.trial);
    return static_cast<int>(ids.size());
  }
};

inline ReportEntry make_entry(int trial, std::string instance, std::string inequality, double lhs,
                              double rhs, Vec witness, double allowance) {
  ReportEntry e;
  e.trial = trial;
  e.instance = std::move(instance);
  e.inequality = std::move(inequality);
  e.lhs = lhs;
  e.rhs = rhs;
  e.witness = std::move(witness);
  if (rhs > 0.0) {
    e.ratio = lhs / rhs;
    e.pass = e.ratio <= 1.0 + allowance;
  } else {
    e.pass = lhs <= 1e-12;
    e.ratio = e.pass ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return e;
}

/// Entry asserting lhs = rhs rather than lhs <= rhs: passes only when the
/// ratio stays inside [1 - allowance, 1 + allowance]. Used for sharpness
/// instances, where undershooting the bound is as much a defect as
/// overshooting it.
inline ReportEntry make_equality_entry(int trial, std::string instance, std::string inequality,
                                       double lhs, double rhs, Vec witness, double allowance) {
  ReportEntry e = make_entry(trial, std::move(instance), std::move(inequality), lhs, rhs,
                             std::move(witness), allowance);
  if (rhs > 0.0) e.pass = std::abs(e.ratio - 1.0) <= allowance;
  return e;
}

/// Stamp campaign-level identifiers onto entries produced by a lower-level
/// check that does not know them.
inline void retag(VerificationReport& report, int trial, const std::string& instance) {
  for (auto& e : report.entries) {
    e.trial = trial;
    if (e.instance.empty()) e.instance = instance;
  }
}

}  // namespace sharplab
