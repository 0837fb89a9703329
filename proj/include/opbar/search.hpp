// Threshold discovery over registered inequality predicates, and the
// Problem 5.1 explorer for k x k Toeplitz determinants.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opbar/interval.hpp"
#include "opbar/overpartition.hpp"

namespace opbar {

struct ThresholdResult {
  std::string predicate_id;
  long lo = 0, hi = 0;
  long window = 100;
  mpfr_prec_t precision_cap = kPrecCap;
  // smallest N with the predicate holding on all of [N, hi]; absent when
  // hi - N < window (guards against spurious thresholds at range edges)
  std::optional<long> minimal_n;
  bool stable = false;
  bool sharp_within_range = false;  // minimal_n - 1 is a violation in range
  std::vector<long> violations;     // all failing n (undecided included)
  std::vector<long> undecided;      // the undecided-at-cap subset
};

// registered predicate ids, in canonical order
const std::vector<std::string>& predicate_ids();
// smallest index at which a predicate is defined
long predicate_min_lo(const std::string& predicate_id);

ThresholdResult find_threshold(PbarCache& c, const std::string& predicate_id,
                               long lo, long hi,
                               mpfr_prec_t precision_cap = kPrecCap,
                               long window = 100);

struct Problem51Result {
  long k = 0;
  long lo = 0, hi = 0;
  long window = 100;
  std::optional<long> empirical_n_k;
  bool stable = false;
  bool sharp_within_range = false;
  std::vector<long> violations;  // n with det <= 0
  // run-length encoding of determinant signs over [lo, hi], as (sign, count)
  std::vector<std::pair<int, long>> det_trace;
};

Problem51Result problem51_explore(PbarCache& c, long k, long hi,
                                  long window = 100,
                                  bool want_trace = false);

struct GrowthRow {
  long k;
  std::optional<long> n_k;
  std::string ratio_prev;  // n(k)/n(k_prev), "n/a" when unavailable
  std::string n_over_k2;   // n(k)/k^2, "n/a" when unavailable
};

// simple ratio diagnostics over >= 2 distinct-k results; no fitting
std::vector<GrowthRow> growth_summary(const std::vector<Problem51Result>& rs);

}  // namespace opbar
