#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "opbar/report.hpp"
#include "opbar/search.hpp"

using opbar::PbarCache;
using opbar::ThresholdResult;

namespace {

PbarCache& cache() {
  static PbarCache c;
  return c;
}

const std::vector<long> kDet3Viol = {2,  4,  5,  7,  8,  10, 11, 13, 14, 16, 17,
                                     19, 20, 22, 23, 26, 29, 32, 35, 38, 41};
const std::vector<long> kS1SS2Viol = {3, 4, 5, 6, 8, 9, 11, 12, 14, 15, 18};
const std::vector<long> kGlPhiViol = {2,  3,  4,  8,  10, 11, 13, 14,
                                      16, 17, 19, 20, 22, 23, 26, 29};
const std::vector<long> kB1B2Viol = {
    1,  2,  3,  4,  5,  6,  7,  8,  9,  10, 11, 12, 13, 14, 15, 16,
    17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32,
    33, 34, 35, 36, 38, 39, 40, 41, 42, 43, 44, 45, 46, 47, 48, 49,
    50, 51, 53, 54, 56, 57, 59, 60, 62, 63, 65, 66, 68, 69, 71, 72,
    74, 75, 77, 78, 80, 81, 83, 84, 86, 87, 89, 90, 92, 93};
const std::vector<long> kFugViol = {
    2,  3,  4,  5,  6,  7,  8,  9,  10, 11, 12, 13, 14, 15, 16, 17,
    18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32, 33,
    34, 35, 36, 37, 38, 39, 40, 41, 42, 43, 44, 45, 46, 47, 48, 49,
    50, 51, 52, 53, 54, 55, 56, 57, 58, 59, 60, 62, 63, 64, 65, 66,
    68, 69, 71, 72, 74, 75, 77, 78, 80, 81, 83, 84, 86, 87, 89, 90};

}  // namespace

TEST_CASE("registry lists the ten predicates with their domains") {
  const auto& ids = opbar::predicate_ids();
  REQUIRE(ids.size() == 10);
  for (const char* id :
       {"det2_pos", "det3_pos", "two_log_concave", "bounds_b1b2",
        "ttilde_vs_mu6", "s2_lt_1", "g_lt_phi_s", "sandwich_fug",
        "sandwich_s1ss2", "brackets_n59"}) {
    CAPTURE(id);
    CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
  }
  CHECK(opbar::predicate_min_lo("det2_pos") == 1);
  CHECK(opbar::predicate_min_lo("det3_pos") == 2);
  CHECK(opbar::predicate_min_lo("two_log_concave") == 2);
  CHECK(opbar::predicate_min_lo("bounds_b1b2") == 1);
  CHECK(opbar::predicate_min_lo("ttilde_vs_mu6") == 1);
  CHECK(opbar::predicate_min_lo("s2_lt_1") == 3);
  CHECK(opbar::predicate_min_lo("g_lt_phi_s") == 2);
  CHECK(opbar::predicate_min_lo("sandwich_fug") == 2);
  CHECK(opbar::predicate_min_lo("sandwich_s1ss2") == 3);
  CHECK(opbar::predicate_min_lo("brackets_n59") == 3);
  CHECK_THROWS_AS(opbar::predicate_min_lo("nope"), std::domain_error);
}

TEST_CASE("det2_pos: threshold 3, zeros at 1 and 2") {
  const auto r = opbar::find_threshold(cache(), "det2_pos", 1, 2000);
  CHECK(r.predicate_id == "det2_pos");
  CHECK(r.violations == std::vector<long>{1, 2});
  REQUIRE(r.minimal_n.has_value());
  CHECK(*r.minimal_n == 3);
  CHECK(r.stable);
  CHECK(r.sharp_within_range);
  CHECK(r.undecided.empty());
}

TEST_CASE("det3_pos: threshold 42 with the full violation set") {
  const auto r = opbar::find_threshold(cache(), "det3_pos", 2, 500);
  CHECK(r.violations == kDet3Viol);
  REQUIRE(r.minimal_n.has_value());
  CHECK(*r.minimal_n == 42);
  CHECK(r.stable);
  CHECK(r.sharp_within_range);
  // re-scan over a wider range leaves the threshold unchanged
  const auto wide = opbar::find_threshold(cache(), "det3_pos", 3, 1200);
  REQUIRE(wide.minimal_n.has_value());
  CHECK(*wide.minimal_n == 42);
}

TEST_CASE("two_log_concave: threshold 42, identical violation set") {
  const auto r = opbar::find_threshold(cache(), "two_log_concave", 2, 500);
  CHECK(r.violations == kDet3Viol);
  REQUIRE(r.minimal_n.has_value());
  CHECK(*r.minimal_n == 42);
  CHECK(r.violations.back() == 41);  // largest violator sits just below
  CHECK(r.sharp_within_range);
}

TEST_CASE("bounds_b1b2: threshold 94") {
  const auto r = opbar::find_threshold(cache(), "bounds_b1b2", 1, 300);
  CHECK(r.violations == kB1B2Viol);
  REQUIRE(r.minimal_n.has_value());
  CHECK(*r.minimal_n == 94);
  CHECK(r.stable);
  CHECK(r.sharp_within_range);
  CHECK(r.undecided.empty());
}

TEST_CASE("ttilde_vs_mu6: threshold 275 and the stability window rule") {
  auto& c = cache();
  const auto r = opbar::find_threshold(c, "ttilde_vs_mu6", 1, 400);
  REQUIRE(r.minimal_n.has_value());
  CHECK(*r.minimal_n == 275);
  CHECK(r.stable);
  CHECK(r.violations.size() == 274);
  CHECK(r.violations.front() == 1);
  CHECK(r.violations.back() == 274);
  CHECK(r.sharp_within_range);

  // hi - 275 = 25 < 100: the default window suppresses the threshold
  const auto tight = opbar::find_threshold(c, "ttilde_vs_mu6", 1, 300);
  CHECK_FALSE(tight.minimal_n.has_value());
  CHECK_FALSE(tight.stable);
  CHECK(tight.violations.size() == 274);

  // an explicit smaller window reinstates it
  const auto narrow =
      opbar::find_threshold(c, "ttilde_vs_mu6", 1, 300, opbar::kPrecCap, 10);
  REQUIRE(narrow.minimal_n.has_value());
  CHECK(*narrow.minimal_n == 275);
}

TEST_CASE("s2_lt_1: clean from the domain edge, so not sharp") {
  const auto r = opbar::find_threshold(cache(), "s2_lt_1", 3, 150);
  CHECK(r.violations.empty());
  REQUIRE(r.minimal_n.has_value());
  CHECK(*r.minimal_n == 3);
  CHECK(r.stable);
  CHECK_FALSE(r.sharp_within_range);  // nothing fails below the range
}

TEST_CASE("g_lt_phi_s: threshold 30; n=2 counts as violation (s(2)=1)") {
  const auto r = opbar::find_threshold(cache(), "g_lt_phi_s", 2, 200);
  CHECK(r.violations == kGlPhiViol);
  REQUIRE(r.minimal_n.has_value());
  CHECK(*r.minimal_n == 30);
  CHECK(r.sharp_within_range);
}

TEST_CASE("sandwich_fug: threshold 91") {
  const auto r = opbar::find_threshold(cache(), "sandwich_fug", 2, 250);
  CHECK(r.violations == kFugViol);
  REQUIRE(r.minimal_n.has_value());
  CHECK(*r.minimal_n == 91);
  CHECK(r.stable);
  CHECK(r.sharp_within_range);
}

TEST_CASE("sandwich_s1ss2: threshold 19") {
  const auto r = opbar::find_threshold(cache(), "sandwich_s1ss2", 3, 150);
  CHECK(r.violations == kS1SS2Viol);
  REQUIRE(r.minimal_n.has_value());
  CHECK(*r.minimal_n == 19);
  CHECK(r.sharp_within_range);
}

TEST_CASE("brackets_n59: empirical threshold 56") {
  const auto r = opbar::find_threshold(cache(), "brackets_n59", 3, 170);
  REQUIRE(r.minimal_n.has_value());
  CHECK(*r.minimal_n == 56);
  std::vector<long> expect;
  for (long n = 3; n <= 55; ++n) expect.push_back(n);
  CHECK(r.violations == expect);
  CHECK(r.undecided.empty());
}

TEST_CASE("find_threshold argument validation") {
  auto& c = cache();
  CHECK_THROWS_AS(opbar::find_threshold(c, "unknown_pred", 1, 10),
                  std::domain_error);
  CHECK_THROWS_AS(opbar::find_threshold(c, "det3_pos", 1, 10),
                  std::domain_error);  // lo below domain minimum 2
  CHECK_THROWS_AS(opbar::find_threshold(c, "det2_pos", 5, 4),
                  std::domain_error);
  CHECK_THROWS_AS(opbar::find_threshold(c, "det2_pos", 1, 10, 256, -1),
                  std::domain_error);
}

TEST_CASE("threshold results serialize deterministically") {
  auto& c = cache();
  const auto a = opbar::find_threshold(c, "det3_pos", 2, 200);
  const auto b = opbar::find_threshold(c, "det3_pos", 2, 200);
  CHECK(opbar::threshold_json(a).dump() == opbar::threshold_json(b).dump());
}

TEST_CASE("problem51: k = 2 and k = 3 reproduce the registered thresholds") {
  auto& c = cache();
  const auto r2 = opbar::problem51_explore(c, 2, 300);
  CHECK(r2.lo == 1);
  CHECK(r2.violations == std::vector<long>{1, 2});
  REQUIRE(r2.empirical_n_k.has_value());
  CHECK(*r2.empirical_n_k == 3);
  CHECK(r2.stable);
  CHECK(r2.sharp_within_range);
  CHECK(r2.det_trace.empty());  // no trace unless requested

  const auto r3 = opbar::problem51_explore(c, 3, 300);
  CHECK(r3.lo == 2);
  REQUIRE(r3.empirical_n_k.has_value());
  CHECK(*r3.empirical_n_k == 42);
  CHECK(r3.violations == kDet3Viol);
}

TEST_CASE("problem51: k = 4 exploration finds 141") {
  const auto r4 = opbar::problem51_explore(cache(), 4, 260);
  CHECK(r4.lo == 3);
  REQUIRE(r4.empirical_n_k.has_value());
  CHECK(*r4.empirical_n_k == 141);
  CHECK(r4.stable);
  CHECK(r4.violations.size() == 59);
  CHECK(r4.violations.front() == 35);
  CHECK(r4.violations.back() == 140);
  CHECK(r4.sharp_within_range);
}

TEST_CASE("problem51: determinant sign trace is run-length encoded") {
  const auto r = opbar::problem51_explore(cache(), 2, 10, 100, true);
  REQUIRE(r.det_trace.size() == 2);
  CHECK(r.det_trace[0] == std::pair<int, long>{0, 2});   // n = 1, 2: det 0
  CHECK(r.det_trace[1] == std::pair<int, long>{1, 8});   // n = 3..10: positive
  // trace covers the whole scanned range
  long total = 0;
  for (const auto& [s, cnt] : r.det_trace) total += cnt;
  CHECK(total == r.hi - r.lo + 1);
}

TEST_CASE("problem51 argument validation and window rule") {
  auto& c = cache();
  CHECK_THROWS_AS(opbar::problem51_explore(c, 1, 100), std::domain_error);
  CHECK_THROWS_AS(opbar::problem51_explore(c, 5, 2), std::domain_error);
  // stable only when hi leaves enough room past the last violation
  const auto cramped = opbar::problem51_explore(c, 3, 60);
  CHECK_FALSE(cramped.empirical_n_k.has_value());
  CHECK_FALSE(cramped.stable);
}

TEST_CASE("growth summary: ratios over sorted distinct k") {
  auto& c = cache();
  std::vector<opbar::Problem51Result> rs;
  rs.push_back(opbar::problem51_explore(c, 3, 300));
  rs.push_back(opbar::problem51_explore(c, 2, 300));  // unsorted on purpose
  const auto rows = opbar::growth_summary(rs);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].k == 2);
  REQUIRE(rows[0].n_k.has_value());
  CHECK(*rows[0].n_k == 3);
  CHECK(rows[0].ratio_prev == "n/a");
  CHECK(rows[0].n_over_k2 == "0.7500");
  CHECK(rows[1].k == 3);
  CHECK(rows[1].ratio_prev == "14.0000");
  CHECK(rows[1].n_over_k2 == "4.6667");

  CHECK_THROWS_AS(opbar::growth_summary({rs[0]}), std::domain_error);
  std::vector<opbar::Problem51Result> dup = {rs[0], rs[0]};
  CHECK_THROWS_AS(opbar::growth_summary(dup), std::domain_error);

  // an unstable scan flows through as n/a
  std::vector<opbar::Problem51Result> with_unstable;
  with_unstable.push_back(opbar::problem51_explore(c, 2, 300));
  with_unstable.push_back(opbar::problem51_explore(c, 4, 60));
  const auto rows2 = opbar::growth_summary(with_unstable);
  CHECK(rows2[1].n_k == std::nullopt);
  CHECK(rows2[1].ratio_prev == "n/a");
  CHECK(rows2[1].n_over_k2 == "n/a");
}
