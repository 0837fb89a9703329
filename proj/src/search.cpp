#include "opbar/search.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <functional>
#include <map>
#include <stdexcept>

#include "opbar/asymptotics.hpp"
#include "opbar/inequalities.hpp"

namespace opbar {

namespace {

Tri all_of(std::initializer_list<Tri> ts) {
  bool undec = false;
  for (Tri t : ts) {
    if (t == Tri::False) return Tri::False;
    if (t == Tri::Undecided) undec = true;
  }
  return undec ? Tri::Undecided : Tri::True;
}

Tri exact_pos(const mpz_class& v) {
  return v > 0 ? Tri::True : Tri::False;
}

// the ten registered predicates; each returns a tribool at index n
struct Predicate {
  long min_lo;
  std::function<Tri(PbarCache&, long, mpfr_prec_t)> eval;
};

const std::map<std::string, Predicate>& registry() {
  static const std::map<std::string, Predicate> reg = [] {
    std::map<std::string, Predicate> r;

    r["det2_pos"] = {1, [](PbarCache& c, long n, mpfr_prec_t) {
      c.ensure(n + 1);
      return exact_pos(c.at(n) * c.at(n) - c.at(n - 1) * c.at(n + 1));
    }};

    r["det3_pos"] = {2, [](PbarCache& c, long n, mpfr_prec_t) {
      return exact_pos(toeplitz_det(c, n, 3).det);
    }};

    r["two_log_concave"] = {2, [](PbarCache& c, long n, mpfr_prec_t) {
      return exact_pos(two_log_lhs(c, n));
    }};

    r["bounds_b1b2"] = {1, [](PbarCache& c, long n, mpfr_prec_t cap) {
      const mpz_class pb = c.at(n);
      auto pbar_fn = [&pb](mpfr_prec_t p) { return CReal::from_mpz(pb, p); };
      return all_of({decide_less([n](mpfr_prec_t p) { return b1(n, p); },
                                 pbar_fn, cap),
                     decide_less(pbar_fn,
                                 [n](mpfr_prec_t p) { return b2(n, p); },
                                 cap)});
    }};

    r["ttilde_vs_mu6"] = {1, [](PbarCache&, long n, mpfr_prec_t cap) {
      return decide_less(
          [n](mpfr_prec_t p) { return ttilde_bound(n, p); },
          [n](mpfr_prec_t p) {
            return CReal::from_long(1, p) / pow_si(mu(n, p), 6);
          },
          cap);
    }};

    r["s2_lt_1"] = {3, [](PbarCache&, long n, mpfr_prec_t cap) {
      return decide_less([n](mpfr_prec_t p) { return s2_of(n, p); },
                         [](mpfr_prec_t p) { return CReal::from_long(1, p); },
                         cap);
    }};

    r["g_lt_phi_s"] = {2, [](PbarCache& c, long n, mpfr_prec_t cap) {
      const mpq_class s = s_exact(c, n);
      if (!(s > 0 && s < 1)) return Tri::False;  // phi undefined there
      return decide_less(
          [n](mpfr_prec_t p) { return g_of(n, p); },
          [s](mpfr_prec_t p) { return phi_root(CReal::from_mpq(s, p)); },
          cap);
    }};

    r["sandwich_fug"] = {2, [](PbarCache& c, long n, mpfr_prec_t cap) {
      const mpq_class u = u_exact(c, n);
      auto u_fn = [u](mpfr_prec_t p) { return CReal::from_mpq(u, p); };
      return all_of(
          {decide_less([n](mpfr_prec_t p) { return f_of(n, p); }, u_fn, cap),
           decide_less(u_fn, [n](mpfr_prec_t p) { return g_of(n, p); },
                       cap)});
    }};

    r["sandwich_s1ss2"] = {3, [](PbarCache& c, long n, mpfr_prec_t cap) {
      const mpq_class s = s_exact(c, n);
      auto s_fn = [s](mpfr_prec_t p) { return CReal::from_mpq(s, p); };
      return all_of(
          {decide_less([n](mpfr_prec_t p) { return s1_of(n, p); }, s_fn, cap),
           decide_less(s_fn, [n](mpfr_prec_t p) { return s2_of(n, p); },
                       cap)});
    }};

    r["brackets_n59"] = {3, [](PbarCache&, long n, mpfr_prec_t cap) {
      auto part = [n](int which) {
        // which: 0..3 for the r, x, z, w brackets
        return [n, which](mpfr_prec_t p) -> std::array<CReal, 3> {
          const auto bk = brackets(n, p);
          switch (which) {
            case 0: return {bk.r1, mu(n - 2, p), bk.r2};
            case 1: return {bk.x1, mu(n - 1, p), bk.x2};
            case 2: return {bk.z1, mu(n + 1, p), bk.z2};
            default: return {bk.w1, mu(n + 2, p), bk.w2};
          }
        };
      };
      std::vector<Tri> ts;
      for (int which = 0; which < 4; ++which) {
        auto get = part(which);
        ts.push_back(decide_less(
            [get](mpfr_prec_t p) { return get(p)[0]; },
            [get](mpfr_prec_t p) { return get(p)[1]; }, cap));
        ts.push_back(decide_less(
            [get](mpfr_prec_t p) { return get(p)[1]; },
            [get](mpfr_prec_t p) { return get(p)[2]; }, cap));
      }
      bool undec = false;
      for (Tri t : ts) {
        if (t == Tri::False) return Tri::False;
        if (t == Tri::Undecided) undec = true;
      }
      return undec ? Tri::Undecided : Tri::True;
    }};

    return r;
  }();
  return reg;
}

}  // namespace

const std::vector<std::string>& predicate_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& [name, _] : registry()) v.push_back(name);
    return v;
  }();
  return ids;
}

long predicate_min_lo(const std::string& predicate_id) {
  auto it = registry().find(predicate_id);
  if (it == registry().end())
    throw std::domain_error("unknown predicate: " + predicate_id);
  return it->second.min_lo;
}

ThresholdResult find_threshold(PbarCache& c, const std::string& predicate_id,
                               long lo, long hi, mpfr_prec_t precision_cap,
                               long window) {
  auto it = registry().find(predicate_id);
  if (it == registry().end())
    throw std::domain_error("unknown predicate: " + predicate_id);
  const Predicate& pred = it->second;
  if (lo < pred.min_lo)
    throw std::domain_error("range below predicate domain (min lo " +
                            std::to_string(pred.min_lo) + ")");
  if (lo > hi) throw std::domain_error("empty scan range");
  if (window < 0) throw std::domain_error("negative stability window");

  ThresholdResult res;
  res.predicate_id = predicate_id;
  res.lo = lo;
  res.hi = hi;
  res.window = window;
  res.precision_cap = precision_cap;

  long last_fail = lo - 1;
  for (long n = lo; n <= hi; ++n) {
    const Tri t = pred.eval(c, n, precision_cap);
    if (t == Tri::True) continue;
    res.violations.push_back(n);
    if (t == Tri::Undecided) res.undecided.push_back(n);
    last_fail = n;
  }
  const long minimal = last_fail + 1;
  if (minimal <= hi && hi - minimal >= window) {
    res.stable = true;
    res.minimal_n = minimal;
    res.sharp_within_range =
        minimal > lo &&
        std::binary_search(res.violations.begin(), res.violations.end(),
                           minimal - 1);
  }
  return res;
}

Problem51Result problem51_explore(PbarCache& c, long k, long hi, long window,
                                  bool want_trace) {
  if (k < 2) throw std::domain_error("problem51: k must be >= 2");
  const long lo = k - 1;
  if (hi < lo) throw std::domain_error("problem51: hi below k-1");

  Problem51Result res;
  res.k = k;
  res.lo = lo;
  res.hi = hi;
  res.window = window;

  long last_fail = lo - 1;
  for (long n = lo; n <= hi; ++n) {
    const int s = sgn(toeplitz_det(c, n, k).det);
    if (want_trace) {
      if (!res.det_trace.empty() && res.det_trace.back().first == s)
        ++res.det_trace.back().second;
      else
        res.det_trace.emplace_back(s, 1);
    }
    if (s <= 0) {
      res.violations.push_back(n);
      last_fail = n;
    }
  }
  const long minimal = last_fail + 1;
  if (minimal <= hi && hi - minimal >= window) {
    res.stable = true;
    res.empirical_n_k = minimal;
    res.sharp_within_range =
        minimal > lo &&
        std::binary_search(res.violations.begin(), res.violations.end(),
                           minimal - 1);
  }
  return res;
}

namespace {
std::string fixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}
}  // namespace

std::vector<GrowthRow> growth_summary(const std::vector<Problem51Result>& rs) {
  if (rs.size() < 2)
    throw std::domain_error("growth_summary: need at least 2 results");
  std::vector<Problem51Result> sorted = rs;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.k < b.k; });
  for (size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i].k == sorted[i - 1].k)
      throw std::domain_error("growth_summary: duplicate k");

  std::vector<GrowthRow> rows;
  for (size_t i = 0; i < sorted.size(); ++i) {
    GrowthRow row;
    row.k = sorted[i].k;
    row.n_k = sorted[i].empirical_n_k;
    row.ratio_prev = "n/a";
    row.n_over_k2 = "n/a";
    if (row.n_k) {
      row.n_over_k2 = fixed4(static_cast<double>(*row.n_k) /
                             static_cast<double>(row.k * row.k));
      if (i > 0 && sorted[i - 1].empirical_n_k &&
          *sorted[i - 1].empirical_n_k > 0)
        row.ratio_prev =
            fixed4(static_cast<double>(*row.n_k) /
                   static_cast<double>(*sorted[i - 1].empirical_n_k));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace opbar
