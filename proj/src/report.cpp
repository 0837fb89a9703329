#include "opbar/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace opbar {

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "text") return Format::Text;
  throw std::domain_error("unknown format: " + s);
}

ojson enclosure_json(const CReal& v) {
  return ojson{{"lo", v.lo_string()},
               {"hi", v.hi_string()},
               {"bits", static_cast<long>(v.precision())}};
}

namespace {
std::string q_str(const mpq_class& q) { return q.get_str(); }

ojson opt_long(const std::optional<long>& v) {
  if (v) return *v;
  return nullptr;
}

std::string join_longs(const std::vector<long>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ';';
    os << v[i];
  }
  return os.str();
}

std::string bool_str(bool b) { return b ? "true" : "false"; }
}  // namespace

ojson seq_json(const std::vector<mpz_class>& vals, long lo) {
  ojson rows = ojson::array();
  for (size_t i = 0; i < vals.size(); ++i)
    rows.push_back(ojson{{"n", lo + static_cast<long>(i)},
                         {"pbar", vals[i].get_str()}});
  return rows;
}

ojson bounds_row_json(long n, const CReal& lo_bound, const mpz_class& pb,
                      const CReal& hi_bound, Verdict lower, Verdict upper) {
  const bool ok = lower == Verdict::Less && upper == Verdict::Less;
  const bool undecided =
      lower == Verdict::Undecided || upper == Verdict::Undecided;
  return ojson{{"n", n},
               {"b1", enclosure_json(lo_bound)},
               {"pbar", pb.get_str()},
               {"b2", enclosure_json(hi_bound)},
               {"lower", verdict_name(lower)},
               {"upper", verdict_name(upper)},
               {"ok", ok},
               {"undecided", undecided}};
}

ojson profile_json(const BoundProfile& bp) {
  ojson j{{"n", bp.n},
          {"u", q_str(bp.u)},
          {"s", q_str(bp.s)},
          {"f", enclosure_json(bp.f)},
          {"g", enclosure_json(bp.g)},
          {"s1", enclosure_json(bp.s1)},
          {"s2", enclosure_json(bp.s2)}};
  j["phi_of_s"] = bp.phi_of_s ? enclosure_json(*bp.phi_of_s) : ojson(nullptr);
  return j;
}

ojson toeplitz_json(const ToeplitzReport& rep) {
  ojson j{{"n", rep.n}, {"k", rep.k}, {"det", rep.det.get_str()}};
  if (rep.k == 3) {
    ojson minors = ojson::array();
    for (const auto& m : rep.minors) minors.push_back(m.get_str());
    j["minors"] = minors;
    j["minor_signs"] = rep.minor_signs;
  }
  return j;
}

ojson threshold_json(const ThresholdResult& r) {
  return ojson{{"predicate", r.predicate_id},
               {"lo", r.lo},
               {"hi", r.hi},
               {"window", r.window},
               {"precision_cap", static_cast<long>(r.precision_cap)},
               {"minimal_n", opt_long(r.minimal_n)},
               {"stable", r.stable},
               {"sharp_within_range", r.sharp_within_range},
               {"n_violations", static_cast<long>(r.violations.size())},
               {"violations", r.violations},
               {"undecided", r.undecided}};
}

ojson problem51_json(const Problem51Result& r) {
  ojson j{{"k", r.k},
          {"lo", r.lo},
          {"hi", r.hi},
          {"window", r.window},
          {"empirical_n_k", opt_long(r.empirical_n_k)},
          {"stable", r.stable},
          {"sharp_within_range", r.sharp_within_range},
          {"n_violations", static_cast<long>(r.violations.size())},
          {"violations", r.violations},
          // k >= 4 has no anchor in the source material
          {"exploratory", r.k >= 4}};
  if (!r.det_trace.empty()) {
    ojson trace = ojson::array();
    for (const auto& [sign, count] : r.det_trace)
      trace.push_back(ojson::array({sign, count}));
    j["det_trace"] = trace;
  }
  return j;
}

ojson growth_json(const std::vector<GrowthRow>& rows) {
  ojson arr = ojson::array();
  for (const auto& row : rows)
    arr.push_back(ojson{{"k", row.k},
                        {"n_k", opt_long(row.n_k)},
                        {"ratio_prev", row.ratio_prev},
                        {"n_over_k2", row.n_over_k2}});
  return arr;
}

ojson zuckerman_json(const ZuckEstimate& z, const mpz_class& exact) {
  const CReal pbI = CReal::from_mpz(exact, z.value.precision());
  const bool within = surely_less(abs(pbI - z.value), z.error_bound);
  return ojson{{"n", z.n},
               {"terms_used", z.terms_used},
               {"value", enclosure_json(z.value)},
               {"error_bound", enclosure_json(z.error_bound)},
               {"pbar", exact.get_str()},
               {"within_bound", within},
               {"imag", enclosure_json(z.imag)}};
}

std::string render_csv(const Table& t) {
  std::ostringstream os;
  for (const auto& row : t) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      os << row[i];
    }
    os << '\n';
  }
  return os.str();
}

std::string render_text(const Table& t) {
  // column-aligned; assumes a header row is present
  std::vector<size_t> w;
  for (const auto& row : t)
    for (size_t i = 0; i < row.size(); ++i) {
      if (w.size() <= i) w.push_back(0);
      w[i] = std::max(w[i], row[i].size());
    }
  std::ostringstream os;
  for (const auto& row : t) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) os << "  ";
      os << row[i];
      if (i + 1 < row.size())
        os << std::string(w[i] - row[i].size(), ' ');
    }
    os << '\n';
  }
  return os.str();
}

namespace {
std::string enc_lo(const ojson& e) { return e.at("lo").get<std::string>(); }
std::string enc_hi(const ojson& e) { return e.at("hi").get<std::string>(); }
}  // namespace

Table seq_table(const std::vector<mpz_class>& vals, long lo) {
  Table t;
  for (size_t i = 0; i < vals.size(); ++i)
    t.push_back({std::to_string(lo + static_cast<long>(i)),
                 vals[i].get_str()});
  return t;
}

Table bounds_table(const std::vector<ojson>& rows) {
  Table t;
  for (const auto& r : rows)
    t.push_back({r.at("n").dump(), enc_lo(r.at("b1")), enc_hi(r.at("b1")),
                 r.at("pbar").get<std::string>(), enc_lo(r.at("b2")),
                 enc_hi(r.at("b2")), r.at("lower").get<std::string>(),
                 r.at("upper").get<std::string>(),
                 bool_str(r.at("ok").get<bool>())});
  return t;
}

Table profile_table(const std::vector<ojson>& rows) {
  Table t;
  for (const auto& r : rows) {
    std::vector<std::string> row{r.at("n").dump(),
                                 r.at("u").get<std::string>(),
                                 r.at("s").get<std::string>()};
    for (const char* f : {"f", "g", "s1", "s2"}) {
      row.push_back(enc_lo(r.at(f)));
      row.push_back(enc_hi(r.at(f)));
    }
    if (r.at("phi_of_s").is_null()) {
      row.push_back("n/a");
      row.push_back("n/a");
    } else {
      row.push_back(enc_lo(r.at("phi_of_s")));
      row.push_back(enc_hi(r.at("phi_of_s")));
    }
    t.push_back(std::move(row));
  }
  return t;
}

Table toeplitz_table(const std::vector<ojson>& rows) {
  Table t;
  for (const auto& r : rows) {
    std::vector<std::string> row{r.at("n").dump(), r.at("k").dump(),
                                 r.at("det").get<std::string>()};
    if (r.contains("minors")) {
      for (const auto& m : r.at("minors")) row.push_back(m.get<std::string>());
      for (const auto& s : r.at("minor_signs")) row.push_back(s.dump());
    }
    t.push_back(std::move(row));
  }
  return t;
}

Table threshold_table(const ojson& r) {
  std::vector<long> viol = r.at("violations").get<std::vector<long>>();
  std::vector<long> und = r.at("undecided").get<std::vector<long>>();
  return Table{{r.at("predicate").get<std::string>(), r.at("lo").dump(),
                r.at("hi").dump(), r.at("window").dump(),
                r.at("precision_cap").dump(),
                r.at("minimal_n").is_null() ? "n/a"
                                            : r.at("minimal_n").dump(),
                bool_str(r.at("stable").get<bool>()),
                bool_str(r.at("sharp_within_range").get<bool>()),
                r.at("n_violations").dump(), join_longs(viol),
                join_longs(und)}};
}

Table problem51_table(const ojson& r) {
  std::vector<long> viol = r.at("violations").get<std::vector<long>>();
  return Table{{r.at("k").dump(), r.at("lo").dump(), r.at("hi").dump(),
                r.at("window").dump(),
                r.at("empirical_n_k").is_null()
                    ? "n/a"
                    : r.at("empirical_n_k").dump(),
                bool_str(r.at("stable").get<bool>()),
                bool_str(r.at("sharp_within_range").get<bool>()),
                r.at("n_violations").dump(), join_longs(viol),
                bool_str(r.at("exploratory").get<bool>())}};
}

Table growth_table(const ojson& rows) {
  Table t;
  for (const auto& r : rows)
    t.push_back({r.at("k").dump(),
                 r.at("n_k").is_null() ? "n/a" : r.at("n_k").dump(),
                 r.at("ratio_prev").get<std::string>(),
                 r.at("n_over_k2").get<std::string>()});
  return t;
}

Table zuckerman_table(const ojson& z) {
  return Table{{z.at("n").dump(), z.at("terms_used").dump(),
                enc_lo(z.at("value")), enc_hi(z.at("value")),
                enc_lo(z.at("error_bound")), enc_hi(z.at("error_bound")),
                z.at("pbar").get<std::string>(),
                bool_str(z.at("within_bound").get<bool>())}};
}

}  // namespace opbar
