// Serialization of result types to JSON, CSV and text. Big integers are
// decimal strings; enclosures are {lo, hi, bits} with endpoints rounded
// outward to 40 significant digits. Field order is fixed so identical
// runs serialize byte-identically.
#pragma once

#include <json.hpp>

#include "opbar/asymptotics.hpp"
#include "opbar/inequalities.hpp"
#include "opbar/search.hpp"

namespace opbar {

using ojson = nlohmann::ordered_json;

enum class Format { Json, Csv, Text };
Format parse_format(const std::string& s);  // "json" | "csv" | "text"

ojson enclosure_json(const CReal& v);

ojson seq_json(const std::vector<mpz_class>& vals, long lo);
ojson bounds_row_json(long n, const CReal& lo_bound, const mpz_class& pb,
                      const CReal& hi_bound, Verdict lower, Verdict upper);
ojson profile_json(const BoundProfile& bp);
ojson toeplitz_json(const ToeplitzReport& rep);
ojson threshold_json(const ThresholdResult& r);
ojson problem51_json(const Problem51Result& r);
ojson growth_json(const std::vector<GrowthRow>& rows);
ojson zuckerman_json(const ZuckEstimate& z, const mpz_class& exact);

// rows: header + data; every cell is already a final string
using Table = std::vector<std::vector<std::string>>;
std::string render_csv(const Table& t);
std::string render_text(const Table& t);

// flatten the JSON forms into tables so CSV/text carry identical values
Table seq_table(const std::vector<mpz_class>& vals, long lo);
Table bounds_table(const std::vector<ojson>& rows);
Table profile_table(const std::vector<ojson>& rows);
Table toeplitz_table(const std::vector<ojson>& rows);
Table threshold_table(const ojson& r);
Table problem51_table(const ojson& r);
Table growth_table(const ojson& rows);
Table zuckerman_table(const ojson& z);

}  // namespace opbar
