#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "amtv/basis.hpp"
#include "amtv/catalog.hpp"
#include "amtv/hp.hpp"
#include "amtv/level4.hpp"
#include "amtv/pslq.hpp"

namespace amtv {

using Report = nlohmann::json;  // object keys are kept sorted

enum class Format { Json, Csv, Text };

Format parse_format(const std::string& name);

// Plain decimal with `sig` significant digits, e.g. "-1.5707963267".
std::string decimal_string(const hp::Real& x, int sig);
// Short scientific form for error bounds and residuals.
std::string sci_string(const hp::Real& x, int sig = 3);

Report value_report(const std::string& index, const HPReal& v, int digits, bool cache_hit);
Report catalog_report(const CatalogReport& rep);
Report basis_report(const BasisReport& rep);
Report pslq_report(const PslqResult& r, const std::vector<std::string>& labels, int digits, const mpz_class& height);
Report formal_sum_report(const FormalSum<TIndex>& s);
Report formal_sum_report(const FormalSum<Word>& s);

// json: lossless dump; csv: the first table ("rows", "relations", "terms") one line per
// entry, otherwise key,value pairs; text: aligned scalars followed by aligned tables.
std::string format_report(const Report& r, Format f);

}  // namespace amtv
