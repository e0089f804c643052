#include "amtv/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "amtv/errors.hpp"

namespace amtv {

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "text") return Format::Text;
  throw ParseError("unknown format '" + name + "' (json, csv, text)");
}

std::string decimal_string(const hp::Real& x, int sig) {
  if (x.is_zero()) return "0";
  const std::string s = x.to_string(sig);
  const auto epos = s.find('e');
  std::string mant = s.substr(0, epos);
  const long e = std::stol(s.substr(epos + 1));
  std::string sign;
  if (mant[0] == '-') {
    sign = "-";
    mant.erase(0, 1);
  }
  std::string digits;
  for (char c : mant)
    if (c != '.') digits += c;
  // value = 0.d1d2... * 10^(e+1)
  const long point = e + 1;
  std::string out;
  if (point <= 0) {
    out = "0." + std::string(static_cast<size_t>(-point), '0') + digits;
  } else if (point >= static_cast<long>(digits.size())) {
    out = digits + std::string(static_cast<size_t>(point) - digits.size(), '0');
  } else {
    out = digits.substr(0, point) + "." + digits.substr(point);
  }
  return sign + out;
}

std::string sci_string(const hp::Real& x, int sig) { return x.to_string(sig); }

Report value_report(const std::string& index, const HPReal& v, int digits, bool cache_hit) {
  Report r;
  r["index"] = index;
  r["value"] = decimal_string(v.value, digits);
  r["error_bound"] = sci_string(v.err);
  r["digits"] = digits;
  r["cache_hit"] = cache_hit;
  return r;
}

Report catalog_report(const CatalogReport& rep) {
  Report r;
  r["suite"] = rep.suite;
  r["digits"] = rep.digits;
  r["tolerance"] = "1e-" + std::to_string(rep.tol_exp);
  r["max_residual"] = sci_string(rep.max_residual);
  r["pass"] = rep.all_pass;
  r["failures"] = rep.failures;
  r["rows"] = Report::array();
  for (const auto& row : rep.rows) {
    Report j;
    j["anchor"] = row.anchor;
    j["lhs"] = row.lhs;
    j["rhs"] = row.rhs;
    j["group"] = row.group;
    j["residual"] = sci_string(row.residual);
    j["tolerance"] = "1e-" + std::to_string(row.tol_exp);
    j["pass"] = row.pass;
    r["rows"].push_back(j);
  }
  r["groups"] = Report::object();
  for (const auto& [g, members] : rep.groups) r["groups"][g] = members;
  return r;
}

Report basis_report(const BasisReport& rep) {
  Report r;
  r["weight"] = rep.weight;
  r["dim"] = rep.dim();
  r["digits"] = rep.digits;
  r["height"] = rep.height.get_str();
  r["scanned"] = rep.scanned;
  r["status"] = "consistent with dim " + std::to_string(rep.dim()) + " at height " + rep.height.get_str() +
                ", digits " + std::to_string(rep.digits);
  r["basis"] = Report::array();
  for (const auto& b : rep.basis) r["basis"].push_back(to_string(b));
  r["undecided"] = Report::array();
  for (const auto& u : rep.undecided) r["undecided"].push_back(to_string(u));
  r["relations"] = Report::array();
  for (const auto& rel : rep.relations) {
    Report j;
    j["target"] = to_string(rel.target);
    std::vector<std::string> cs;
    std::string expr;
    for (size_t i = 0; i < rel.coefficients.size(); ++i) {
      cs.push_back(rel.coefficients[i].get_str());
      if (rel.coefficients[i] == 0) continue;
      std::string c = rel.coefficients[i].get_str();
      if (!expr.empty() && c[0] != '-') expr += "+";
      expr += c + "*T(" + to_string(rep.basis[i]) + ")";
    }
    j["coefficients"] = cs;
    j["expression"] = expr.empty() ? "0" : expr;
    j["residual"] = sci_string(rel.residual);
    r["relations"].push_back(j);
  }
  return r;
}

Report pslq_report(const PslqResult& res, const std::vector<std::string>& labels, int digits, const mpz_class& height) {
  Report r;
  r["digits"] = digits;
  r["height"] = height.get_str();
  r["iterations"] = res.iterations;
  r["symbols"] = labels;
  switch (res.outcome) {
    case PslqOutcome::Found: {
      r["outcome"] = "found";
      std::vector<std::string> cs;
      for (const auto& c : res.relation) cs.push_back(c.get_str());
      r["coefficients"] = cs;
      break;
    }
    case PslqOutcome::Excluded:
      r["outcome"] = "excluded";
      r["excluded_norm_below"] = res.norm_bound;
      break;
    case PslqOutcome::Exhausted:
      r["outcome"] = "exhausted";
      break;
  }
  return r;
}

namespace {

template <class Sym>
Report sum_report(const FormalSum<Sym>& s) {
  Report r;
  r["terms"] = Report::array();
  for (const auto& [sym, c] : s) {
    Report j;
    j["symbol"] = to_string(sym);
    j["coefficient"] = c.get_str();
    r["terms"].push_back(j);
  }
  r["count"] = s.size();
  return r;
}

std::string scalar_text(const Report& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    bool scalars = std::all_of(v.begin(), v.end(), [](const Report& e) { return !e.is_structured(); });
    if (scalars) {
      std::string out;
      for (const auto& e : v) out += (out.empty() ? "" : " ") + scalar_text(e);
      return out;
    }
  }
  return v.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

const Report* find_table(const Report& r) {
  for (const char* key : {"rows", "relations", "terms"})
    if (r.contains(key) && r[key].is_array()) return &r[key];
  return nullptr;
}

std::vector<std::string> table_columns(const Report& table) {
  std::set<std::string> cols;
  for (const auto& row : table)
    if (row.is_object())
      for (const auto& [k, v] : row.items()) cols.insert(k);
  return {cols.begin(), cols.end()};
}

}  // namespace

Report formal_sum_report(const FormalSum<TIndex>& s) { return sum_report(s); }
Report formal_sum_report(const FormalSum<Word>& s) { return sum_report(s); }

std::string format_report(const Report& r, Format f) {
  if (f == Format::Json) return r.dump(2) + "\n";
  std::ostringstream out;
  if (f == Format::Csv) {
    const Report* table = r.is_object() ? find_table(r) : nullptr;
    if (table) {
      auto cols = table_columns(*table);
      for (size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << csv_escape(cols[i]);
      out << "\n";
      for (const auto& row : *table) {
        for (size_t i = 0; i < cols.size(); ++i)
          out << (i ? "," : "") << csv_escape(row.contains(cols[i]) ? scalar_text(row[cols[i]]) : "");
        out << "\n";
      }
    } else {
      out << "key,value\n";
      for (const auto& [k, v] : r.items()) out << csv_escape(k) << "," << csv_escape(scalar_text(v)) << "\n";
    }
    return out.str();
  }
  // text
  if (!r.is_object()) return scalar_text(r) + "\n";
  size_t width = 0;
  for (const auto& [k, v] : r.items())
    if (!(v.is_array() && !v.empty() && v[0].is_object())) width = std::max(width, k.size());
  for (const auto& [k, v] : r.items()) {
    if (v.is_array() && !v.empty() && v[0].is_object()) continue;
    out << k << std::string(width - k.size() + 2, ' ') << scalar_text(v) << "\n";
  }
  for (const auto& [k, v] : r.items()) {
    if (!(v.is_array() && !v.empty() && v[0].is_object())) continue;
    auto cols = table_columns(v);
    std::vector<size_t> w(cols.size());
    for (size_t i = 0; i < cols.size(); ++i) {
      w[i] = cols[i].size();
      for (const auto& row : v)
        if (row.contains(cols[i])) w[i] = std::max(w[i], scalar_text(row[cols[i]]).size());
    }
    out << "\n" << k << ":\n";
    for (size_t i = 0; i < cols.size(); ++i) out << (i ? "  " : "") << cols[i] << std::string(w[i] - cols[i].size(), ' ');
    out << "\n";
    for (const auto& row : v) {
      for (size_t i = 0; i < cols.size(); ++i) {
        std::string cell = row.contains(cols[i]) ? scalar_text(row[cols[i]]) : "";
        out << (i ? "  " : "") << cell << std::string(w[i] - cell.size(), ' ');
      }
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace amtv
