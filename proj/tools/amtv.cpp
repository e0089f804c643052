#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "amtv/basis.hpp"
#include "amtv/catalog.hpp"
#include "amtv/errors.hpp"
#include "amtv/level4.hpp"
#include "amtv/poset.hpp"
#include "amtv/pslq.hpp"
#include "amtv/report.hpp"
#include "amtv/series.hpp"
#include "amtv/tvalue.hpp"

using namespace amtv;

namespace {

enum Exit { Ok = 0, Other = 1, Parse = 2, Precision = 3, Verification = 4 };

struct Globals {
  int digits = 40;
  std::string height = "1e4";
  std::string cache;
  bool no_cache = false;
  std::string format;
  int jobs = 1;
};

mpz_class parse_height(const std::string& s) {
  mpz_class z;
  if (z.set_str(s, 10) == 0 && z > 0) return z;
  char* end = nullptr;
  double d = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0' || !(d >= 1) || d > 1e300 || d != std::floor(d))
    throw ParseError("height must be a positive integer (e.g. 10000 or 1e4), got '" + s + "'");
  mpz_class out;
  mpz_set_d(out.get_mpz_t(), d);
  return out;
}

EvalOptions eval_options(const Globals& g) {
  EvalOptions o;
  o.jobs = std::max(1, g.jobs);
  if (g.no_cache) return o;
  if (!g.cache.empty()) {
    o.cache_path = g.cache;
  } else if (const char* env = std::getenv("AMTV_CACHE"); env && *env) {
    o.cache_path = env;
  } else {
    o.cache_path = "./amtv-cache.jsonl";
  }
  return o;
}

Format format_for(const Globals& g, Format fallback) { return g.format.empty() ? fallback : parse_format(g.format); }

void emit(const Report& r, const Globals& g, Format fallback = Format::Json) {
  std::cout << format_report(r, format_for(g, fallback));
}

std::string read_poset_arg(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw AmtvError("cannot read poset file '" + arg.substr(1) + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

std::vector<int> parse_composition(const std::string& s) {
  TIndex ix = parse_index(s);
  for (Sign sg : ix.sigmas)
    if (sg == Sign::Minus) throw ParseError("composition entries must be positive: '" + s + "'");
  return ix.ks;
}

bool looks_like_index(const std::string& s) {
  return s.find_first_of("0123456789") != std::string::npos;
}

void error_report(const std::string& kind, const std::string& msg) {
  Report r;
  r["error"] = kind;
  r["message"] = msg;
  std::cerr << r.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alternating multiple T-values: evaluation, relations, posets"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--digits", g.digits, "Working decimal digits")->capture_default_str()->check(CLI::Range(5, 5000));
  app.add_option("--height", g.height, "PSLQ coefficient height bound")->capture_default_str();
  app.add_option("--cache", g.cache, "Persistent value cache (default ./amtv-cache.jsonl, AMTV_CACHE overrides)");
  app.add_flag("--no-cache", g.no_cache, "Disable the persistent cache");
  app.add_option("--format", g.format, "Output format: json, csv, text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--jobs", g.jobs, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  app.fallthrough();

  std::string a1, a2, a3, suite;
  std::vector<std::string> values;
  bool quadrature = false;
  PivotRule rule = PivotRule::Lexicographic;
  bool random_pivot = false;
  uint64_t seed = 0;

  auto* eval = app.add_subcommand("eval", "Evaluate T(index)");
  eval->add_option("index", a1, "Signed index, e.g. \"1,-2\"")->required();
  auto* dualc = app.add_subcommand("dual", "Dual index");
  dualc->add_option("index", a1)->required();
  auto* word = app.add_subcommand("word", "Index to word (T = sign * I(word))");
  word->add_option("index", a1)->required();
  auto* unword = app.add_subcommand("unword", "Word to index (I(word) = sign * T)");
  unword->add_option("word", a1, "Letters m, z, p")->required();
  auto* shuf = app.add_subcommand("shuffle", "Shuffle product of two words or two indices");
  shuf->add_option("a", a1)->required();
  shuf->add_option("b", a2)->required();
  auto* wsum = app.add_subcommand("wsum", "Weighted sum W_l(k, r)");
  wsum->add_option("k", a1)->required();
  wsum->add_option("r", a2)->required();
  wsum->add_option("l", a3)->required();
  auto* psib = app.add_subcommand("psibar", "psi-bar(ks; s) at integer s >= 1");
  psib->add_option("ks", a1, "Composition, e.g. \"1,2\"")->required();
  psib->add_option("s", a2, "Argument s = p + 1")->required();
  psib->add_flag("--quadrature", quadrature, "Cross-check by direct quadrature (12 digits)");
  auto* pexp = app.add_subcommand("poset-expand", "Expand a 3-poset into words");
  pexp->add_option("poset", a1, "JSON text or @file")->required();
  pexp->add_flag("--random-pivot", random_pivot, "Resolve a random incomparable pair at each step");
  pexp->add_option("--seed", seed, "Seed for --random-pivot");
  auto* dim = app.add_subcommand("dim", "Greedy basis search at a weight");
  dim->add_option("weight", a1)->required();
  auto* pslqc = app.add_subcommand("pslq", "Integer relation among expressions");
  pslqc->add_option("values", values, "Expressions, e.g. \"T(1,-1)\" \"zeta(2)\"")->required()->expected(2, -1);
  auto* verify = app.add_subcommand("verify", "Verify a catalog suite");
  verify->add_option("name", a1, "weight2, weight3, weight4, weight5, theorems, special-values");
  verify->add_option("--suite", suite, "Same as the positional suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? Ok : Parse;
  }
  if (random_pivot) rule = PivotRule::Random;

  try {
    auto parse_int = [](const std::string& s, const char* what) {
      try {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
      } catch (const std::exception&) {
        throw ParseError(std::string(what) + " must be an integer, got '" + s + "'");
      }
    };

    if (eval->parsed()) {
      TIndex ix = parse_index(a1);
      if (!is_admissible(ix)) throw NotAdmissible("T(" + a1 + ") diverges (last entry 1 unbarred)");
      Evaluator ev(g.digits, eval_options(g));
      HPReal v = ev.T(ix);
      emit(value_report(to_string(ix), v, g.digits, ev.cache_hits() > 0), g);
    } else if (dualc->parsed()) {
      TIndex ix = parse_index(a1);
      if (!is_admissible(ix)) throw NotAdmissible("T(" + a1 + ") is not admissible");
      TIndex d = dual(ix);
      Report r;
      r["index"] = to_string(ix);
      r["dual"] = to_string(d);
      r["sign"] = to_int(duality_sign(ix));
      if (format_for(g, Format::Text) == Format::Text)
        std::cout << to_string(d) << "\n";
      else
        emit(r, g);
    } else if (word->parsed()) {
      SignedWord sw = to_word(parse_index(a1));
      Report r;
      r["index"] = to_string(parse_index(a1));
      r["sign"] = to_int(sw.sign);
      r["word"] = to_string(sw.word);
      if (format_for(g, Format::Text) == Format::Text)
        std::cout << (sw.sign == Sign::Minus ? "-" : "") << "I(" << to_string(sw.word) << ")\n";
      else
        emit(r, g);
    } else if (unword->parsed()) {
      SignedIndex si = from_word(parse_word(a1));
      Report r;
      r["word"] = to_string(parse_word(a1));
      r["sign"] = to_int(si.sign);
      r["index"] = to_string(si.index);
      if (format_for(g, Format::Text) == Format::Text)
        std::cout << (si.sign == Sign::Minus ? "-" : "") << "T(" << to_string(si.index) << ")\n";
      else
        emit(r, g);
    } else if (shuf->parsed()) {
      Report r;
      if (looks_like_index(a1) && looks_like_index(a2)) {
        r = formal_sum_report(product_as_T(parse_index(a1), parse_index(a2)));
        r["kind"] = "T-product";
      } else {
        r = formal_sum_report(shuffle(parse_word(a1), parse_word(a2)));
        r["kind"] = "word-shuffle";
      }
      emit(r, g);
    } else if (wsum->parsed()) {
      const int k = parse_int(a1, "k"), r = parse_int(a2, "r"), l = parse_int(a3, "l");
      auto s = weighted_sum_symbolic(k, r, l);
      Evaluator ev(g.digits, eval_options(g));
      HPReal v = weighted_sum(k, r, l, ev);
      Report rep = formal_sum_report(s);
      rep["value"] = decimal_string(v.value, g.digits);
      rep["error_bound"] = sci_string(v.err);
      rep["digits"] = g.digits;
      rep["k"] = k;
      rep["r"] = r;
      rep["l"] = l;
      emit(rep, g);
    } else if (psib->parsed()) {
      auto ks = parse_composition(a1);
      const int s = parse_int(a2, "s");
      if (s < 1) throw ParseError("psi-bar argument s must be >= 1");
      auto sum = psi_bar_symbolic(ks, s - 1);
      Evaluator ev(g.digits, eval_options(g));
      std::vector<TIndex> ixs;
      for (const auto& [ix, c] : sum) ixs.push_back(ix);
      auto vals = ev.T_many(ixs);
      auto guard = hp::WorkingPrecision(g.digits);
      hp::Real total(0L), err(0L);
      size_t i = 0;
      for (const auto& [ix, c] : sum) {
        total += hp::Real(c) * vals[i].value;
        err += hp::abs(hp::Real(c)) * vals[i].err;
        ++i;
      }
      Report rep = formal_sum_report(sum);
      rep["ks"] = a1;
      rep["s"] = s;
      rep["value"] = decimal_string(total, g.digits);
      rep["error_bound"] = sci_string(err);
      if (quadrature) {
        ErrBound q = psi_bar_quadrature(ks, s - 1, 12);
        std::ostringstream os;
        os.precision(15);
        os << static_cast<double>(q.value);
        rep["quadrature"] = os.str();
        rep["quadrature_agrees"] = std::fabs(static_cast<double>(q.value) - total.to_double()) < 1e-10;
      }
      emit(rep, g);
    } else if (pexp->parsed()) {
      Poset3 x = Poset3::from_json(read_poset_arg(a1));
      auto words = expand_poset(x, rule, seed);
      Report rep = formal_sum_report(words);
      rep["admissible"] = true;
      rep["linear_extensions"] = count_linear_extensions(x).get_str();
      FormalSum<TIndex> ts;
      for (const auto& [w, c] : words) {
        SignedIndex si = from_word(w);
        ts.add(si.index, c * to_int(si.sign));
      }
      rep["as_T"] = Report::array();
      for (const auto& [ix, c] : ts) rep["as_T"].push_back({{"index", to_string(ix)}, {"coefficient", c.get_str()}});
      emit(rep, g);
    } else if (dim->parsed()) {
      const int w = parse_int(a1, "weight");
      Evaluator ev(g.digits, eval_options(g));
      BasisReport br = find_basis(w, ev, parse_height(g.height));
      emit(basis_report(br), g);
    } else if (pslqc->parsed()) {
      std::vector<ConstExpr> es;
      for (const auto& v : values) es.push_back(parse_expr(v));
      // evaluate with guard digits so the inputs carry the full working precision
      Evaluator ev(g.digits + 10, eval_options(g));
      auto vals = ev.evaluate_many(es);
      std::vector<hp::Real> xs;
      for (const auto& v : vals) xs.push_back(v.value);
      const mpz_class h = parse_height(g.height);
      PslqResult res = pslq_search(xs, g.digits, h);
      Report rep = pslq_report(res, values, g.digits, h);
      if (res.outcome == PslqOutcome::Found) {
        auto guard = hp::WorkingPrecision(g.digits + 10);
        rep["residual"] = sci_string(relation_residual(res.relation, xs));
      }
      emit(rep, g);
    } else if (verify->parsed()) {
      std::string name = !suite.empty() ? suite : a1;
      if (name.empty()) throw ParseError("verify needs a suite name");
      CatalogReport cr = verify_catalog(name, eval_options(g), app.get_option("--digits")->count() ? g.digits : 0);
      emit(catalog_report(cr), g);
      if (!cr.all_pass) return Verification;
    }
  } catch (const ParseError& e) {
    error_report("parse", e.what());
    return Parse;
  } catch (const NotAdmissible& e) {
    error_report("not-admissible", e.what());
    return Parse;
  } catch (const PrecisionError& e) {
    error_report("precision", e.what());
    return Precision;
  } catch (const VerificationError& e) {
    error_report("verification", e.what());
    return Verification;
  } catch (const std::exception& e) {
    error_report("error", e.what());
    return Other;
  }
  return Ok;
}
