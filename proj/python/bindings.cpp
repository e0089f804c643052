#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "amtv/basis.hpp"
#include "amtv/catalog.hpp"
#include "amtv/errors.hpp"
#include "amtv/level4.hpp"
#include "amtv/poset.hpp"
#include "amtv/pslq.hpp"
#include "amtv/report.hpp"
#include "amtv/series.hpp"
#include "amtv/tvalue.hpp"

namespace py = pybind11;
using namespace amtv;

namespace {

py::object to_python(const Report& r) { return py::module_::import("json").attr("loads")(r.dump()); }

template <class Sym>
py::dict sum_dict(const FormalSum<Sym>& s) {
  py::dict d;
  for (const auto& [sym, c] : s) d[py::str(to_string(sym))] = c.get_str();
  return d;
}

mpz_class height_of(long h) {
  if (h < 1) throw ParseError("height must be positive");
  return mpz_class(h);
}

}  // namespace

PYBIND11_MODULE(_amtv, m) {
  m.doc() = "Alternating multiple T-values";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const NotAdmissible& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const PrecisionError& e) {
      PyErr_SetString(PyExc_ArithmeticError, e.what());
    }
  });

  m.def(
      "t_value",
      [](const std::string& index, int digits) {
        TIndex ix = parse_index(index);
        if (!is_admissible(ix)) throw NotAdmissible("T(" + index + ") is not admissible");
        Evaluator ev(digits);
        return decimal_string(ev.T(ix).value, digits);
      },
      py::arg("index"), py::arg("digits") = 40, "Decimal value of T(index) to the given digits.");
  m.def(
      "evaluate",
      [](const std::string& expr, int digits) {
        Evaluator ev(digits);
        return decimal_string(ev.evaluate(parse_expr(expr)).value, digits);
      },
      py::arg("expr"), py::arg("digits") = 40, "Decimal value of a constant expression.");
  m.def(
      "dual", [](const std::string& index) { return to_string(dual(parse_index(index))); }, py::arg("index"));
  m.def(
      "duality_sign", [](const std::string& index) { return to_int(duality_sign(parse_index(index))); },
      py::arg("index"));
  m.def(
      "to_word",
      [](const std::string& index) {
        SignedWord sw = to_word(parse_index(index));
        return py::make_tuple(to_int(sw.sign), to_string(sw.word));
      },
      py::arg("index"), "T(index) = sign * I(word).");
  m.def(
      "from_word",
      [](const std::string& word) {
        SignedIndex si = from_word(parse_word(word));
        return py::make_tuple(to_int(si.sign), to_string(si.index));
      },
      py::arg("word"), "I(word) = sign * T(index).");
  m.def(
      "shuffle", [](const std::string& a, const std::string& b) { return sum_dict(shuffle(parse_word(a), parse_word(b))); },
      py::arg("a"), py::arg("b"));
  m.def(
      "weighted_sum", [](int k, int r, int l) { return sum_dict(weighted_sum_symbolic(k, r, l)); }, py::arg("k"),
      py::arg("r"), py::arg("l"));
  m.def(
      "psi_bar", [](const std::vector<int>& ks, int s) { return sum_dict(psi_bar_symbolic(ks, s - 1)); }, py::arg("ks"),
      py::arg("s"), "psi-bar(ks; s) as a combination of T-values.");
  m.def(
      "expand_poset", [](const std::string& json) { return sum_dict(expand_poset(Poset3::from_json(json))); },
      py::arg("poset_json"));
  m.def(
      "find_basis",
      [](int weight, int digits, long height) {
        Evaluator ev(digits);
        return to_python(basis_report(find_basis(weight, ev, height_of(height))));
      },
      py::arg("weight"), py::arg("digits") = 60, py::arg("height") = 10000);
  m.def(
      "pslq",
      [](const std::vector<std::string>& exprs, int digits, long height) -> py::object {
        std::vector<ConstExpr> es;
        for (const auto& e : exprs) es.push_back(parse_expr(e));
        Evaluator ev(digits + 10);
        auto vals = ev.evaluate_many(es);
        std::vector<hp::Real> xs;
        for (const auto& v : vals) xs.push_back(v.value);
        PslqResult r = pslq_search(xs, digits, height_of(height));
        if (r.outcome != PslqOutcome::Found) return py::none();
        py::list out;
        for (const auto& c : r.relation) out.append(py::int_(py::str(c.get_str())));
        return out;
      },
      py::arg("exprs"), py::arg("digits") = 40, py::arg("height") = 10000,
      "Integer relation among the expressions, or None.");
  m.def(
      "verify_catalog", [](const std::string& suite) { return to_python(catalog_report(verify_catalog(suite))); },
      py::arg("suite"));
}
