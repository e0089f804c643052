#pragma once

#include <gmpxx.h>

#include <compare>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "amtv/formal_sum.hpp"
#include "amtv/hp.hpp"
#include "amtv/tvalue.hpp"

namespace amtv {

enum class AtomKind : uint8_t { Pi, Log2, Catalan, Zeta, ZetaBar, TBar, TTilde, GenCatalan, LiHalf, TValue };

// A named constant, or a T-value symbol.
struct Atom {
  AtomKind kind = AtomKind::Pi;
  int arg = 0;
  TIndex index;

  static Atom t_value(TIndex ix) { return {AtomKind::TValue, 0, std::move(ix)}; }

  auto operator<=>(const Atom&) const = default;
  bool operator==(const Atom&) const = default;
};

std::string to_string(const Atom& a);

// Sorted (atom, power) pairs with positive powers; empty means 1.
using Monomial = std::vector<std::pair<Atom, int>>;

Monomial operator*(const Monomial& a, const Monomial& b);
std::string to_string(const Monomial& m);

// Rational polynomial in named constants and T-values.
class ConstExpr {
 public:
  ConstExpr() = default;
  ConstExpr(const mpq_class& q);  // NOLINT
  ConstExpr(int q) : ConstExpr(mpq_class(q)) {}  // NOLINT
  explicit ConstExpr(const Atom& a, int power = 1);
  static ConstExpr pi() { return ConstExpr(Atom{AtomKind::Pi, 0, {}}); }
  static ConstExpr log2() { return ConstExpr(Atom{AtomKind::Log2, 0, {}}); }
  static ConstExpr zeta(int k);
  static ConstExpr zetabar(int k);
  static ConstExpr tbar(int k);
  static ConstExpr ttilde(int k);
  static ConstExpr gen_catalan(int m);
  static ConstExpr li_half(int s);
  static ConstExpr T(const TIndex& ix);
  static ConstExpr T(std::string_view notation) { return T(parse_index(notation)); }
  static ConstExpr from(const FormalSum<TIndex>& s);
  // (-1)^n pi^{2n} / (2n+1)!
  static ConstExpr alpha(int n);

  ConstExpr& operator+=(const ConstExpr& o);
  ConstExpr& operator-=(const ConstExpr& o);
  ConstExpr& operator*=(const ConstExpr& o);
  ConstExpr& operator*=(const mpq_class& q);
  ConstExpr operator-() const;

  ConstExpr pow(int n) const;

  bool is_zero() const { return terms_.empty(); }
  // True when no atom occurs.
  bool is_rational() const;
  mpq_class rational_value() const;

  const FormalSum<Monomial>& terms() const { return terms_; }
  std::set<TIndex> t_values() const;

  friend bool operator==(const ConstExpr& a, const ConstExpr& b) { return a.terms_ == b.terms_; }

 private:
  FormalSum<Monomial> terms_;
};

ConstExpr operator+(ConstExpr a, const ConstExpr& b);
ConstExpr operator-(ConstExpr a, const ConstExpr& b);
ConstExpr operator*(ConstExpr a, const ConstExpr& b);

std::string to_string(const ConstExpr& e);

// Numeric value of a named constant (not TValue), correct to `digits`.
hp::Real constant(AtomKind kind, int arg, int digits);
// Names: pi, log2, catalan, zeta, zbar, tbar, ttilde, G, Li (= Li_s(1/2)).
hp::Real constant(const std::string& name, int arg, int digits);

using TValueFn = std::function<hp::Real(const TIndex&)>;
hp::Real evaluate(const ConstExpr& e, int digits, const TValueFn& tvalue = {});

// Euler number E_n (zero for odd n).
mpz_class euler_number(int n);

// Accelerated alternating sums, exposed for cross-checks.
hp::Real eta_cvz(int s, int digits);
hp::Real beta_cvz(int s, int digits);

// Expression grammar: sums/products/rational division/integer powers of
// pi, log2, catalan, zeta(k), zbar(k), tbar(k), ttilde(k), G(m), Li(s),
// alpha(n), T(1,-2,...), W(k,r,l).
ConstExpr parse_expr(std::string_view text);

}  // namespace amtv
