#include "amtv/constants.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include "amtv/errors.hpp"

namespace amtv {

std::string to_string(const Atom& a) {
  switch (a.kind) {
    case AtomKind::Pi:
      return "pi";
    case AtomKind::Log2:
      return "log2";
    case AtomKind::Catalan:
      return "catalan";
    case AtomKind::Zeta:
      return "zeta(" + std::to_string(a.arg) + ")";
    case AtomKind::ZetaBar:
      return "zbar(" + std::to_string(a.arg) + ")";
    case AtomKind::TBar:
      return "tbar(" + std::to_string(a.arg) + ")";
    case AtomKind::TTilde:
      return "ttilde(" + std::to_string(a.arg) + ")";
    case AtomKind::GenCatalan:
      return "G(" + std::to_string(a.arg) + ")";
    case AtomKind::LiHalf:
      return "Li(" + std::to_string(a.arg) + ")";
    case AtomKind::TValue:
      return "T(" + to_string(a.index) + ")";
  }
  return "?";
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  std::map<Atom, int> acc;
  for (const auto& [x, p] : a) acc[x] += p;
  for (const auto& [x, p] : b) acc[x] += p;
  return Monomial(acc.begin(), acc.end());
}

std::string to_string(const Monomial& m) {
  std::string s;
  for (const auto& [x, p] : m) {
    if (!s.empty()) s += '*';
    s += to_string(x);
    if (p != 1) s += "^" + std::to_string(p);
  }
  return s;
}

ConstExpr::ConstExpr(const mpq_class& q) { terms_.add(Monomial{}, q); }

ConstExpr::ConstExpr(const Atom& a, int power) {
  if (power == 0)
    terms_.add(Monomial{}, 1);
  else
    terms_.add(Monomial{{a, power}}, 1);
}

ConstExpr ConstExpr::zeta(int k) {
  if (k < 2) throw AmtvError("zeta(k) needs k >= 2");
  return ConstExpr(Atom{AtomKind::Zeta, k, {}});
}

ConstExpr ConstExpr::zetabar(int k) {
  if (k == 0) return ConstExpr(mpq_class(1, 2));
  if (k == 1) return log2();
  if (k < 0) throw AmtvError("zbar(k) needs k >= 0");
  return ConstExpr(Atom{AtomKind::ZetaBar, k, {}});
}

ConstExpr ConstExpr::tbar(int k) {
  if (k < 1) throw AmtvError("tbar(k) needs k >= 1");
  return ConstExpr(Atom{AtomKind::TBar, k, {}});
}

ConstExpr ConstExpr::ttilde(int k) {
  if (k < 2) throw AmtvError("ttilde(k) needs k >= 2");
  return ConstExpr(Atom{AtomKind::TTilde, k, {}});
}

ConstExpr ConstExpr::gen_catalan(int m) {
  if (m < 1) throw AmtvError("G(m) needs m >= 1");
  return ConstExpr(Atom{AtomKind::GenCatalan, m, {}});
}

ConstExpr ConstExpr::li_half(int s) {
  if (s < 1) throw AmtvError("Li(s) needs s >= 1");
  return ConstExpr(Atom{AtomKind::LiHalf, s, {}});
}

ConstExpr ConstExpr::T(const TIndex& ix) {
  if (!is_admissible(ix)) throw NotAdmissible("not admissible: " + to_string(ix));
  return ConstExpr(Atom::t_value(ix));
}

ConstExpr ConstExpr::from(const FormalSum<TIndex>& s) {
  ConstExpr e;
  for (const auto& [ix, c] : s) e += ConstExpr::T(ix) * ConstExpr(c);
  return e;
}

ConstExpr ConstExpr::alpha(int n) {
  mpz_class f = 1;
  for (int j = 2; j <= 2 * n + 1; ++j) f *= j;
  mpq_class c(n % 2 ? -1 : 1, 1);
  c /= f;
  return ConstExpr(c) * ConstExpr(Atom{AtomKind::Pi, 0, {}}, 2 * n);
}

ConstExpr& ConstExpr::operator+=(const ConstExpr& o) {
  terms_ += o.terms_;
  return *this;
}

ConstExpr& ConstExpr::operator-=(const ConstExpr& o) {
  terms_ -= o.terms_;
  return *this;
}

ConstExpr& ConstExpr::operator*=(const ConstExpr& o) {
  FormalSum<Monomial> out;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) out.add(m1 * m2, c1 * c2);
  terms_ = std::move(out);
  return *this;
}

ConstExpr& ConstExpr::operator*=(const mpq_class& q) {
  terms_ *= q;
  return *this;
}

ConstExpr ConstExpr::operator-() const {
  ConstExpr r(*this);
  r *= mpq_class(-1);
  return r;
}

ConstExpr ConstExpr::pow(int n) const {
  if (n < 0) throw AmtvError("negative power");
  ConstExpr r(1);
  for (int j = 0; j < n; ++j) r *= *this;
  return r;
}

bool ConstExpr::is_rational() const {
  for (const auto& [m, c] : terms_)
    if (!m.empty()) return false;
  return true;
}

mpq_class ConstExpr::rational_value() const { return terms_.coefficient(Monomial{}); }

std::set<TIndex> ConstExpr::t_values() const {
  std::set<TIndex> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [a, p] : m)
      if (a.kind == AtomKind::TValue) out.insert(a.index);
  return out;
}

ConstExpr operator+(ConstExpr a, const ConstExpr& b) { return a += b; }
ConstExpr operator-(ConstExpr a, const ConstExpr& b) { return a -= b; }
ConstExpr operator*(ConstExpr a, const ConstExpr& b) { return a *= b; }

std::string to_string(const ConstExpr& e) {
  if (e.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : e.terms()) {
    mpq_class a = abs(c);
    bool neg = c < 0;
    if (first)
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    first = false;
    if (m.empty()) {
      s += a.get_str();
    } else {
      if (a != 1) s += a.get_str() + "*";
      s += to_string(m);
    }
  }
  return s;
}

mpz_class euler_number(int n) {
  if (n < 0) throw AmtvError("negative Euler index");
  if (n % 2) return 0;
  static std::mutex mu;
  static std::vector<mpz_class> e{1};
  std::lock_guard<std::mutex> lock(mu);
  int k = n / 2;
  while (static_cast<int>(e.size()) <= k) {
    int kk = static_cast<int>(e.size());
    // sum_{j<=k} C(2k,2j) E_{2j} = 0
    mpz_class s = 0, binom;
    for (int j = 0; j < kk; ++j) {
      mpz_bin_uiui(binom.get_mpz_t(), 2 * kk, 2 * j);
      s += binom * e[j];
    }
    e.push_back(-s);
  }
  return e[k];
}

namespace {

// sum_{k>=0} (-1)^k a(k) by Cohen-Rodriguez Villegas-Zagier.
template <class F>
hp::Real cvz(int digits, F a) {
  int n = static_cast<int>(1.31 * digits) + 10;
  hp::Real d = hp::pow(hp::Real(3L) + hp::sqrt(hp::Real(8L)), n);
  d = (d + hp::Real(1L) / d) / 2L;
  hp::Real b(-1L), c = -d, s(0L);
  for (int k = 0; k < n; ++k) {
    c = b - c;
    s += c * a(k);
    b *= 2L * static_cast<long>(k + n) * static_cast<long>(k - n);
    b /= static_cast<long>(2 * k + 1) * static_cast<long>(k + 1);
  }
  return s / d;
}

hp::Real inv_pow(long base, int s) {
  hp::Real r(base);
  mpfr_pow_si(r.get(), r.get(), -s, MPFR_RNDN);
  return r;
}

hp::Real compute_constant(AtomKind kind, int arg, int digits) {
  switch (kind) {
    case AtomKind::Pi:
      return hp::pi();
    case AtomKind::Log2:
      return hp::log2();
    case AtomKind::Catalan:
      return beta_cvz(2, digits);
    case AtomKind::Zeta: {
      if (arg < 2) throw AmtvError("zeta(k) needs k >= 2");
      hp::Real f = hp::Real(1L) - inv_pow(2, arg - 1);
      return eta_cvz(arg, digits) / f;
    }
    case AtomKind::ZetaBar:
      if (arg == 0) return hp::Real(mpq_class(1, 2));
      if (arg < 0) throw AmtvError("zbar(k) needs k >= 0");
      return eta_cvz(arg, digits);
    case AtomKind::TBar: {
      if (arg < 1) throw AmtvError("tbar(k) needs k >= 1");
      if (arg % 2 == 1) {
        int k = (arg - 1) / 2;
        mpz_class f = 1;
        for (int j = 2; j <= 2 * k; ++j) f *= j;
        hp::Real v = hp::pow(hp::pi(), arg) * hp::Real(mpz_class(euler_number(2 * k)));
        v /= hp::Real(mpz_class(2 * f));
        return k % 2 ? -v : v;
      }
      hp::Real two_k(1L);
      mpfr_mul_2si(two_k.get(), two_k.get(), arg, MPFR_RNDN);
      return two_k * beta_cvz(arg, digits);
    }
    case AtomKind::TTilde: {
      if (arg < 2) throw AmtvError("ttilde(k) needs k >= 2");
      mpz_class f = (mpz_class(1) << arg) - 1;
      return hp::Real(f) * constant(AtomKind::Zeta, arg, digits);
    }
    case AtomKind::GenCatalan:
      if (arg < 1) throw AmtvError("G(m) needs m >= 1");
      return beta_cvz(2 * arg, digits);
    case AtomKind::LiHalf: {
      if (arg < 1) throw AmtvError("Li(s) needs s >= 1");
      hp::Real s(0L), p(1L);
      long n_max = static_cast<long>(digits * 3.33) + 20;
      for (long n = 1; n <= n_max; ++n) {
        mpfr_mul_2si(p.get(), p.get(), -1, MPFR_RNDN);
        s += p * inv_pow(n, arg);
      }
      return s;
    }
    case AtomKind::TValue:
      throw AmtvError("T-values are not named constants");
  }
  throw AmtvError("unknown constant");
}

}  // namespace

hp::Real eta_cvz(int s, int digits) {
  auto guard = hp::WorkingPrecision(digits + 10);
  return cvz(digits + 10, [s](int k) { return inv_pow(k + 1, s); });
}

hp::Real beta_cvz(int s, int digits) {
  auto guard = hp::WorkingPrecision(digits + 10);
  return cvz(digits + 10, [s](int k) { return inv_pow(2L * k + 1, s); });
}

hp::Real constant(AtomKind kind, int arg, int digits) {
  using Key = std::tuple<int, int, int>;
  static std::mutex mu;
  static std::map<Key, hp::Real> memo;
  Key key{static_cast<int>(kind), arg, digits};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  hp::Real v;
  {
    auto guard = hp::WorkingPrecision(digits + 10);
    v = compute_constant(kind, arg, digits);
  }
  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(key, v);
  return v;
}

hp::Real constant(const std::string& name, int arg, int digits) {
  static const std::map<std::string, AtomKind> names = {
      {"pi", AtomKind::Pi},          {"log2", AtomKind::Log2},     {"catalan", AtomKind::Catalan},
      {"zeta", AtomKind::Zeta},      {"zbar", AtomKind::ZetaBar},  {"tbar", AtomKind::TBar},
      {"ttilde", AtomKind::TTilde},  {"G", AtomKind::GenCatalan},  {"Li", AtomKind::LiHalf},
  };
  auto it = names.find(name);
  if (it == names.end()) throw AmtvError("unknown constant '" + name + "'");
  return constant(it->second, arg, digits);
}

hp::Real evaluate(const ConstExpr& e, int digits, const TValueFn& tvalue) {
  auto guard = hp::WorkingPrecision(digits + 10);
  std::map<Atom, hp::Real> cache;
  auto atom_value = [&](const Atom& a) -> const hp::Real& {
    auto it = cache.find(a);
    if (it != cache.end()) return it->second;
    hp::Real v;
    if (a.kind == AtomKind::TValue) {
      if (!tvalue) throw AmtvError("no T-value evaluator supplied for " + to_string(a));
      v = tvalue(a.index);
    } else {
      v = constant(a.kind, a.arg, digits);
    }
    return cache.emplace(a, std::move(v)).first->second;
  };
  hp::Real total(0L);
  for (const auto& [m, c] : e.terms()) {
    hp::Real t(c);
    for (const auto& [a, p] : m) t *= hp::pow(atom_value(a), p);
    total += t;
  }
  return total;
}

}  // namespace amtv
