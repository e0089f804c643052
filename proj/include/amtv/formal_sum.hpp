#pragma once

#include <gmpxx.h>

#include <map>
#include <utility>

namespace amtv {

// Gaussian rational a + b i.
struct GaussRational {
  mpq_class re = 0;
  mpq_class im = 0;

  GaussRational() = default;
  GaussRational(mpq_class r, mpq_class i = 0) : re(std::move(r)), im(std::move(i)) {}  // NOLINT
  GaussRational(int r) : re(r), im(0) {}  // NOLINT

  bool is_zero() const { return re == 0 && im == 0; }
  GaussRational& operator+=(const GaussRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussRational& operator*=(const GaussRational& o) { return *this = *this * o; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) { return a.re == b.re && a.im == b.im; }
};

inline bool is_zero(const mpq_class& q) { return q == 0; }
inline bool is_zero(const GaussRational& g) { return g.is_zero(); }

// Finite linear combination of symbols; zero coefficients are never stored.
template <class Sym, class Coeff = mpq_class>
class FormalSum {
 public:
  using Map = std::map<Sym, Coeff>;

  FormalSum() = default;
  FormalSum(const Sym& s, Coeff c = Coeff(1)) { add(s, c); }

  void add(const Sym& s, const Coeff& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(s, c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  FormalSum& operator+=(const FormalSum& o) {
    for (const auto& [s, c] : o.terms_) add(s, c);
    return *this;
  }
  FormalSum& operator-=(const FormalSum& o) {
    for (const auto& [s, c] : o.terms_) add(s, Coeff(0) - c);
    return *this;
  }
  FormalSum& operator*=(const Coeff& k) {
    if (is_zero(k)) {
      terms_.clear();
      return *this;
    }
    for (auto& [s, c] : terms_) c *= k;
    return *this;
  }

  Coeff coefficient(const Sym& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  // Sum of all coefficients.
  Coeff mass() const {
    Coeff m(0);
    for (const auto& [s, c] : terms_) m += c;
    return m;
  }

  const Map& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  friend bool operator==(const FormalSum& a, const FormalSum& b) { return a.terms_ == b.terms_; }

 private:
  Map terms_;
};

}  // namespace amtv
