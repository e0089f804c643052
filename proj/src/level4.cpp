#include "amtv/level4.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <thread>

#include "amtv/errors.hpp"
#include "amtv/series.hpp"

namespace amtv {

char pole_char(Pole p) {
  switch (p) {
    case Pole::Zero:
      return '0';
    case Pole::One:
      return '1';
    case Pole::MinusOne:
      return 'n';
    case Pole::I:
      return 'i';
    case Pole::MinusI:
      return 'j';
    case Pole::Two:
      return '2';
    case Pole::OnePlusI:
      return 'a';
    case Pole::OneMinusI:
      return 'b';
  }
  return '?';
}

Pole pole_from_char(char c) {
  switch (c) {
    case '0':
      return Pole::Zero;
    case '1':
      return Pole::One;
    case 'n':
      return Pole::MinusOne;
    case 'i':
      return Pole::I;
    case 'j':
      return Pole::MinusI;
    case '2':
      return Pole::Two;
    case 'a':
      return Pole::OnePlusI;
    case 'b':
      return Pole::OneMinusI;
    default:
      throw ParseError(std::string("bad pole letter '") + c + "'");
  }
}

std::string to_string(const Level4Word& v) {
  std::string s;
  for (Pole p : v.letters) s += pole_char(p);
  return s;
}

Level4Word parse_level4(std::string_view text) {
  if (text.empty()) throw ParseError("empty level-4 word");
  Level4Word v;
  for (char c : text) {
    Pole p = pole_from_char(c);
    if (p >= Pole::Two) throw ParseError(std::string("pole '") + c + "' is not in the level-4 alphabet");
    v.letters.push_back(p);
  }
  return v;
}

bool is_integrable(const Level4Word& v) {
  return !v.letters.empty() && v.letters.front() != Pole::Zero && v.letters.back() != Pole::One;
}

FormalSum<Level4Word, GaussRational> expand_letters(const Word& w) {
  if (!is_admissible(w)) throw NotAdmissible("not admissible: " + to_string(w));
  std::map<Level4Word, GaussRational> cur{{Level4Word{}, GaussRational(1)}};
  for (Letter l : w.letters) {
    std::vector<std::pair<Pole, GaussRational>> opts;
    switch (l) {
      case Letter::Zero:
        opts = {{Pole::Zero, GaussRational(1)}};
        break;
      case Letter::Pos:
        opts = {{Pole::MinusOne, GaussRational(1)}, {Pole::One, GaussRational(-1)}};
        break;
      case Letter::Neg:
        opts = {{Pole::MinusI, GaussRational(0, 1)}, {Pole::I, GaussRational(0, -1)}};
        break;
    }
    std::map<Level4Word, GaussRational> next;
    for (const auto& [v, c] : cur) {
      for (const auto& [p, k] : opts) {
        Level4Word x = v;
        x.letters.push_back(p);
        next.emplace(std::move(x), c * k);
      }
    }
    cur = std::move(next);
  }
  FormalSum<Level4Word, GaussRational> out;
  for (const auto& [v, c] : cur) out.add(v, c);
  return out;
}

namespace {

Pole reflect(Pole p) {
  switch (p) {
    case Pole::Zero:
      return Pole::One;
    case Pole::One:
      return Pole::Zero;
    case Pole::MinusOne:
      return Pole::Two;
    case Pole::I:
      return Pole::OneMinusI;
    case Pole::MinusI:
      return Pole::OnePlusI;
    default:
      throw AmtvError("pole outside the level-4 alphabet");
  }
}

// Taylor coefficients (at 0) of one iterated-integral stage, with a realness flag.
struct Series {
  std::vector<hp::Real> re, im;
  bool real = true;
  Series(long n, mpfr_prec_t bits) {
    auto g = hp::WorkingPrecision::from_bits(bits);
    re.resize(n + 1);
    im.resize(n + 1);
  }
};

// (x + iy) / a in place, for the poles' simple reciprocals.
void divide_by_pole(Pole a, mpfr_ptr x, mpfr_ptr y, mpfr_ptr tmp) {
  switch (a) {
    case Pole::One:
      break;
    case Pole::MinusOne:
      mpfr_neg(x, x, MPFR_RNDN);
      mpfr_neg(y, y, MPFR_RNDN);
      break;
    case Pole::I:  // (x + iy)(-i) = y - ix
      mpfr_swap(x, y);
      mpfr_neg(y, y, MPFR_RNDN);
      break;
    case Pole::MinusI:  // (x + iy)(i) = -y + ix
      mpfr_swap(x, y);
      mpfr_neg(x, x, MPFR_RNDN);
      break;
    case Pole::Two:
      mpfr_mul_2si(x, x, -1, MPFR_RNDN);
      mpfr_mul_2si(y, y, -1, MPFR_RNDN);
      break;
    case Pole::OnePlusI:  // (x + iy)(1 - i)/2
      mpfr_add(tmp, x, y, MPFR_RNDN);
      mpfr_sub(y, y, x, MPFR_RNDN);
      mpfr_mul_2si(x, tmp, -1, MPFR_RNDN);
      mpfr_mul_2si(y, y, -1, MPFR_RNDN);
      break;
    case Pole::OneMinusI:  // (x + iy)(1 + i)/2
      mpfr_sub(tmp, x, y, MPFR_RNDN);
      mpfr_add(y, x, y, MPFR_RNDN);
      mpfr_mul_2si(x, tmp, -1, MPFR_RNDN);
      mpfr_mul_2si(y, y, -1, MPFR_RNDN);
      break;
    case Pole::Zero:
      break;
  }
}

bool real_pole(Pole a) { return a == Pole::One || a == Pole::MinusOne || a == Pole::Two || a == Pole::Zero; }

// H = integral_0^t F(s) ds/(s - a); returns H(1/2).
hp::Complex integrate_stage(const Series& F, Series& H, Pole a, long N) {
  const bool real = F.real && real_pole(a);
  H.real = real;
  mpfr_set_zero(H.re[0].get(), 1);
  mpfr_set_zero(H.im[0].get(), 1);
  if (a == Pole::Zero) {
    for (long m = 1; m <= N; ++m) {
      mpfr_div_ui(H.re[m].get(), F.re[m].get(), m, MPFR_RNDN);
      if (!real) mpfr_div_ui(H.im[m].get(), F.im[m].get(), m, MPFR_RNDN);
    }
  } else {
    hp::Real gx(0L), gy(0L), tmp;
    // g_m = (g_{m-1} - f_m)/a, h_{m+1} = g_m/(m+1)
    for (long m = 0; m < N; ++m) {
      mpfr_sub(gx.get(), gx.get(), F.re[m].get(), MPFR_RNDN);
      if (F.real)
        ;  // gy unchanged by f
      else
        mpfr_sub(gy.get(), gy.get(), F.im[m].get(), MPFR_RNDN);
      if (real) {
        if (a == Pole::MinusOne)
          mpfr_neg(gx.get(), gx.get(), MPFR_RNDN);
        else if (a == Pole::Two)
          mpfr_mul_2si(gx.get(), gx.get(), -1, MPFR_RNDN);
      } else {
        divide_by_pole(a, gx.get(), gy.get(), tmp.get());
      }
      mpfr_div_ui(H.re[m + 1].get(), gx.get(), m + 1, MPFR_RNDN);
      if (!real) mpfr_div_ui(H.im[m + 1].get(), gy.get(), m + 1, MPFR_RNDN);
    }
  }
  hp::Real x(0L), y(0L);
  for (long m = N; m >= 1; --m) {
    mpfr_add(x.get(), x.get(), H.re[m].get(), MPFR_RNDN);
    mpfr_mul_2si(x.get(), x.get(), -1, MPFR_RNDN);
    if (!real) {
      mpfr_add(y.get(), y.get(), H.im[m].get(), MPFR_RNDN);
      mpfr_mul_2si(y.get(), y.get(), -1, MPFR_RNDN);
    }
  }
  return hp::Complex(std::move(x), std::move(y));
}

// Values I_{0->1/2}(key) for sorted keys, sharing prefixes along a stack.
std::vector<hp::Complex> half_values(const std::vector<std::string>& keys, long N, mpfr_prec_t bits) {
  auto guard = hp::WorkingPrecision::from_bits(bits);
  std::vector<hp::Complex> out;
  out.reserve(keys.size());
  size_t max_len = 0;
  for (const auto& k : keys) max_len = std::max(max_len, k.size());
  std::vector<Series> levels;
  levels.reserve(max_len + 1);
  for (size_t j = 0; j <= max_len; ++j) levels.emplace_back(N, bits);
  for (long m = 0; m <= N; ++m) mpfr_set_ui(levels[0].re[m].get(), m == 0 ? 1 : 0, MPFR_RNDN);
  levels[0].real = true;
  std::string path;
  std::vector<hp::Complex> path_vals;
  for (const auto& key : keys) {
    size_t common = 0;
    while (common < path.size() && common < key.size() && path[common] == key[common]) ++common;
    path.resize(common);
    path_vals.resize(common);
    while (path.size() < key.size()) {
      size_t d = path.size();
      Pole a = pole_from_char(key[d]);
      if (d == 0 && a == Pole::Zero) throw AmtvError("piece starts with pole 0");
      path_vals.push_back(integrate_stage(levels[d], levels[d + 1], a, N));
      path.push_back(key[d]);
    }
    out.push_back(path_vals.back());
  }
  return out;
}

}  // namespace

Evaluator::Evaluator(int digits, EvalOptions opts) : digits_(digits), opts_(std::move(opts)) {
  if (digits < 1) throw PrecisionError("digits must be >= 1");
  terms_ = static_cast<long>(std::ceil(digits * std::log(10.0) / std::log(2.0))) + 64;
  bits_ = hp::digits_to_bits(digits + 15);
  if (!opts_.cache_path.empty()) cache_ = std::make_unique<ValueCache>(opts_.cache_path);
}

void Evaluator::set_terms(long n) {
  std::lock_guard<std::mutex> lock(mu_);
  terms_ = n;
  half_.clear();
  words_.clear();
  cache_.reset();
}

hp::Real Evaluator::piece_err() const {
  auto guard = hp::WorkingPrecision::from_bits(bits_);
  hp::Real e(1L);
  mpfr_mul_2si(e.get(), e.get(), -terms_, MPFR_RNDN);
  hp::Real r(1L);
  mpfr_mul_2si(r.get(), r.get(), -static_cast<long>(bits_), MPFR_RNDN);
  r *= 64L * (terms_ + 1) * (terms_ + 1);
  return e + r;
}

void Evaluator::compute_half(const std::vector<std::string>& keys) {
  if (keys.empty()) return;
  int jobs = std::max(1, opts_.jobs);
  std::vector<std::vector<std::string>> groups;
  if (jobs == 1) {
    groups.push_back(keys);
  } else {
    // contiguous ranges split only at first-letter boundaries
    size_t per = (keys.size() + jobs - 1) / jobs;
    std::vector<std::string> cur;
    for (size_t i = 0; i < keys.size(); ++i) {
      if (cur.size() >= per && keys[i][0] != cur.back()[0]) {
        groups.push_back(std::move(cur));
        cur.clear();
      }
      cur.push_back(keys[i]);
    }
    if (!cur.empty()) groups.push_back(std::move(cur));
  }
  std::vector<std::vector<hp::Complex>> results(groups.size());
  if (groups.size() == 1) {
    results[0] = half_values(groups[0], terms_, bits_);
  } else {
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(groups.size());
    for (size_t g = 0; g < groups.size(); ++g) {
      threads.emplace_back([&, g] {
        try {
          results[g] = half_values(groups[g], terms_, bits_);
        } catch (...) {
          errors[g] = std::current_exception();
        }
      });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  for (size_t g = 0; g < groups.size(); ++g)
    for (size_t i = 0; i < groups[g].size(); ++i) half_.emplace(groups[g][i], std::move(results[g][i]));
}

std::vector<HPComplex> Evaluator::level4_many(const std::vector<Level4Word>& vs) {
  auto guard = hp::WorkingPrecision::from_bits(bits_);
  std::lock_guard<std::mutex> lock(mu_);
  std::set<std::string> need;
  for (const auto& v : vs) {
    if (!is_integrable(v)) throw NotAdmissible("not integrable: " + to_string(v));
    for (Pole p : v.letters)
      if (p >= Pole::Two) throw AmtvError("pole outside the level-4 alphabet");
    std::string s = to_string(v), pre, suf;
    for (size_t j = 0; j < s.size(); ++j) {
      pre += s[j];
      suf += pole_char(reflect(v.letters[v.letters.size() - 1 - j]));
      if (!half_.count(pre)) need.insert(pre);
      if (!half_.count(suf)) need.insert(suf);
    }
  }
  compute_half(std::vector<std::string>(need.begin(), need.end()));
  const hp::Real e = piece_err();
  std::vector<HPComplex> out;
  out.reserve(vs.size());
  for (const auto& v : vs) {
    const size_t n = v.letters.size();
    std::string s = to_string(v);
    std::vector<const hp::Complex*> P(n + 1, nullptr), Q(n + 1, nullptr);
    std::string pre, suf;
    for (size_t j = 1; j <= n; ++j) {
      pre += s[j - 1];
      suf += pole_char(reflect(v.letters[n - j]));
      P[j] = &half_.at(pre);
      Q[j] = &half_.at(suf);
    }
    // the reflected piece runs backwards, one sign per letter
    auto q = [&](size_t i) { return (i % 2) ? -*Q[i] : *Q[i]; };
    hp::Complex total = *P[n] + q(n);
    for (size_t j = 1; j < n; ++j) total += q(n - j) * (*P[j]);
    hp::Real err = e * 2L + e * e;
    err *= static_cast<long>(n + 1);
    out.push_back({std::move(total), std::move(err)});
  }
  return out;
}

HPComplex Evaluator::level4(const Level4Word& v) { return level4_many({v}).front(); }

std::vector<HPComplex> Evaluator::words(const std::vector<Word>& ws) {
  auto guard = hp::WorkingPrecision::from_bits(bits_);
  std::vector<Word> pending;
  {
    std::lock_guard<std::mutex> lock(mu_);
    for (const auto& w : ws) {
      if (!is_admissible(w)) throw NotAdmissible("not admissible: " + to_string(w));
      if (words_.count(w)) continue;
      if (cache_) {
        if (auto hit = cache_->get(to_string(w), digits_)) {
          HPComplex c{hp::Complex(hp::Real(hit->re), hp::Real(hit->im)), hp::pow10(-hit->digits)};
          words_.emplace(w, std::move(c));
          ++cache_hits_;
          continue;
        }
      }
      pending.push_back(w);
    }
  }
  std::sort(pending.begin(), pending.end());
  pending.erase(std::unique(pending.begin(), pending.end()), pending.end());
  if (!pending.empty()) {
    std::vector<FormalSum<Level4Word, GaussRational>> expansions;
    std::set<Level4Word> all;
    for (const auto& w : pending) {
      expansions.push_back(expand_letters(w));
      for (const auto& [v, c] : expansions.back()) all.insert(v);
    }
    std::vector<Level4Word> list(all.begin(), all.end());
    auto vals = level4_many(list);
    std::map<Level4Word, const HPComplex*> by;
    for (size_t i = 0; i < list.size(); ++i) by[list[i]] = &vals[i];
    std::lock_guard<std::mutex> lock(mu_);
    for (size_t i = 0; i < pending.size(); ++i) {
      hp::Complex sum;
      hp::Real err(0L);
      for (const auto& [v, c] : expansions[i]) {
        const HPComplex& x = *by.at(v);
        hp::Real cr(c.re), ci(c.im);
        sum.re += cr * x.value.re - ci * x.value.im;
        sum.im += cr * x.value.im + ci * x.value.re;
        err += (hp::abs(cr) + hp::abs(ci)) * x.err;
      }
      if (cache_) {
        CacheEntry ce{to_string(pending[i]), digits_, sum.re.to_string(digits_ + 5), sum.im.to_string(digits_ + 5), 0};
        cache_->put(std::move(ce));
      }
      words_.emplace(pending[i], HPComplex{std::move(sum), std::move(err)});
    }
  }
  std::lock_guard<std::mutex> lock(mu_);
  std::vector<HPComplex> out;
  out.reserve(ws.size());
  for (const auto& w : ws) out.push_back(words_.at(w));
  return out;
}

HPComplex Evaluator::word(const Word& w) { return words({w}).front(); }

std::vector<HPReal> Evaluator::T_many(const std::vector<TIndex>& ixs) {
  auto guard = hp::WorkingPrecision::from_bits(bits_);
  std::vector<SignedWord> sws;
  std::vector<Word> ws;
  for (const auto& ix : ixs) {
    sws.push_back(to_word(ix));
    ws.push_back(sws.back().word);
  }
  auto vals = words(ws);
  const hp::Real im_tol = hp::pow10(-(digits_ - 3));
  std::vector<HPReal> out;
  for (size_t i = 0; i < ixs.size(); ++i) {
    if (hp::abs(vals[i].value.im) >= im_tol)
      throw AmtvError("imaginary residual " + vals[i].value.im.to_string(5) + " for T(" + to_string(ixs[i]) + ")");
    hp::Real v = vals[i].value.re;
    if (sws[i].sign == Sign::Minus) v = -v;
    out.push_back({std::move(v), vals[i].err});
  }
  return out;
}

HPReal Evaluator::T(const TIndex& ix) { return T_many({ix}).front(); }

HPComplex Evaluator::colored_mzv(const std::vector<int>& ks, const std::vector<int>& eta_exponents) {
  if (ks.empty() || ks.size() != eta_exponents.size()) throw AmtvError("colored MZV: ks and etas differ in length");
  const size_t r = ks.size();
  std::vector<int> tail(r);
  int acc = 0;
  for (size_t j = r; j-- > 0;) {
    acc = ((acc + eta_exponents[j]) % 4 + 4) % 4;
    tail[j] = acc;
  }
  static const Pole by_exp[4] = {Pole::One, Pole::I, Pole::MinusOne, Pole::MinusI};
  Level4Word v;
  for (size_t j = 0; j < r; ++j) {
    if (ks[j] < 1) throw AmtvError("colored MZV: exponents must be positive");
    v.letters.push_back(by_exp[(4 - tail[j]) % 4]);
    for (int e = 1; e < ks[j]; ++e) v.letters.push_back(Pole::Zero);
  }
  if (!is_integrable(v)) throw NotAdmissible("colored MZV not admissible");
  HPComplex out = level4(v);
  if (r % 2) {
    auto guard = hp::WorkingPrecision::from_bits(bits_);
    out.value.re = -out.value.re;
    out.value.im = -out.value.im;
  }
  return out;
}

std::vector<HPReal> Evaluator::evaluate_many(const std::vector<ConstExpr>& es) {
  std::set<TIndex> need;
  for (const auto& e : es) {
    auto s = e.t_values();
    need.insert(s.begin(), s.end());
  }
  std::vector<TIndex> list(need.begin(), need.end());
  auto vals = T_many(list);
  std::map<TIndex, HPReal> by;
  for (size_t i = 0; i < list.size(); ++i) by.emplace(list[i], vals[i]);
  auto guard = hp::WorkingPrecision::from_bits(bits_);
  std::vector<HPReal> out;
  for (const auto& e : es) {
    hp::Real v = amtv::evaluate(e, digits_ + 10, [&](const TIndex& ix) { return by.at(ix).value; });
    // first-order error: sum over terms of |term| * sum_p p * rel_err(atom)
    hp::Real err(0L);
    for (const auto& [m, c] : e.terms()) {
      hp::Real mag = hp::abs(hp::Real(c));
      hp::Real rel(0L);
      for (const auto& [a, p] : m) {
        hp::Real x = a.kind == AtomKind::TValue ? by.at(a.index).value : constant(a.kind, a.arg, digits_ + 10);
        hp::Real ax = hp::abs(x);
        mag *= hp::pow(ax, p);
        hp::Real ex = a.kind == AtomKind::TValue ? by.at(a.index).err : hp::pow10(-(digits_ + 9));
        if (!ax.is_zero()) rel += hp::Real(static_cast<long>(p)) * ex / ax;
      }
      err += mag * rel + hp::pow10(-(digits_ + 9)) * mag;
    }
    out.push_back({std::move(v), std::move(err)});
  }
  return out;
}

HPReal Evaluator::evaluate(const ConstExpr& e) { return evaluate_many({e}).front(); }

HPComplex eval_level4(const Level4Word& v, int digits) {
  Evaluator ev(digits);
  return ev.level4(v);
}

HPReal eval_T(const TIndex& ix, int digits) {
  Evaluator ev(digits);
  return ev.T(ix);
}

HPComplex eval_colored_mzv(const std::vector<int>& ks, const std::vector<int>& eta_exponents, int digits) {
  Evaluator ev(digits);
  return ev.colored_mzv(ks, eta_exponents);
}

HPReal weighted_sum(int k, int r, int l, Evaluator& ev) { return ev.evaluate(ConstExpr::from(weighted_sum_symbolic(k, r, l))); }

}  // namespace amtv
