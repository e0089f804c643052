#include "amtv/series.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cfloat>
#include <cmath>

#include "amtv/errors.hpp"

namespace amtv {

namespace {

// Chains 0 < M_1 < ... < M_m with M_j of fixed alternating parity, fed one M at a time.
template <class Num>
class ChainAccumulator {
 public:
  ChainAccumulator(std::vector<int> ks, HarmonicKind kind) : ks_(std::move(ks)), kind_(kind), acc_(ks_.size() + 1, Num(0)) {
    acc_[0] = Num(1);
  }

  void add(long M) {
    for (size_t j = ks_.size(); j >= 1; --j) {
      // T: M_j has the parity of j; S: the opposite parity.
      bool odd_needed = (kind_ == HarmonicKind::T) ? (j % 2 == 1) : (j % 2 == 0);
      if ((M % 2 == 1) != odd_needed) continue;
      Num p(1);
      for (int e = 0; e < ks_[j - 1]; ++e) p *= Num(M);
      acc_[j] += acc_[j - 1] / p;
    }
  }

  Num value() const {
    Num v = acc_.back();
    for (size_t j = 0; j < ks_.size(); ++j) v *= Num(2);
    return v;
  }

 private:
  std::vector<int> ks_;
  HarmonicKind kind_;
  std::vector<Num> acc_;
};

std::vector<int> drop_last(const std::vector<int>& v) { return std::vector<int>(v.begin(), v.end() - 1); }

long double ipow(long double x, int k) {
  long double r = 1;
  for (int j = 0; j < k; ++j) r *= x;
  return r;
}

// Bound on int_N^inf L(x)^a / x^K dx with L(x) = 1 + log(2x)/2, K >= 2.
long double log_power_tail(long N, int a, int K) {
  long double L = 1 + 0.5L * std::log(2.0L * N);
  long double q = a / (2.0L * (K - 1) * L);
  if (q >= 1) return INFINITY;
  return std::pow(L, a) / ((K - 1) * std::pow(static_cast<long double>(N), K - 1)) / (1 - q);
}

struct Neumaier {
  long double sum = 0, comp = 0;
  void add(long double x) {
    long double t = sum + x;
    if (std::fabs(sum) >= std::fabs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  long double value() const { return sum + comp; }
};

}  // namespace

mpq_class harmonic_sum(HarmonicKind kind, long n, const std::vector<int>& ks) {
  if (n < 1) throw AmtvError("harmonic_sum needs n >= 1");
  if (ks.empty()) return 1;
  ChainAccumulator<mpq_class> acc(ks, kind);
  for (long M = 1; M < 2 * n; ++M) acc.add(M);
  return acc.value();
}

ErrBound convoluted_T(const std::vector<int>& ks, const std::vector<int>& ls, int digits, long term_budget) {
  if (ks.empty() || ls.empty()) throw AmtvError("convoluted_T needs nonempty compositions");
  if (digits > 19) throw PrecisionError("convoluted_T is an oracle: digits <= 19");
  const bool even_k = ks.size() % 2 == 0;
  const bool same_parity = (ks.size() % 2) == (ls.size() % 2);
  const int s = ks.back() + ls.back();
  ChainAccumulator<long double> X(drop_last(ks), HarmonicKind::T);
  ChainAccumulator<long double> Y(drop_last(ls), same_parity ? HarmonicKind::T : HarmonicKind::S);
  const long double target = 0.5L * std::pow(10.0L, -digits);

  // ring buffers of f(n) and partial sums S_n = sum_{j<=n} (-1)^j f(j)
  long double f[4] = {0, 0, 0, 0}, part[4] = {0, 0, 0, 0};
  Neumaier sum;
  long double max_abs = 0;
  long next_check = 64;
  long double best_bound = INFINITY, best_value = 0;
  for (long n = 1; n <= term_budget + 3; ++n) {
    if (n == 1) {
      X.add(1);
      Y.add(1);
    } else {
      X.add(2 * n - 2);
      Y.add(2 * n - 2);
      X.add(2 * n - 1);
      Y.add(2 * n - 1);
    }
    long double outer = even_k ? 2.0L * n : 2.0L * n - 1;
    long double fn = X.value() * Y.value() / ipow(outer, s);
    sum.add(n % 2 ? -fn : fn);
    f[n % 4] = fn;
    part[n % 4] = sum.value();
    max_abs = std::max(max_abs, std::fabs(sum.value()));
    if (n == next_check + 3) {
      long N = next_check;
      long double f1 = f[(N + 1) % 4], f2 = f[(N + 2) % 4], f3 = f[(N + 3) % 4];
      long double SN = part[N % 4], SN1 = part[(N + 1) % 4];
      long double round = 8.0L * n * LDBL_EPSILON * std::max<long double>(1, max_abs);
      long double bound = INFINITY, value = 0;
      if (f1 >= f2 && f2 >= f3 && f1 - 2 * f2 + f3 >= 0) {
        value = 0.5L * (SN + SN1);
        bound = 0.5L * (f1 - f2);
      } else if (f1 >= f2 && f2 >= f3) {
        value = SN;
        bound = f1;
      }
      bound = 2 * (bound + round);
      if (bound < best_bound) {
        best_bound = bound;
        best_value = 2 * value;
      }
      if (best_bound < target) return {best_value, best_bound};
      next_check *= 2;
      if (next_check > term_budget) break;
    }
  }
  throw PrecisionError("convoluted_T: 10^-" + std::to_string(digits) + " unreachable within " +
                       std::to_string(term_budget) + " terms (best bound " + std::to_string(static_cast<double>(best_bound)) +
                       ")");
}

ErrBound oracle_eval(const TIndex& ix, long term_budget) {
  if (!is_admissible(ix)) throw NotAdmissible("not admissible: " + to_string(ix));
  const int r = ix.depth();
  const long N = term_budget;
  if (N < 4L * r + 16) throw PrecisionError("term budget too small");
  std::vector<long double> acc(r + 1, 0.0L);
  acc[0] = 1;
  Neumaier top;
  for (long n = 1; n <= N; ++n) {
    for (int j = r; j >= 1; --j) {
      if (n < j) continue;
      long double base = 2.0L * n - j;
      long double t = acc[j - 1] / ipow(base, ix.ks[j - 1]);
      if (ix.sigmas[j - 1] == Sign::Minus && n % 2) t = -t;
      if (j == r)
        top.add(t);
      else
        acc[j] += t;
    }
  }
  const long double two_r = std::ldexp(1.0L, r);
  ErrBound out;
  out.value = two_r * top.value();

  // Product bounds: |S_j(n)| <= prod_{i<=j} h_i(n), h_i = L(n) when k_i = 1, else 1.5.
  auto counts = [&](int upto) {
    int a = 0, b = 0;
    for (int i = 0; i < upto; ++i) (ix.ks[i] == 1 ? a : b)++;
    return std::pair<int, int>{a, b};
  };
  auto L = [](long double n) { return 1 + 0.5L * std::log(2.0L * n); };
  // 1/(2n - r) <= c/n for n > N
  const long double c = 1.0L / (2.0L - static_cast<long double>(r) / N);
  const int kr = ix.ks.back();
  long double tail;
  if (ix.sigmas.back() == Sign::Plus) {
    auto [a, b] = counts(r - 1);
    tail = std::pow(1.5L, b) * ipow(c, kr) * log_power_tail(N, a, kr);
  } else {
    auto [a, b] = counts(r - 1);
    long double dN1 = ipow(2.0L * (N + 1) - r, kr);
    tail = std::pow(L(N + 1), a) * std::pow(1.5L, b) / dN1;
    if (a > 0) tail += 0.5L * a * std::pow(1.5L, b) * ipow(c, kr) * (1 + 1.0L / N) * log_power_tail(N, a - 1, kr + 1);
    if (r >= 2) {
      auto [a2, b2] = counts(r - 2);
      int K = ix.ks[r - 2] + kr;
      tail += std::pow(1.5L, b2) * ipow(c, K) * log_power_tail(N, a2, K);
    }
  }
  auto [a_all, b_all] = counts(r);
  long double round = 4.0L * N * (r + 2) * LDBL_EPSILON * std::pow(L(N), a_all) * std::pow(1.5L, b_all);
  out.bound = two_r * (tail + round);
  if (!std::isfinite(out.bound)) throw PrecisionError("oracle bound not finite for " + to_string(ix));
  return out;
}

FormalSum<TIndex> weighted_sum_symbolic(int k, int r, int l) {
  if (r < 1 || l < 0 || l > r || k < r) throw AmtvError("weighted sum needs 0 <= l <= r <= k");
  FormalSum<TIndex> out;
  std::vector<int> parts(r, 1);
  // compositions of k into r parts, lexicographic
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == r - 1) {
      parts[pos] = left;
      std::vector<Sign> sg(r, Sign::Plus);
      sg[r - 1] = Sign::Minus;
      if (l >= 1) sg[l - 1] = Sign::Minus;
      out.add(TIndex(parts, sg), 1);
      return;
    }
    for (int v = 1; v <= left - (r - 1 - pos); ++v) {
      parts[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  rec(0, k);
  return out;
}

namespace {

mpq_class factorial(int n) {
  mpz_class f = 1;
  for (int j = 2; j <= n; ++j) f *= j;
  return mpq_class(f);
}

std::vector<int> ones(int n) { return std::vector<int>(std::max(n, 0), 1); }

}  // namespace

ConstExpr log_moment_integral(int n, int m, LogRow row) {
  if (n < 1 || m < 1) throw AmtvError("log_moment_integral needs n, m >= 1");
  auto T = [n](int len) { return harmonic_sum(HarmonicKind::T, n, ones(len)); };
  auto S = [n](int len) { return harmonic_sum(HarmonicKind::S, n, ones(len)); };
  ConstExpr out;
  switch (row) {
    case LogRow::ee:
      for (int j = 0; j <= m; ++j) out += ConstExpr::zetabar(2 * j) * ConstExpr(T(2 * m - 2 * j));
      out *= 2 * factorial(2 * m) / mpq_class(2 * n - 1);
      break;
    case LogRow::eo:
      for (int j = 1; j <= m; ++j) out += ConstExpr(2) * ConstExpr::zetabar(2 * j - 1) * ConstExpr(T(2 * m - 2 * j));
      out += ConstExpr(S(2 * m - 1));
      out *= -factorial(2 * m - 1) / mpq_class(2 * n - 1);
      break;
    case LogRow::oe:
      for (int j = 1; j <= m; ++j)
        out += ConstExpr(2) * ConstExpr::zetabar(2 * j - 1) * ConstExpr(T(2 * m - 2 * j + 1));
      out += ConstExpr(S(2 * m));
      out *= factorial(2 * m) / mpq_class(2 * n);
      break;
    case LogRow::oo:
      for (int j = 0; j <= m - 1; ++j) out += ConstExpr::zetabar(2 * j) * ConstExpr(T(2 * m - 2 * j - 1));
      out *= -factorial(2 * m - 1) / mpq_class(n);
      break;
  }
  return out;
}

long double log_moment_quadrature(int n, int m, LogRow row) {
  int a = (row == LogRow::ee || row == LogRow::eo) ? 2 * n - 2 : 2 * n - 1;
  int b = (row == LogRow::ee || row == LogRow::oe) ? 2 * m : 2 * m - 1;
  boost::math::quadrature::tanh_sinh<long double> integrator;
  auto f = [a, b](long double x, long double xc) {
    long double one_minus = xc > 0 ? xc : 1 - x;
    if (one_minus <= 0) return 0.0L;
    long double lg = std::log(one_minus / (1 + x));
    return ipow(x, a) * ipow(lg, b);
  };
  return integrator.integrate(f, 0.0L, 1.0L);
}

ConstExpr alt_odd_harmonic_closed(int p, int q) {
  if (p < 1 || q < 1) throw AmtvError("alt_odd_harmonic_closed needs p, q >= 1");
  if ((p + q) % 2) throw AmtvError("alt_odd_harmonic_closed needs p + q even");
  auto binom = [](int nn, int kk) {
    if (kk < 0 || nn < 0 || kk > nn) return mpq_class(0);
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), nn, kk);
    return mpq_class(c);
  };
  const mpq_class sp = (p % 2) ? -1 : 1;
  ConstExpr rhs;
  if (q % 2 == 0) rhs += ConstExpr(2 * sp) * ConstExpr::tbar(p) * ConstExpr::zetabar(q);
  rhs -= ConstExpr(sp * binom(p + q - 1, p - 1)) * ConstExpr::tbar(p + q);
  for (int k = 1; k <= p - 1; k += 2)  // ((-1)^k - 1) vanishes for even k
    rhs -= ConstExpr(sp * mpq_class(-2) * binom(p + q - k - 2, q - 1)) * ConstExpr::ttilde(k + 1) *
           ConstExpr::tbar(p + q - k - 1);
  for (int j = 1; j <= q / 2; ++j)
    rhs += ConstExpr(2 * sp * binom(p + q - 2 * j - 1, p - 1)) * ConstExpr::zeta(2 * j) * ConstExpr::tbar(p + q - 2 * j);
  rhs *= mpq_class(1, 2);
  return rhs;
}

}  // namespace amtv
