#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

#include "amtv/constants.hpp"
#include "amtv/errors.hpp"
#include "amtv/series.hpp"
#include "oracle.hpp"

using namespace amtv;

namespace {

// Direct enumeration of the alternating <=/< chains.
mpq_class chain_sum(HarmonicKind kind, long n, const std::vector<int>& ks) {
  const int m = static_cast<int>(ks.size());
  if (m == 0) return 1;
  std::function<mpq_class(int, long)> rec = [&](int i, long lo) -> mpq_class {
    // i: 1-based position; lo: smallest allowed n_i
    mpq_class s = 0;
    const bool weak_after = (kind == HarmonicKind::T) == (i % 2 == 1);
    const bool odd_den = (kind == HarmonicKind::T) == (i % 2 == 1);
    for (long v = lo;; ++v) {
      const long hi = i == m ? (weak_after ? n : n - 1) : n;
      if (v > hi) break;
      mpz_class d = odd_den ? mpz_class(2 * v - 1) : mpz_class(2 * v);
      mpz_class dk;
      mpz_pow_ui(dk.get_mpz_t(), d.get_mpz_t(), ks[i - 1]);
      mpq_class term(mpz_class(1), dk);
      if (i < m) term *= rec(i + 1, weak_after ? v : v + 1);
      s += term;
    }
    return s;
  };
  mpq_class r = rec(1, 1) * mpq_class(mpz_class(1) << m);
  r.canonicalize();
  return r;
}

long double ld(const hp::Real& x) { return x.to_long_double(); }

}  // namespace

TEST_CASE("harmonic sums: examples") {
  CHECK(harmonic_sum(HarmonicKind::T, 5, {}) == 1);
  CHECK(harmonic_sum(HarmonicKind::T, 1, {1}) == 2);
  CHECK(harmonic_sum(HarmonicKind::S, 1, {1}) == 0);
}

TEST_CASE("harmonic sums: exact agreement with chain enumeration") {
  std::mt19937_64 g(11);
  for (int t = 0; t < 200; ++t) {
    std::vector<int> ks(1 + g() % 4);
    for (auto& k : ks) k = 1 + static_cast<int>(g() % 3);
    const long n = 1 + static_cast<long>(g() % 7);
    for (auto kind : {HarmonicKind::T, HarmonicKind::S}) CHECK(harmonic_sum(kind, n, ks) == chain_sum(kind, n, ks));
  }
}

TEST_CASE("harmonic sums: boundary cases, n, m <= 6") {
  for (int m = 1; m <= 6; ++m) {
    for (long n = 1; n <= 6; ++n) {
      if (n < m) CHECK(harmonic_sum(HarmonicKind::T, n, std::vector<int>(2 * m - 1, 1)) == 0);
      if (n <= m) {
        CHECK(harmonic_sum(HarmonicKind::S, n, std::vector<int>(2 * m, 1)) == 0);
        CHECK(harmonic_sum(HarmonicKind::S, n, std::vector<int>(2 * m - 1, 1)) == 0);
        CHECK(harmonic_sum(HarmonicKind::T, n, std::vector<int>(2 * m, 1)) == 0);
      }
    }
  }
}

TEST_CASE("named constants") {
  const int d = 40;
  hp::WorkingPrecision wp(60);
  // decimal references
  const hp::Real pi("3.14159265358979323846264338327950288419716939937510582097494459");
  const hp::Real catalan("0.91596559417721901505460351493238411077414937428167213426649811962");
  const hp::Real zeta3("1.20205690315959428539973816151144999076498629234049888179227155534");
  const hp::Real ln2("0.69314718055994530941723212145817656807550013436025525412068000949");
  const hp::Real tol = hp::pow10(-(d - 2));
  CHECK(hp::abs(constant("pi", 0, d) - pi) < tol);
  CHECK(hp::abs(constant("catalan", 0, d) - catalan) < tol);
  CHECK(hp::abs(constant("zeta", 3, d) - zeta3) < tol);
  CHECK(hp::abs(constant("log2", 0, d) - ln2) < tol);
  CHECK(hp::abs(constant("zbar", 0, d) - hp::Real(mpq_class(1, 2))) < tol);
  CHECK(hp::abs(constant("zbar", 1, d) - ln2) < tol);
  CHECK(hp::abs(constant("tbar", 2, d) - 4 * catalan) < tol);
  CHECK(hp::abs(constant("G", 1, d) - catalan) < tol);
  CHECK(hp::abs(constant("tbar", 3, d) - hp::pow(pi, 3) / 4) < tol);
  CHECK(hp::abs(constant("tbar", 5, d) - 5 * hp::pow(pi, 5) / 48) < tol);
  CHECK(hp::abs(constant("ttilde", 3, d) - 7 * zeta3) < tol);
  CHECK_THROWS(constant("nope", 0, d));
}

TEST_CASE("alternating t-value at 3 by direct summation") {
  // sum_{n>=1} (-1)^{n-1} 2^3 / (2n-1)^3 with the averaged partial sums
  long double s = 0, prev = 0;
  for (long n = 1; n <= 1000000; ++n) {
    prev = s;
    s += (n % 2 ? 8.0L : -8.0L) / std::pow(2.0L * n - 1, 3);
  }
  CHECK(std::fabs((s + prev) / 2 - ld(constant("tbar", 3, 30))) < 1e-12L);
}

TEST_CASE("Euler numbers") {
  CHECK(euler_number(0) == 1);
  CHECK(euler_number(2) == -1);
  CHECK(euler_number(4) == 5);
  CHECK(euler_number(6) == -61);
  CHECK(euler_number(3) == 0);
}

TEST_CASE("oracle_eval examples") {
  const long double pi = 3.14159265358979323846L;
  auto a = oracle_eval(parse_index("-1"), 1000000);
  CHECK(std::fabs(a.value + pi / 2) <= a.bound + 1e-15L);
  auto b = oracle_eval(parse_index("1,-1"), 1000000);
  CHECK(std::fabs(b.value - pi * pi / 8) <= b.bound + 1e-15L);
  auto c = oracle_eval(parse_index("2"), 1000000);
  CHECK(std::fabs(c.value - pi * pi / 4) <= c.bound + 1e-15L);
  CHECK(c.bound < 1e-5L);
  CHECK_THROWS_AS(oracle_eval(parse_index("2,1")), NotAdmissible);
}

TEST_CASE("oracle_eval agrees with an independent brute-force sum") {
  for (const char* s : {"-1", "1,-1", "-2,-1", "1,1,-2", "2,-3", "-1,2,-1"}) {
    TIndex ix = parse_index(s);
    auto o = oracle_eval(ix, 2000000);
    const long double b = oracle::brute_T(ix.to_signed(), 2000000);
    CAPTURE(s);
    CHECK(std::fabs(o.value - b) < 1e-5L);
  }
}

TEST_CASE("weighted sums: symbolic shape") {
  // C(k-1, r-1) compositions
  CHECK(weighted_sum_symbolic(5, 3, 1).size() == 6);
  CHECK(weighted_sum_symbolic(4, 2, 2) == weighted_sum_symbolic(4, 2, 0));
  auto w = weighted_sum_symbolic(3, 2, 1);
  CHECK(w.coefficient(parse_index("-1,-2")) == 1);
  CHECK(w.coefficient(parse_index("-2,-1")) == 1);
  CHECK(w.size() == 2);
}

TEST_CASE("convoluted T examples") {
  // T((k) * (l)) = T(bar(k+l))
  for (auto [k, l] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}}) {
    auto c = convoluted_T({k}, {l}, 8);
    auto o = oracle_eval(TIndex::from_signed({-(k + l)}), 1000000);
    CHECK(std::fabs(c.value - o.value) <= c.bound + o.bound);
  }
  auto c = convoluted_T({1}, {1}, 8);
  CHECK(std::fabs(c.value + 2 * 0.915965594177219015L) <= c.bound + 1e-15L);
}

TEST_CASE("convoluted T against the weighted-sum theorems, m, p, l in {1, 2}") {
  // W_l(2p+2m+l-1, 2m+l) = 2(-1)^m sum_{j<p} zbar(2p-2-2j) T(({1}_{2m-1}, l) * {1}_{2j+2})
  // W_l(2p+2m+l-3, 2m+l-1) = 2(-1)^{m-1} sum_{j<p} zbar(2p-2-2j) T(({1}_{2m-2}, l) * {1}_{2j+1})
  auto zbar = [](int k) { return k == 0 ? 0.5L : ld(constant("zbar", k, 25)); };
  auto W = [](int k, int r, int l) {
    long double s = 0;
    for (const auto& [ix, c] : weighted_sum_symbolic(k, r, l)) s += c.get_d() * oracle::brute_T(ix.to_signed(), 400000);
    return s;
  };
  for (int m = 1; m <= 2; ++m) {
    for (int p = 1; p <= 2; ++p) {
      for (int l = 1; l <= 2; ++l) {
        std::vector<int> ks(2 * m - 1, 1);
        ks.push_back(l);
        long double rhs = 0, bound = 0;
        for (int j = 0; j < p; ++j) {
          auto c = convoluted_T(ks, std::vector<int>(2 * j + 2, 1), 6);
          rhs += 2 * zbar(2 * p - 2 - 2 * j) * c.value;
          bound += 2 * zbar(2 * p - 2 - 2 * j) * c.bound;
        }
        rhs *= (m % 2 ? -1 : 1);
        CAPTURE(m);
        CAPTURE(p);
        CAPTURE(l);
        CHECK(std::fabs(W(2 * p + 2 * m + l - 1, 2 * m + l, l) - rhs) < bound + 1e-4L);

        std::vector<int> ks2(2 * m - 2, 1);
        ks2.push_back(l);
        long double rhs2 = 0, bound2 = 0;
        for (int j = 0; j < p; ++j) {
          auto c = convoluted_T(ks2, std::vector<int>(2 * j + 1, 1), 6);
          rhs2 += 2 * zbar(2 * p - 2 - 2 * j) * c.value;
          bound2 += 2 * zbar(2 * p - 2 - 2 * j) * c.bound;
        }
        rhs2 *= (m % 2 ? 1 : -1);
        if (2 * p + 2 * m + l - 3 >= 2 * m + l - 1)
          CHECK(std::fabs(W(2 * p + 2 * m + l - 3, 2 * m + l - 1, l) - rhs2) < bound2 + 1e-4L);
      }
    }
  }
}

TEST_CASE("log-moment integrals: closed form vs quadrature, n, m <= 3") {
  CHECK(std::fabs(log_moment_quadrature(1, 1, LogRow::oo) + 1.0L) < 1e-10L);
  CHECK(ld(evaluate(log_moment_integral(1, 1, LogRow::oo), 20)) == doctest::Approx(-1.0).epsilon(1e-15));
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 3; ++m)
      for (auto row : {LogRow::ee, LogRow::eo, LogRow::oe, LogRow::oo}) {
        CAPTURE(n);
        CAPTURE(m);
        CAPTURE(static_cast<int>(row));
        const long double closed = ld(evaluate(log_moment_integral(n, m, row), 25));
        CHECK(std::fabs(closed - log_moment_quadrature(n, m, row)) < 1e-10L * std::max(1.0L, std::fabs(closed)));
      }
}

TEST_CASE("alternating odd harmonic closed forms") {
  auto direct = [](int p, int q) {
    // sum (-1)^{n-1} hbar_n^{(p)} / n^q, hbar_n^{(p)} = sum_{k<=n} (-1)^{k-1} / (k - 1/2)^p
    // averaged partial sums at N, 2N, 4N, ... then Richardson in powers of 1/N
    std::vector<long double> avg;
    long double h = 0, s = 0, prev = 0;
    long next = 125000;
    for (long n = 1; n <= 2000000; ++n) {
      h += (n % 2 ? 1 : -1) / std::pow(n - 0.5L, p);
      prev = s;
      s += (n % 2 ? 1 : -1) * h / std::pow(static_cast<long double>(n), q);
      if (n == next) {
        avg.push_back((s + prev) / 2);
        next *= 2;
      }
    }
    for (size_t k = 1; k < avg.size(); ++k)
      for (size_t i = avg.size() - 1; i >= k; --i) {
        const long double f = std::ldexp(1.0L, static_cast<int>(k));
        avg[i] = (f * avg[i] - avg[i - 1]) / (f - 1);
      }
    return avg.back();
  };
  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {1, 3}, {3, 1}}) {
    CAPTURE(p);
    CAPTURE(q);
    CHECK(std::fabs(ld(evaluate(alt_odd_harmonic_closed(p, q), 25)) - direct(p, q)) < 1e-8L);
  }
  CHECK_THROWS(alt_odd_harmonic_closed(1, 2));
}

TEST_CASE("triangular inversion") {
  std::function<mpq_class(int, int)> A2 = [](int j, int p) { return j == p ? mpq_class(1) : mpq_class(3 * j + p, 7); };
  auto b = triangular_invert(A2, std::vector<mpq_class>{5, 9});
  CHECK(b[0] == 5);
  CHECK(b[1] == mpq_class(9) - A2(1, 2) * 5);
  std::mt19937_64 g(5);
  std::vector<std::vector<mpq_class>> M(7, std::vector<mpq_class>(7));
  for (int j = 1; j <= 6; ++j)
    for (int p = j; p <= 6; ++p) {
      M[j][p] = j == p ? mpq_class(1) : mpq_class(static_cast<long>(g() % 21) - 10, 1 + g() % 5);
      M[j][p].canonicalize();
    }
  std::function<mpq_class(int, int)> A = [&](int j, int p) { return M[j][p]; };
  std::vector<mpq_class> C;
  for (int i = 0; i < 6; ++i) {
    C.emplace_back(static_cast<long>(g() % 41) - 20, 1 + g() % 3);
    C.back().canonicalize();
  }
  CHECK(triangular_invert(A, C) == forward_substitute(A, C));
}
