#include <doctest.h>

#include <cmath>
#include <random>

#include "amtv/constants.hpp"
#include "amtv/errors.hpp"
#include "amtv/level4.hpp"
#include "amtv/poset.hpp"
#include "amtv/series.hpp"
#include "oracle.hpp"

using namespace amtv;

namespace {

struct RandomPoset {
  Poset3 poset;
  std::vector<std::pair<int, int>> cover;
};

// Random DAG on n elements with edges only from smaller to larger ids.
RandomPoset random_poset(std::mt19937_64& g, int n, bool admissible_labels) {
  std::vector<std::pair<int, int>> cover;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (g() % 3 == 0) cover.emplace_back(a, b);
  std::vector<int> labels(n);
  for (auto& l : labels) l = static_cast<int>(g() % 3) - 1;
  if (admissible_labels) {
    std::vector<bool> has_up(n, false), has_down(n, false);
    for (auto [a, b] : cover) has_up[a] = has_down[b] = true;
    for (int x = 0; x < n; ++x) {
      if (!has_up[x] && labels[x] == 1) labels[x] = -1;
      if (!has_down[x] && labels[x] == 0) labels[x] = -1;
    }
  }
  return {Poset3(labels, cover), cover};
}

long double eval_sum(const FormalSum<TIndex>& s, Evaluator& ev) {
  hp::Real acc(0L);
  for (const auto& [ix, c] : s) acc += hp::Real(c) * ev.T(ix).value;
  return acc.to_long_double();
}

std::vector<int> ones(int n) { return std::vector<int>(n, 1); }

}  // namespace

TEST_CASE("admissibility rule") {
  CHECK(poset_admissible(Poset3({-1}, {})));
  CHECK_FALSE(poset_admissible(Poset3({0}, {})));
  CHECK_FALSE(poset_admissible(Poset3({1}, {})));
  CHECK(poset_admissible(Poset3({-1, 0}, {{0, 1}})));
  CHECK_FALSE(poset_admissible(Poset3({-1, 1}, {{0, 1}})));
  CHECK_THROWS_AS(expand_poset(Poset3({0}, {})), NotAdmissible);
}

TEST_CASE("construction and JSON") {
  CHECK_THROWS_AS(Poset3({-1, 0}, {{0, 1}, {1, 0}}), AmtvError);
  CHECK_THROWS_AS(Poset3({2}, {}), AmtvError);
  Poset3 x({-1, 0, 1}, {{0, 1}, {1, 2}});
  CHECK(x.less(0, 2));
  CHECK(x.is_chain());
  CHECK(Poset3::from_json(x.to_json()) == x);
  Poset3 y = Poset3::from_json(R"({"labels": {"0": -1, "1": 0}, "cover": [[0, 1]]})");
  CHECK(y.less(0, 1));
  CHECK_THROWS(Poset3::from_json("not json"));
}

TEST_CASE("expansion examples") {
  auto chain = expand_poset(Poset3({-1, 0}, {{0, 1}}));
  CHECK(chain.size() == 1);
  CHECK(chain.coefficient(parse_word("mz")) == 1);
  auto anti = expand_poset(Poset3({-1, -1}, {}));
  CHECK(anti.size() == 1);
  CHECK(anti.coefficient(parse_word("mm")) == 2);
  // p bullets below a top circle: p! copies of one chain
  for (int p = 1; p <= 5; ++p) {
    std::vector<int> labels(p, -1);
    labels.push_back(0);
    std::vector<std::pair<int, int>> cover;
    for (int i = 0; i < p; ++i) cover.emplace_back(i, p);
    auto fan = expand_poset(Poset3(labels, cover));
    CHECK(fan.size() == 1);
    long fact = 1;
    for (int i = 2; i <= p; ++i) fact *= i;
    CHECK(fan.mass() == fact);
  }
}

TEST_CASE("property: mass equals linear extensions, |X| <= 6") {
  std::mt19937_64 g(77);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + static_cast<int>(g() % 6);
    auto rp = random_poset(g, n, true);
    const long brute = oracle::count_extensions(n, rp.cover);
    CHECK(count_linear_extensions(rp.poset) == brute);
    if (!poset_admissible(rp.poset)) continue;
    auto s = expand_poset(rp.poset);
    CHECK(s.mass() == brute);
    for (const auto& [w, c] : s) {
      CHECK(w.weight() == n);
      CHECK(is_admissible(w));
    }
  }
}

TEST_CASE("property: pivot independence") {
  std::mt19937_64 g(8);
  for (int t = 0; t < 60; ++t) {
    auto rp = random_poset(g, 2 + static_cast<int>(g() % 6), true);
    if (!poset_admissible(rp.poset)) continue;
    auto lex = expand_poset(rp.poset);
    for (uint64_t seed = 1; seed <= 3; ++seed) CHECK(expand_poset(rp.poset, PivotRule::Random, seed) == lex);
  }
}

TEST_CASE("psi-bar expansions") {
  auto e = psi_bar_symbolic({1, 2}, 1);
  FormalSum<TIndex> want;
  for (const char* s : {"1,-2,2", "1,-1,3", "-1,-1,-3", "-1,1,-3"}) want.add(parse_index(s), 1);
  CHECK(e == want);
  auto one = psi_bar_symbolic({1}, 0);
  CHECK(one.size() == 1);
  CHECK(one.coefficient(parse_index("-2")) == -1);
  // term mass: C(p + |k|, p) interleavings of the two chains below the top
  CHECK(count_linear_extensions(psi_bar_poset({1, 2}, 3)) == 120);
  for (auto [ks, p] : std::vector<std::pair<std::vector<int>, int>>{{{1}, 2}, {{2, 1}, 2}, {{1, 1, 1}, 3}}) {
    int k = 0;
    for (int x : ks) k += x;
    mpq_class mass = 0;
    for (const auto& [ix, c] : psi_bar_symbolic(ks, p)) mass += abs(c);
    CHECK(mass <= oracle::binomial(p + k, p));
  }
}

TEST_CASE("psi-bar quadrature agrees with the expansion") {
  Evaluator ev(20);
  for (auto [ks, p] : std::vector<std::pair<std::vector<int>, int>>{{{1}, 0}, {{1, 2}, 1}, {{2}, 1}, {{1, 1}, 2}}) {
    auto q = psi_bar_quadrature(ks, p, 12);
    CHECK(q.bound <= 1e-12L);
    CHECK(std::fabs(q.value - eval_sum(psi_bar_symbolic(ks, p), ev)) < 1e-10L);
  }
  CHECK(std::fabs(psi_bar_quadrature({1}, 0).value - 2 * 0.915965594177219015L) < 1e-10L);
  CHECK_THROWS_AS(psi_bar_quadrature({1}, 0, 30), PrecisionError);
}

TEST_CASE("psi-bar and weighted sums") {
  // psibar({1}_{r-1}, l; p+1) = (-1)^r W_l(p+r+l, r+l)
  Evaluator ev(30);
  for (auto [r, l, p] : std::vector<std::tuple<int, int, int>>{{1, 1, 1}, {2, 1, 0}, {1, 2, 1}, {2, 2, 1}, {3, 1, 2}}) {
    auto ks = ones(r - 1);
    ks.push_back(l);
    auto lhs = psi_bar_symbolic(ks, p);
    auto rhs = weighted_sum_symbolic(p + r + l, r + l, l);
    if (r % 2) rhs *= mpq_class(-1);
    CAPTURE(r);
    CAPTURE(l);
    CAPTURE(p);
    CHECK(std::fabs(eval_sum(lhs, ev) - eval_sum(rhs, ev)) < 1e-25L);
  }
}

TEST_CASE("psi-bar and convoluted values") {
  // psibar(k_{2m-1}; 2p)   = (-1)^m 2 sum_{j<p} zbar(2p-1-2j) T(k * {1}_{2j+1}) + (-1)^m T(k * {1}_{2p})
  // psibar(k_{2m-1}; 2p+1) = (-1)^m 2 sum_{j<=p} zbar(2p-2j) T(k * {1}_{2j+1})
  // psibar(k_{2m}; 2p)     = (-1)^m 2 sum_{j<p} zbar(2p-2-2j) T(k * {1}_{2j+2})
  // psibar(k_{2m}; 2p+1)   = (-1)^m 2 sum_{j<p} zbar(2p-1-2j) T(k * {1}_{2j+2}) + (-1)^m T(k * {1}_{2p+1})
  Evaluator ev(20);
  auto zbar = [](int k) { return k == 0 ? 0.5L : constant("zbar", k, 25).to_long_double(); };
  auto conv = [](const std::vector<int>& ks, int n, long double& bound) {
    auto c = convoluted_T(ks, ones(n), 7);
    bound += std::fabs(c.bound);
    return c.value;
  };
  for (const auto& ks : std::vector<std::vector<int>>{{1}, {2}, {1, 1}, {2, 1}}) {
    const int depth = static_cast<int>(ks.size());
    const int m = (depth + 1) / 2;
    const long double sm = m % 2 ? -1 : 1;
    for (int p = 1; p <= 2; ++p) {
      for (int s : {2 * p, 2 * p + 1}) {
        long double rhs = 0, bound = 0;
        if (depth % 2) {
          if (s == 2 * p) {
            for (int j = 0; j < p; ++j) rhs += 2 * zbar(2 * p - 1 - 2 * j) * conv(ks, 2 * j + 1, bound);
            rhs += conv(ks, 2 * p, bound);
          } else {
            for (int j = 0; j <= p; ++j) rhs += 2 * zbar(2 * p - 2 * j) * conv(ks, 2 * j + 1, bound);
          }
        } else {
          if (s == 2 * p) {
            for (int j = 0; j < p; ++j) rhs += 2 * zbar(2 * p - 2 - 2 * j) * conv(ks, 2 * j + 2, bound);
          } else {
            for (int j = 0; j < p; ++j) rhs += 2 * zbar(2 * p - 1 - 2 * j) * conv(ks, 2 * j + 2, bound);
            rhs += conv(ks, 2 * p + 1, bound);
          }
        }
        rhs *= sm;
        const long double lhs = eval_sum(psi_bar_symbolic(ks, s - 1), ev);
        CAPTURE(depth);
        CAPTURE(ks[0]);
        CAPTURE(s);
        CHECK(std::fabs(lhs - rhs) < 4 * bound + 1e-6L);
      }
    }
  }
}
