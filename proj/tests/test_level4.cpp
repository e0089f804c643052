#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <thread>
#include <unistd.h>

#include "amtv/cache.hpp"
#include "amtv/constants.hpp"
#include "amtv/errors.hpp"
#include "amtv/level4.hpp"
#include "amtv/series.hpp"
#include "oracle.hpp"

using namespace amtv;

namespace {

const char* kPi = "3.14159265358979323846264338327950288419716939937510582097494459";
const char* kLn2 = "0.69314718055994530941723212145817656807550013436025525412068000949";

bool close(const hp::Real& a, const hp::Real& b, int exp) { return hp::abs(a - b) < hp::pow10(-exp); }

std::string tmp_path(const char* name) {
  return (std::filesystem::temp_directory_path() / (std::string(name) + std::to_string(::getpid()))).string();
}

}  // namespace

TEST_CASE("level-4 words") {
  CHECK(to_string(parse_level4("0ni")) == "0ni");
  CHECK(is_integrable(parse_level4("n0")));
  CHECK_FALSE(is_integrable(parse_level4("0n")));
  CHECK_FALSE(is_integrable(parse_level4("n1")));
  // each letter of a word splits into Gaussian-rational combinations of level-4 letters
  auto e = expand_letters(parse_word("mz"));
  CHECK_FALSE(e.empty());
}

TEST_CASE("path composition: log 2 at full precision") {
  hp::WorkingPrecision wp(60);
  auto v = eval_level4(parse_level4("n"), 50);
  CHECK(close(v.value.re, hp::Real(kLn2), 48));
  CHECK(hp::abs(v.value.im) < hp::pow10(-48));
}

TEST_CASE("depth-one values") {
  hp::WorkingPrecision wp(60);
  const hp::Real pi(kPi);
  Evaluator ev(40);
  CHECK(close(ev.T(parse_index("-1")).value, -pi / 2, 38));
  CHECK(close(ev.T(parse_index("2")).value, pi * pi / 4, 38));
  CHECK(close(ev.T(parse_index("1,-1")).value, pi * pi / 8, 38));
  CHECK(close(ev.T(parse_index("-3")).value, -hp::pow(pi, 3) / 16, 38));
  CHECK(ev.T(parse_index("-1")).err < hp::pow10(-38));
  CHECK_THROWS_AS(ev.T(parse_index("2,1")), NotAdmissible);
}

TEST_CASE("colored MZV Li_1(i)") {
  hp::WorkingPrecision wp(60);
  auto z = eval_colored_mzv({1}, {1}, 40);
  CHECK(close(z.value.re, -hp::Real(kLn2) / 2, 38));
  CHECK(close(z.value.im, hp::Real(kPi) / 4, 38));
}

TEST_CASE("word and index evaluation agree through the sign contract") {
  Evaluator ev(30);
  for (int w = 1; w <= 4; ++w) {
    for (const auto& ix : enumerate_indices(w)) {
      SignedWord sw = to_word(ix);
      hp::Real t = ev.T(ix).value;
      hp::Real i = ev.word(sw.word).value.re;
      CHECK(close(t, sw.sign == Sign::Plus ? i : -i, 27));
    }
  }
}

TEST_CASE("reality: imaginary parts vanish, weight <= 5") {
  for (int d : {30, 60}) {
    Evaluator ev(d);
    hp::WorkingPrecision wp(d + 10);
    for (int w = 1; w <= 5; ++w) {
      auto ws = enumerate_words(w);
      auto vals = ev.words(ws);
      for (size_t i = 0; i < ws.size(); ++i) {
        CAPTURE(to_string(ws[i]));
        CHECK(hp::abs(vals[i].value.im) < hp::pow10(-(d - 3)));
      }
    }
  }
}

TEST_CASE("precision doubling spot checks") {
  std::mt19937_64 g(99);
  Evaluator base(30), fine(30);
  fine.set_terms(2 * base.terms());
  hp::WorkingPrecision wp(40);
  for (int t = 0; t < 20; ++t) {
    const int w = 2 + static_cast<int>(g() % 4);
    auto ws = enumerate_words(w);
    const Word& word = ws[g() % ws.size()];
    auto a = base.word(word);
    auto b = fine.word(word);
    CAPTURE(to_string(word));
    CHECK(hp::abs(a.value - b.value) <= a.err + b.err);
  }
}

TEST_CASE("shuffle consistency") {
  std::mt19937_64 g(3);
  Evaluator ev(30);
  hp::WorkingPrecision wp(40);
  std::vector<TIndex> pool;
  for (int w = 1; w <= 3; ++w)
    for (auto& ix : enumerate_indices(w)) pool.push_back(ix);
  for (int t = 0; t < 25; ++t) {
    const TIndex& a = pool[g() % pool.size()];
    const TIndex& b = pool[g() % pool.size()];
    hp::Real prod = ev.T(a).value * ev.T(b).value;
    hp::Real sum(0L);
    for (const auto& [ix, c] : product_as_T(a, b)) sum += hp::Real(c) * ev.T(ix).value;
    CHECK(close(prod, sum, 25));
  }
}

TEST_CASE("agreement with brute-force sums") {
  Evaluator ev(20);
  for (const char* s : {"1,1,1,-2", "-2,-1", "1,-2", "-1,-1,-1", "2,-3"}) {
    TIndex ix = parse_index(s);
    CAPTURE(s);
    CHECK(std::fabs(ev.T(ix).value.to_long_double() - oracle::brute_T(ix.to_signed(), 1000000)) < 1e-5L);
  }
}

TEST_CASE("weighted sums numeric") {
  Evaluator ev(30);
  hp::WorkingPrecision wp(40);
  const hp::Real pi(kPi);
  CHECK(close(weighted_sum(3, 3, 2, ev).value, -hp::pow(pi, 3) / 16, 27));
  CHECK(close(weighted_sum(2, 2, 1, ev).value, -constant("tbar", 2, 30) / 2, 27));
}

TEST_CASE("persistent value cache") {
  const std::string path = tmp_path("amtv-cache-test-");
  std::filesystem::remove(path);
  {
    ValueCache c(path);
    CHECK(c.size() == 0);
    CHECK(c.put({"mz", 30, "1.5", "0", 1}));
    CHECK_FALSE(c.put({"mz", 20, "1.4", "0", 2}));
    CHECK(c.put({"mz", 40, "1.55", "0", 3}));
    CHECK(c.get("mz", 35)->re == "1.55");
    CHECK_FALSE(c.get("mz", 50).has_value());
  }
  {
    std::ofstream(path, std::ios::app) << "this is not json\n";
    ValueCache c(path);
    CHECK(c.size() == 1);
    CHECK(c.skipped_lines() == 1);
    c.compact();
  }
  {
    ValueCache c(path);
    CHECK(c.skipped_lines() == 0);
    CHECK(c.get("mz", 40)->digits == 40);
    // concurrent readers and writers keep the store coherent
    std::vector<std::thread> ts;
    for (int t = 0; t < 4; ++t)
      ts.emplace_back([&c, t] {
        for (int i = 0; i < 50; ++i) {
          c.put({std::string(t + 1, 'p') + std::string(i + 1, 'z'), 10, "1", "0", i});
          (void)c.get("mz", 40);
        }
      });
    for (auto& th : ts) th.join();
    CHECK(c.size() == 201);
  }
  std::filesystem::remove(path);
}

TEST_CASE("evaluator with cache: warm values are identical") {
  const std::string path = tmp_path("amtv-ev-cache-");
  std::filesystem::remove(path);
  std::string first;
  {
    Evaluator ev(30, EvalOptions{path, 1});
    first = ev.T(parse_index("1,1,-2")).value.to_string(30);
  }
  {
    Evaluator ev(30, EvalOptions{path, 1});
    CHECK(ev.T(parse_index("1,1,-2")).value.to_string(30) == first);
    CHECK(ev.cache_hits() > 0);
  }
  std::filesystem::remove(path);
}
