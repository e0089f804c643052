#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "amtv/cache.hpp"
#include "amtv/constants.hpp"
#include "amtv/formal_sum.hpp"
#include "amtv/hp.hpp"
#include "amtv/tvalue.hpp"

namespace amtv {

// Poles of dt/(t - a). The first five form the level-4 alphabet; the rest
// appear only after the t -> 1 - t map of a half-path piece.
enum class Pole : uint8_t { Zero, One, MinusOne, I, MinusI, Two, OnePlusI, OneMinusI };

char pole_char(Pole p);
Pole pole_from_char(char c);

struct Level4Word {
  std::vector<Pole> letters;

  auto operator<=>(const Level4Word&) const = default;
  bool operator==(const Level4Word&) const = default;
};

// "0", "1", "n" (-1), "i", "j" (-i)
std::string to_string(const Level4Word& v);
Level4Word parse_level4(std::string_view text);
bool is_integrable(const Level4Word& v);

FormalSum<Level4Word, GaussRational> expand_letters(const Word& w);

struct HPReal {
  hp::Real value;
  hp::Real err;
};

struct HPComplex {
  hp::Complex value;
  hp::Real err;
};

struct EvalOptions {
  std::string cache_path;  // empty: no persistent cache
  int jobs = 1;
};

class Evaluator {
 public:
  explicit Evaluator(int digits, EvalOptions opts = {});

  int digits() const { return digits_; }
  long terms() const { return terms_; }
  // Override the truncation order (clears memoized values).
  void set_terms(long n);

  HPComplex level4(const Level4Word& v);
  std::vector<HPComplex> level4_many(const std::vector<Level4Word>& vs);

  // I(w) over [0,1]
  HPComplex word(const Word& w);
  std::vector<HPComplex> words(const std::vector<Word>& ws);

  HPReal T(const TIndex& ix);
  std::vector<HPReal> T_many(const std::vector<TIndex>& ixs);

  // Li_{ks}(eta) with eta_j = i^{e_j}, summed over n_1 < ... < n_r.
  HPComplex colored_mzv(const std::vector<int>& ks, const std::vector<int>& eta_exponents);

  // Numeric value of a constant expression; T-values evaluated in one batch.
  HPReal evaluate(const ConstExpr& e);
  std::vector<HPReal> evaluate_many(const std::vector<ConstExpr>& es);

  std::size_t cache_hits() const { return cache_hits_; }
  ValueCache* cache() { return cache_.get(); }

 private:
  int digits_;
  long terms_;
  mpfr_prec_t bits_;
  EvalOptions opts_;
  std::unique_ptr<ValueCache> cache_;
  std::mutex mu_;
  std::unordered_map<std::string, hp::Complex> half_;  // I_{0 -> 1/2}(pole word)
  std::map<Word, HPComplex> words_;
  std::size_t cache_hits_ = 0;

  hp::Real piece_err() const;
  void compute_half(const std::vector<std::string>& keys);
};

HPComplex eval_level4(const Level4Word& v, int digits);
HPReal eval_T(const TIndex& ix, int digits);
HPComplex eval_colored_mzv(const std::vector<int>& ks, const std::vector<int>& eta_exponents, int digits);

HPReal weighted_sum(int k, int r, int l, Evaluator& ev);

}  // namespace amtv
