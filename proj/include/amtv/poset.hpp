#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "amtv/formal_sum.hpp"
#include "amtv/series.hpp"
#include "amtv/tvalue.hpp"

namespace amtv {

// Finite poset on elements 0..n-1 (n <= 64) with labels in {-1, 0, 1}.
class Poset3 {
 public:
  Poset3() = default;
  // cover: pairs (a, b) meaning a < b. Throws AmtvError on cycles or bad labels.
  Poset3(std::vector<int> labels, const std::vector<std::pair<int, int>>& cover);

  // {"labels": {id: -1|0|1}, "cover": [[a, b], ...]}; ids are integers.
  static Poset3 from_json(const std::string& text);
  std::string to_json() const;

  int size() const { return static_cast<int>(labels_.size()); }
  int label(int x) const { return labels_[x]; }
  const std::vector<int>& labels() const { return labels_; }
  bool less(int a, int b) const { return (up_[a] >> b) & 1U; }
  bool comparable(int a, int b) const { return a == b || less(a, b) || less(b, a); }
  // Elements strictly above x.
  uint64_t up_set(int x) const { return up_[x]; }
  // New poset with a < b adjoined (a, b incomparable).
  Poset3 with_relation(int a, int b) const;
  bool is_chain() const;
  // Elements in increasing order; requires is_chain().
  std::vector<int> chain_order() const;

  bool operator==(const Poset3& o) const { return labels_ == o.labels_ && up_ == o.up_; }
  bool operator<(const Poset3& o) const { return std::tie(labels_, up_) < std::tie(o.labels_, o.up_); }

 private:
  std::vector<int> labels_;
  std::vector<uint64_t> up_;  // transitive closure: bit y of up_[x] set iff x < y
  void close();
};

bool poset_admissible(const Poset3& x);

enum class PivotRule { Lexicographic, Random };

// I(X) as a sum of words, by repeated use of I(X) = I(X^b_a) + I(X^a_b).
// The random rule draws pivots from a generator seeded with `seed`.
FormalSum<Word> expand_poset(const Poset3& x, PivotRule rule = PivotRule::Lexicographic, uint64_t seed = 0);

// Number of linear extensions by dynamic programming over order ideals.
mpz_class count_linear_extensions(const Poset3& x);

// Two-chain poset for psi-bar(ks; p + 1): left chain of (bullet -1, circles) per k_j,
// p bullets labeled 1 (pairwise incomparable), all below a top circle.
Poset3 psi_bar_poset(const std::vector<int>& ks, int p);

// psi-bar(ks; p + 1) as a combination of AMTVs.
FormalSum<TIndex> psi_bar_symbolic(const std::vector<int>& ks, int p);

// B(ks; x) by its power series, continued around x = 3/4 for x > 1/2.
long double psi_bar_B(const std::vector<int>& ks, long double x);

// Direct quadrature of (-1)^p/p! int_0^1 log^p((1-x)/(1+x)) B(ks;x)/x dx.
ErrBound psi_bar_quadrature(const std::vector<int>& ks, int p, int digits = 12);

}  // namespace amtv
