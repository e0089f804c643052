#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "amtv/formal_sum.hpp"

namespace amtv {

enum class Sign : int8_t { Minus = -1, Plus = 1 };

inline int to_int(Sign s) { return static_cast<int>(s); }
inline Sign operator*(Sign a, Sign b) { return to_int(a) * to_int(b) > 0 ? Sign::Plus : Sign::Minus; }
inline Sign operator-(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

// Serialization order NEG < ZERO < POS.
enum class Letter : uint8_t { Neg = 0, Zero = 1, Pos = 2 };

char letter_char(Letter l);
Letter letter_from_char(char c);

struct TIndex {
  std::vector<int> ks;
  std::vector<Sign> sigmas;

  TIndex() = default;
  TIndex(std::vector<int> k, std::vector<Sign> s);
  // Signed exponents: negative means barred.
  static TIndex from_signed(const std::vector<int>& signed_ks);
  std::vector<int> to_signed() const;

  int weight() const;
  int depth() const { return static_cast<int>(ks.size()); }

  auto operator<=>(const TIndex&) const = default;
  bool operator==(const TIndex&) const = default;
};

struct Word {
  std::vector<Letter> letters;

  Word() = default;
  explicit Word(std::vector<Letter> l) : letters(std::move(l)) {}

  int weight() const { return static_cast<int>(letters.size()); }
  int count(Letter l) const;
  int alpha() const { return count(Letter::Zero); }
  int beta() const { return count(Letter::Pos); }
  int gamma() const { return count(Letter::Neg); }

  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;
};

// "1,-2" <-> T(1,\bar2)
TIndex parse_index(std::string_view text);
std::string to_string(const TIndex& ix);
// "mz" <-> omega_{-1} omega_0
Word parse_word(std::string_view text);
std::string to_string(const Word& w);

bool is_admissible(const TIndex& ix);
bool is_admissible(const Word& w);

// Tail products sigma'_j = sigma_j ... sigma_r.
std::vector<Sign> tail_products(const TIndex& ix);

struct SignedWord {
  Sign sign;
  Word word;
};

struct SignedIndex {
  Sign sign;
  TIndex index;
};

// T(ix) = sign * I(w)
SignedWord to_word(const TIndex& ix);
// T(ix) = sign * I(w)
SignedIndex from_word(const Word& w);

Word dual_word(const Word& w);
TIndex dual(const TIndex& ix);

FormalSum<Word> shuffle(const Word& u, const Word& v);
FormalSum<TIndex> product_as_T(const TIndex& a, const TIndex& b);

// Admissible words of the given weight, lexicographic.
std::vector<Word> enumerate_words(int weight);
Word canonical_rep(const Word& w);
// Distinct canonical representatives, lexicographic.
std::vector<Word> canonical_reps(int weight);

// Every admissible index of the given weight, ordered by depth then signed entries.
std::vector<TIndex> enumerate_indices(int weight);

}  // namespace amtv
