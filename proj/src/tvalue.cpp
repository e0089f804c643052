#include "amtv/tvalue.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>

#include "amtv/errors.hpp"

namespace amtv {

char letter_char(Letter l) {
  switch (l) {
    case Letter::Neg:
      return 'm';
    case Letter::Zero:
      return 'z';
    case Letter::Pos:
      return 'p';
  }
  return '?';
}

Letter letter_from_char(char c) {
  switch (c) {
    case 'm':
      return Letter::Neg;
    case 'z':
      return Letter::Zero;
    case 'p':
      return Letter::Pos;
    default:
      throw ParseError(std::string("bad letter '") + c + "'");
  }
}

namespace {

Letter letter_of(Sign s) { return s == Sign::Plus ? Letter::Pos : Letter::Neg; }

}  // namespace

TIndex::TIndex(std::vector<int> k, std::vector<Sign> s) : ks(std::move(k)), sigmas(std::move(s)) {
  if (ks.size() != sigmas.size()) throw ParseError("ks and sigmas differ in length");
  for (int x : ks)
    if (x < 1) throw ParseError("exponents must be positive");
}

TIndex TIndex::from_signed(const std::vector<int>& signed_ks) {
  TIndex ix;
  for (int x : signed_ks) {
    if (x == 0) throw ParseError("zero entry in index");
    ix.ks.push_back(x < 0 ? -x : x);
    ix.sigmas.push_back(x < 0 ? Sign::Minus : Sign::Plus);
  }
  return ix;
}

std::vector<int> TIndex::to_signed() const {
  std::vector<int> out(ks.size());
  for (size_t j = 0; j < ks.size(); ++j) out[j] = sigmas[j] == Sign::Minus ? -ks[j] : ks[j];
  return out;
}

int TIndex::weight() const {
  int w = 0;
  for (int k : ks) w += k;
  return w;
}

int Word::count(Letter l) const { return static_cast<int>(std::count(letters.begin(), letters.end(), l)); }

TIndex parse_index(std::string_view text) {
  if (text.empty()) throw ParseError("empty index");
  std::vector<int> out;
  size_t pos = 0;
  while (true) {
    size_t end = text.find(',', pos);
    std::string_view tok = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    size_t digits_at = (!tok.empty() && tok[0] == '-') ? 1 : 0;
    if (tok.size() <= digits_at || tok[digits_at] < '1' || tok[digits_at] > '9')
      throw ParseError("bad index entry '" + std::string(tok) + "'");
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
      throw ParseError("bad index entry '" + std::string(tok) + "'");
    out.push_back(v);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return TIndex::from_signed(out);
}

std::string to_string(const TIndex& ix) {
  std::string s;
  auto v = ix.to_signed();
  for (size_t j = 0; j < v.size(); ++j) {
    if (j) s += ',';
    s += std::to_string(v[j]);
  }
  return s;
}

Word parse_word(std::string_view text) {
  if (text.empty()) throw ParseError("empty word");
  Word w;
  for (char c : text) w.letters.push_back(letter_from_char(c));
  return w;
}

std::string to_string(const Word& w) {
  std::string s;
  for (Letter l : w.letters) s += letter_char(l);
  return s;
}

bool is_admissible(const TIndex& ix) {
  if (ix.ks.empty()) return false;
  return !(ix.ks.back() == 1 && ix.sigmas.back() == Sign::Plus);
}

bool is_admissible(const Word& w) {
  if (w.letters.empty()) return false;
  return w.letters.front() != Letter::Zero && w.letters.back() != Letter::Pos;
}

std::vector<Sign> tail_products(const TIndex& ix) {
  std::vector<Sign> t(ix.sigmas.size());
  Sign acc = Sign::Plus;
  for (size_t j = ix.sigmas.size(); j-- > 0;) {
    acc = acc * ix.sigmas[j];
    t[j] = acc;
  }
  return t;
}

SignedWord to_word(const TIndex& ix) {
  if (!is_admissible(ix)) throw NotAdmissible("not admissible: " + to_string(ix));
  auto tp = tail_products(ix);
  SignedWord out{Sign::Plus, {}};
  for (size_t j = 0; j < ix.ks.size(); ++j) {
    out.word.letters.push_back(letter_of(tp[j]));
    for (int e = 1; e < ix.ks[j]; ++e) out.word.letters.push_back(Letter::Zero);
    out.sign = out.sign * tp[j];
  }
  return out;
}

SignedIndex from_word(const Word& w) {
  if (!is_admissible(w)) throw NotAdmissible("not admissible: " + to_string(w));
  std::vector<Sign> s;
  std::vector<int> ks;
  for (Letter l : w.letters) {
    if (l == Letter::Zero) {
      ++ks.back();
    } else {
      s.push_back(l == Letter::Pos ? Sign::Plus : Sign::Minus);
      ks.push_back(1);
    }
  }
  SignedIndex out{Sign::Plus, {}};
  std::vector<Sign> sig(s.size());
  for (size_t j = 0; j < s.size(); ++j) {
    sig[j] = (j + 1 < s.size()) ? s[j] * s[j + 1] : s[j];
    out.sign = out.sign * s[j];
  }
  out.index = TIndex(std::move(ks), std::move(sig));
  return out;
}

Word dual_word(const Word& w) {
  Word d;
  d.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    Letter l = *it;
    if (l == Letter::Zero)
      l = Letter::Pos;
    else if (l == Letter::Pos)
      l = Letter::Zero;
    d.letters.push_back(l);
  }
  return d;
}

TIndex dual(const TIndex& ix) { return from_word(dual_word(to_word(ix).word)).index; }

FormalSum<Word> shuffle(const Word& u, const Word& v) {
  // Suffix shuffles, indexed by starting positions.
  const size_t n = u.letters.size(), m = v.letters.size();
  std::vector<std::vector<FormalSum<Word>>> t(n + 1, std::vector<FormalSum<Word>>(m + 1));
  for (size_t i = n + 1; i-- > 0;) {
    for (size_t j = m + 1; j-- > 0;) {
      if (i == n && j == m) {
        t[i][j].add(Word{}, 1);
        continue;
      }
      FormalSum<Word> acc;
      auto prepend = [&acc](Letter l, const FormalSum<Word>& s) {
        for (const auto& [w, c] : s) {
          Word x;
          x.letters.reserve(w.letters.size() + 1);
          x.letters.push_back(l);
          x.letters.insert(x.letters.end(), w.letters.begin(), w.letters.end());
          acc.add(x, c);
        }
      };
      if (i < n) prepend(u.letters[i], t[i + 1][j]);
      if (j < m) prepend(v.letters[j], t[i][j + 1]);
      t[i][j] = std::move(acc);
    }
  }
  return t[0][0];
}

FormalSum<TIndex> product_as_T(const TIndex& a, const TIndex& b) {
  auto wa = to_word(a);
  auto wb = to_word(b);
  mpq_class s = to_int(wa.sign * wb.sign);
  FormalSum<TIndex> out;
  for (const auto& [w, c] : shuffle(wa.word, wb.word)) {
    auto si = from_word(w);
    out.add(si.index, c * s * to_int(si.sign));
  }
  return out;
}

std::vector<Word> enumerate_words(int weight) {
  std::vector<Word> out;
  if (weight < 1) return out;
  if (weight == 1) {
    out.push_back(Word({Letter::Neg}));
    return out;
  }
  const Letter all[3] = {Letter::Neg, Letter::Zero, Letter::Pos};
  std::vector<Letter> cur(weight);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == weight) {
      Word w(cur);
      if (is_admissible(w)) out.push_back(std::move(w));
      return;
    }
    for (Letter l : all) {
      cur[pos] = l;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

namespace {

int first_zero(const Word& w) {
  for (size_t j = 0; j < w.letters.size(); ++j)
    if (w.letters[j] == Letter::Zero) return static_cast<int>(j);
  return static_cast<int>(w.letters.size());
}

}  // namespace

Word canonical_rep(const Word& w) {
  Word d = dual_word(w);
  // 2 alpha <= w - gamma  <=>  alpha <= beta
  if (w.alpha() != d.alpha()) return w.alpha() < d.alpha() ? w : d;
  int fw = first_zero(w), fd = first_zero(d);
  if (fw != fd) return fw < fd ? w : d;
  return std::min(w, d);
}

std::vector<Word> canonical_reps(int weight) {
  std::vector<Word> out;
  for (const Word& w : enumerate_words(weight))
    if (canonical_rep(w) == w) out.push_back(w);
  return out;
}

std::vector<TIndex> enumerate_indices(int weight) {
  std::vector<TIndex> out;
  for (const Word& w : enumerate_words(weight)) out.push_back(from_word(w).index);
  std::sort(out.begin(), out.end(), [](const TIndex& a, const TIndex& b) {
    if (a.depth() != b.depth()) return a.depth() < b.depth();
    return a.to_signed() < b.to_signed();
  });
  return out;
}

}  // namespace amtv
