#include "amtv/poset.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <map>
#include <nlohmann/json.hpp>
#include <random>

#include "amtv/errors.hpp"

namespace amtv {

namespace {

Letter letter_of(int label) {
  switch (label) {
    case -1:
      return Letter::Neg;
    case 0:
      return Letter::Zero;
    default:
      return Letter::Pos;
  }
}

}  // namespace

Poset3::Poset3(std::vector<int> labels, const std::vector<std::pair<int, int>>& cover) : labels_(std::move(labels)) {
  const int n = size();
  if (n > 64) throw AmtvError("posets are limited to 64 elements");
  for (int l : labels_)
    if (l < -1 || l > 1) throw AmtvError("poset labels must be -1, 0 or 1");
  up_.assign(n, 0);
  for (const auto& [a, b] : cover) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw AmtvError("cover relation refers to an unknown element");
    if (a == b) throw AmtvError("cover relation is reflexive");
    up_[a] |= uint64_t{1} << b;
  }
  close();
  for (int x = 0; x < n; ++x)
    if ((up_[x] >> x) & 1U) throw AmtvError("cover relations contain a cycle");
}

void Poset3::close() {
  const int n = size();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < n; ++x) {
      uint64_t acc = up_[x];
      for (int y = 0; y < n; ++y)
        if ((up_[x] >> y) & 1U) acc |= up_[y];
      if (acc != up_[x]) {
        up_[x] = acc;
        changed = true;
      }
    }
  }
}

Poset3 Poset3::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("poset JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("labels") || !j["labels"].is_object())
    throw ParseError("poset JSON needs a \"labels\" object");
  std::map<long, int> ids;
  std::vector<int> labels;
  std::map<long, int> raw;
  for (const auto& [key, val] : j["labels"].items()) {
    long id = 0;
    try {
      size_t pos = 0;
      id = std::stol(key, &pos);
      if (pos != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw ParseError("poset element id '" + key + "' is not an integer");
    }
    if (!val.is_number_integer()) throw ParseError("poset label of '" + key + "' is not an integer");
    raw[id] = val.get<int>();
  }
  for (const auto& [id, lab] : raw) {
    ids[id] = static_cast<int>(labels.size());
    labels.push_back(lab);
  }
  std::vector<std::pair<int, int>> cover;
  if (j.contains("cover")) {
    if (!j["cover"].is_array()) throw ParseError("poset \"cover\" must be an array of pairs");
    for (const auto& e : j["cover"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
        throw ParseError("poset cover entries must be [a, b] integer pairs");
      auto a = ids.find(e[0].get<long>()), b = ids.find(e[1].get<long>());
      if (a == ids.end() || b == ids.end()) throw ParseError("poset cover refers to an unlabeled element");
      cover.emplace_back(a->second, b->second);
    }
  }
  return Poset3(std::move(labels), cover);
}

std::string Poset3::to_json() const {
  nlohmann::json j;
  j["labels"] = nlohmann::json::object();
  for (int x = 0; x < size(); ++x) j["labels"][std::to_string(x)] = labels_[x];
  j["cover"] = nlohmann::json::array();
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b) {
      if (!less(a, b)) continue;
      bool covering = true;
      for (int c = 0; c < size() && covering; ++c)
        if (less(a, c) && less(c, b)) covering = false;
      if (covering) j["cover"].push_back({a, b});
    }
  return j.dump();
}

Poset3 Poset3::with_relation(int a, int b) const {
  Poset3 out(*this);
  out.up_[a] |= uint64_t{1} << b;
  out.close();
  return out;
}

bool Poset3::is_chain() const {
  for (int a = 0; a < size(); ++a)
    for (int b = a + 1; b < size(); ++b)
      if (!comparable(a, b)) return false;
  return true;
}

std::vector<int> Poset3::chain_order() const {
  std::vector<int> order(size());
  // in a chain, the number of elements below x is its position
  for (int x = 0; x < size(); ++x) {
    int below = 0;
    for (int y = 0; y < size(); ++y)
      if (less(y, x)) ++below;
    order[below] = x;
  }
  return order;
}

bool poset_admissible(const Poset3& x) {
  for (int a = 0; a < x.size(); ++a) {
    bool maximal = x.up_set(a) == 0;
    bool minimal = true;
    for (int b = 0; b < x.size(); ++b)
      if (x.less(b, a)) minimal = false;
    if (maximal && x.label(a) == 1) return false;
    if (minimal && x.label(a) == 0) return false;
  }
  return true;
}

namespace {

struct Expander {
  PivotRule rule;
  std::mt19937_64 rng;
  std::map<Poset3, FormalSum<Word>> memo;

  FormalSum<Word> run(const Poset3& x) {
    auto it = memo.find(x);
    if (it != memo.end()) return it->second;
    FormalSum<Word> out;
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < x.size(); ++a)
      for (int b = a + 1; b < x.size(); ++b)
        if (!x.comparable(a, b)) {
          pairs.emplace_back(a, b);
          if (rule == PivotRule::Lexicographic) break;
        }
    if (pairs.empty()) {
      Word w;
      for (int e : x.chain_order()) w.letters.push_back(letter_of(x.label(e)));
      out.add(w, 1);
    } else {
      std::pair<int, int> pv = pairs.front();
      if (rule == PivotRule::Random) pv = pairs[std::uniform_int_distribution<size_t>(0, pairs.size() - 1)(rng)];
      out += run(x.with_relation(pv.first, pv.second));
      out += run(x.with_relation(pv.second, pv.first));
    }
    memo.emplace(x, out);
    return out;
  }
};

}  // namespace

FormalSum<Word> expand_poset(const Poset3& x, PivotRule rule, uint64_t seed) {
  if (!poset_admissible(x)) throw NotAdmissible("poset is not admissible");
  if (x.size() == 0) return FormalSum<Word>(Word{}, 1);
  Expander ex{rule, std::mt19937_64(seed), {}};
  return ex.run(x);
}

mpz_class count_linear_extensions(const Poset3& x) {
  const int n = x.size();
  if (n > 30) throw AmtvError("linear-extension count limited to 30 elements");
  std::vector<uint64_t> down(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (x.less(b, a)) down[a] |= uint64_t{1} << b;
  std::map<uint64_t, mpz_class> ways{{0, 1}};
  for (int step = 0; step < n; ++step) {
    std::map<uint64_t, mpz_class> next;
    for (const auto& [ideal, c] : ways)
      for (int a = 0; a < n; ++a)
        if (!((ideal >> a) & 1U) && (down[a] & ~ideal) == 0) next[ideal | (uint64_t{1} << a)] += c;
    ways.swap(next);
  }
  return ways.empty() ? mpz_class(0) : ways.begin()->second;
}

Poset3 psi_bar_poset(const std::vector<int>& ks, int p) {
  if (ks.empty()) throw AmtvError("psi-bar needs a nonempty composition");
  if (p < 0) throw AmtvError("psi-bar needs p >= 0");
  std::vector<int> labels;
  std::vector<std::pair<int, int>> cover;
  int prev = -1;
  for (int k : ks) {
    if (k < 1) throw AmtvError("psi-bar entries must be positive");
    for (int j = 0; j < k; ++j) {
      int id = static_cast<int>(labels.size());
      labels.push_back(j == 0 ? -1 : 0);
      if (prev >= 0) cover.emplace_back(prev, id);
      prev = id;
    }
  }
  std::vector<int> bullets;
  for (int j = 0; j < p; ++j) {
    bullets.push_back(static_cast<int>(labels.size()));
    labels.push_back(1);
  }
  const int top = static_cast<int>(labels.size());
  labels.push_back(0);
  cover.emplace_back(prev, top);
  for (int b : bullets) cover.emplace_back(b, top);
  return Poset3(std::move(labels), cover);
}

FormalSum<TIndex> psi_bar_symbolic(const std::vector<int>& ks, int p) {
  FormalSum<Word> words = expand_poset(psi_bar_poset(ks, p));
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), p);
  FormalSum<TIndex> out;
  for (const auto& [w, c] : words) {
    // I(w) = sign * T(index)
    SignedIndex si = from_word(w);
    mpq_class q = c * to_int(si.sign);
    q /= fact;
    out.add(si.index, q);
  }
  return out;
}

namespace {

using LD = long double;

// Taylor coefficients of the iterated integrals f_j around a center.
struct BSeries {
  std::vector<bool> neg;  // letter j is 2dt/(1+t^2) (else dt/t)
  std::vector<LD> at0;    // coefficients of B around 0
  LD center = 0.75L;
  std::vector<LD> atc;    // coefficients of B around center, in u = x - center

  static std::vector<LD> mul(const std::vector<LD>& a, const std::vector<LD>& b) {
    std::vector<LD> out(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; i + j < a.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
  }
  static LD eval(const std::vector<LD>& c, LD u) {
    LD s = 0;
    for (size_t n = c.size(); n-- > 0;) s = s * u + c[n];
    return s;
  }

  explicit BSeries(const std::vector<int>& ks) {
    for (int k : ks)
      for (int j = 0; j < k; ++j) neg.push_back(j == 0);
    const size_t N0 = 240, N1 = 120;
    // Around 0: 2/(1+t^2) = 2 sum (-1)^n t^{2n}
    std::vector<LD> kernel(N0, 0);
    for (size_t n = 0; n < N0; n += 2) kernel[n] = (n / 2) % 2 ? -2 : 2;
    std::vector<LD> f(N0, 0);
    f[0] = 1;
    std::vector<LD> fc;  // f_j(center) for each j
    const LD c = center;
    std::vector<std::vector<LD>> stages{f};
    for (bool ng : neg) {
      std::vector<LD> g(N0, 0);
      if (ng) {
        auto h = mul(kernel, f);
        for (size_t n = 1; n < N0; ++n) g[n] = h[n - 1] / static_cast<LD>(n);
      } else {
        for (size_t n = 1; n < N0; ++n) g[n] = f[n] / static_cast<LD>(n);
      }
      f = g;
      stages.push_back(f);
    }
    at0 = f;
    // Around the center: f_j(c + u) = f_j(c) + int_0^u a(c+s) f_{j-1}(c+s) ds
    std::vector<LD> kneg(N1, 0), kzero(N1, 0);
    {
      const LD d0 = 1 + c * c, d1 = 2 * c, d2 = 1;
      std::vector<LD> q(N1, 0);
      q[0] = 1 / d0;
      for (size_t n = 1; n < N1; ++n) q[n] = -(d1 * q[n - 1] + (n >= 2 ? d2 * q[n - 2] : 0)) / d0;
      for (size_t n = 0; n < N1; ++n) kneg[n] = 2 * q[n];
      LD p = 1 / c;
      for (size_t n = 0; n < N1; ++n) {
        kzero[n] = p;
        p *= -1 / c;
      }
    }
    std::vector<LD> cur(N1, 0);
    cur[0] = 1;
    for (size_t j = 0; j < neg.size(); ++j) {
      auto h = mul(neg[j] ? kneg : kzero, cur);
      std::vector<LD> g(N1, 0);
      g[0] = eval(stages[j + 1], c);
      for (size_t n = 1; n < N1; ++n) g[n] = h[n - 1] / static_cast<LD>(n);
      cur = g;
    }
    atc = cur;
  }

  LD operator()(LD x) const { return x <= 0.5L ? eval(at0, x) : eval(atc, x - center); }
};

}  // namespace

long double psi_bar_B(const std::vector<int>& ks, long double x) {
  if (x < 0 || x > 1) throw AmtvError("B(ks; x) is evaluated on [0, 1]");
  return BSeries(ks)(x);
}

ErrBound psi_bar_quadrature(const std::vector<int>& ks, int p, int digits) {
  if (digits > 15) throw PrecisionError("psi-bar quadrature is an oracle-tier method (digits <= 15)");
  if (ks.empty() || p < 0) throw AmtvError("psi-bar needs a nonempty composition and p >= 0");
  BSeries B(ks);
  LD fact = 1;
  for (int j = 2; j <= p; ++j) fact *= j;
  const LD scale = ((p % 2) ? -1.0L : 1.0L) / fact;
  auto f = [&](LD x, LD xc) -> LD {
    // xc is the signed distance to the nearer endpoint
    const LD one_minus = x > 0.5L ? xc : 1 - x;
    if (x <= 0 || one_minus <= 0) return 0;
    LD lg = std::log(one_minus / (1 + x));
    return std::pow(lg, p) * B(x) / x;
  };
  boost::math::quadrature::tanh_sinh<LD> integrator;
  LD err = 0, l1 = 0;
  const LD tol = std::pow(10.0L, -static_cast<LD>(digits + 2));
  LD val = integrator.integrate(f, LD(0), LD(1), tol, &err, &l1);
  ErrBound out;
  out.value = scale * val;
  out.bound = std::fabs(scale) * (err + 1e-16L * l1);
  if (out.bound > std::pow(10.0L, -static_cast<LD>(digits)))
    throw PrecisionError("psi-bar quadrature did not reach 1e-" + std::to_string(digits));
  return out;
}

}  // namespace amtv
