#include "amtv/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <regex>

#include "amtv/errors.hpp"
#include "amtv/series.hpp"

namespace amtv {

namespace {

using V = std::vector<int>;

ConstExpr T(const V& v) { return ConstExpr::T(TIndex::from_signed(v)); }
ConstExpr W(int k, int r, int l) { return ConstExpr::from(weighted_sum_symbolic(k, r, l)); }
ConstExpr Q(long num, long den = 1) { return ConstExpr(mpq_class(num, den)); }
ConstExpr sgn(int e) { return Q(e % 2 == 0 ? 1 : -1); }

V ones(int n) { return V(std::max(0, n), 1); }

V cat(V a, const V& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// (a_1 bar, a_2, ..., a_n bar) for n >= 2, (a_1) for n = 1
V diamond(const V& a) {
  V out(a);
  if (out.size() >= 2) {
    out.front() = -out.front();
    out.back() = -out.back();
  }
  return out;
}

// ({1}_{m-1}, 1bar, tail), or tail alone when m = 0
V tee(int m, const V& tail) {
  if (m == 0) return tail;
  return cat(cat(ones(m - 1), V{-1}), tail);
}

long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r.get_si();
}

// Compositions of total into exactly parts positive parts.
std::vector<V> compositions(int total, int parts) {
  std::vector<V> out;
  V cur;
  std::function<void(int, int)> rec = [&](int left, int slots) {
    if (slots == 0) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (int x = 1; x <= left - (slots - 1); ++x) {
      cur.push_back(x);
      rec(left - x, slots - 1);
      cur.pop_back();
    }
  };
  if (parts >= 1) rec(total, parts);
  return out;
}

std::vector<V> all_compositions(int total) {
  std::vector<V> out;
  for (int r = 1; r <= total; ++r)
    for (auto& c : compositions(total, r)) out.push_back(c);
  return out;
}

int sum(const V& v) {
  int s = 0;
  for (int x : v) s += x;
  return s;
}

// sum_l (-1)^{|<-k_{r-l}|} sum_j (-1)^{j-1} T(tee(m, <-k_{r-l}, jbar)) T(tee(p, ->k_{l-1}, (k_l-j+1)bar))
ConstExpr reversal_rhs(const V& k, int m, int p) {
  const int r = static_cast<int>(k.size());
  ConstExpr out;
  for (int l = 1; l <= r; ++l) {
    V rev;
    for (int i = r - 1; i >= l; --i) rev.push_back(k[i]);
    V fwd(k.begin(), k.begin() + (l - 1));
    for (int j = 1; j <= k[l - 1]; ++j) {
      ConstExpr term = T(tee(m, cat(rev, V{-j}))) * T(tee(p, cat(fwd, V{-(k[l - 1] - j + 1)})));
      out += sgn(sum(rev) + j - 1) * term;
    }
  }
  return out;
}

// Block concatenation with block lengths taken from `lens`.
V blocks(const V& js, const V& lens) {
  V out;
  size_t pos = 0;
  for (int len : lens) {
    V part(js.begin() + pos, js.begin() + pos + len);
    out = cat(out, diamond(part));
    pos += len;
  }
  return out;
}

std::string kstr(const V& k) {
  std::string s = "(";
  for (size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
  return s + ")";
}

void add(std::vector<CatalogRow>& rows, std::string anchor, ConstExpr lhs, ConstExpr rhs, std::string group = "",
         int tol = 0) {
  rows.push_back({std::move(anchor), std::move(lhs), std::move(rhs), std::move(group), tol});
}

void add_text(std::vector<CatalogRow>& rows, const std::string& anchor, const std::string& lhs, const std::string& rhs,
              const std::string& group = "", int tol = 0) {
  add(rows, anchor, parse_table_expr(lhs), parse_table_expr(rhs), group, tol);
}

// ---- generated theorem families ----

void weighted_sum_duality(std::vector<CatalogRow>& rows) {
  for (int m = 1; m <= 2; ++m) {
    for (int p = 1; p <= 2; ++p) {
      for (int l = 0; l <= 2; ++l) {
        ConstExpr lhs, rhs;
        for (int j = 1; j <= p; ++j) lhs += ConstExpr::alpha(p - j) * W(2 * j + 2 * m + l - 1, 2 * m + l, l);
        for (int j = 1; j <= m; ++j) rhs += ConstExpr::alpha(m - j) * W(2 * j + 2 * p + l - 1, 2 * p + l, l);
        std::string tag = " m=" + std::to_string(m) + " p=" + std::to_string(p) + " l=" + std::to_string(l);
        add(rows, "weighted-sum duality (even depth)" + tag, sgn(m) * lhs, sgn(p) * rhs);
        ConstExpr lhs2, rhs2;
        for (int j = 1; j <= p; ++j) lhs2 += ConstExpr::alpha(p - j) * W(2 * j + 2 * m + l - 3, 2 * m + l - 1, l);
        for (int j = 1; j <= m; ++j) rhs2 += ConstExpr::alpha(m - j) * W(2 * j + 2 * p + l - 3, 2 * p + l - 1, l);
        add(rows, "weighted-sum duality (odd depth)" + tag, sgn(m) * lhs2, sgn(p) * rhs2);
      }
    }
  }
}

void binomial_duality(std::vector<CatalogRow>& rows) {
  const std::vector<V> ks = {{1}, {2}, {1, 1}};
  for (const auto& k : ks) {
    const int K = sum(k);
    V rk(k.rbegin(), k.rend());
    for (int m = 0; m <= 1; ++m) {
      for (int p = 0; p <= 1; ++p) {
        ConstExpr lhs;
        for (const auto& js : compositions(m + 1 + K, K + 1)) {
          V head(js.begin(), js.end() - 1);
          lhs += Q(binom(js.back() + p - 1, p)) * T(cat(blocks(head, rk), V{-(js.back() + p)}));
        }
        ConstExpr second;
        for (const auto& js : compositions(p + 1 + K, K + 1)) {
          V head(js.begin(), js.end() - 1);
          second += Q(binom(js.back() + m - 1, m)) * T(cat(blocks(head, k), V{-(js.back() + m)}));
        }
        lhs += sgn(K + 1) * second;
        add(rows, "binomial weighted duality k=" + kstr(k) + " m=" + std::to_string(m) + " p=" + std::to_string(p), lhs,
            reversal_rhs(k, m, p));
      }
    }
  }
  // corollary form, k = 2
  for (int k = 2; k <= 3; ++k) {
    for (int p = 0; p <= 1; ++p) {
      ConstExpr lhs;
      for (const auto& js : compositions(p + k + 1, k + 1)) lhs += T(cat(diamond(V(js.begin(), js.end() - 1)), V{-js.back()}));
      ConstExpr rhs = sgn(k) * T(cat(diamond(ones(k)), V{-(p + 1)}));
      for (int j = 1; j <= k; ++j) rhs += sgn(k + j) * T({-j}) * T(tee(p, V{-(k - j + 1)}));
      add(rows, "binomial duality corollary k=" + std::to_string(k) + " p=" + std::to_string(p), lhs, rhs);
    }
  }
}

void reversal_dualities(std::vector<CatalogRow>& rows) {
  // m = p = 0 specialization
  for (const V& k : std::vector<V>{{1}, {2}, {3}, {1, 1}, {1, 2}, {2, 1}}) {
    const int r = static_cast<int>(k.size());
    V left, right;
    for (int l = 1; l <= r; ++l) left = cat(left, diamond(ones(k[r - l])));
    for (int l = 1; l <= r; ++l) right = cat(right, diamond(ones(k[l - 1])));
    ConstExpr lhs = T(cat(left, V{-1})) + sgn(sum(k) + 1) * T(cat(right, V{-1}));
    add(rows, "diamond reversal k=" + kstr(k), lhs, reversal_rhs(k, 0, 0));
  }
  // single block of odd length
  for (int p = 0; p <= 2; ++p) {
    ConstExpr rhs = sgn(p) * Q(1, 2) * T({-(p + 1)}).pow(2);
    for (int j = 1; j <= p; ++j) rhs += sgn(j - 1) * T({-j}) * T({-(2 * p + 2 - j)});
    add(rows, "odd diamond block p=" + std::to_string(p), T(cat(diamond(ones(2 * p + 1)), V{-1})), rhs);
    add(rows, "T(2p+1, 1bar) p=" + std::to_string(p), T({2 * p + 1, -1}), rhs);
  }
  add_text(rows, "T(1,1bar) = 3/4 zeta(2)", "T(1,-1)", "3/4*zeta(2)");
  add_text(rows, "T(1bar,1,1bar,1bar)", "T(-1,1,-1,-1)", "-1/8*tbar(2)^2+45/16*zeta(4)");
  // block duality
  for (int p = 0; p <= 2; ++p) {
    for (int w = 1; w <= 3; ++w) {
      for (const auto& k : all_compositions(w)) {
        V rhs;
        for (int l = static_cast<int>(k.size()); l >= 1; --l) rhs = cat(rhs, diamond(ones(k[l - 1])));
        add(rows, "block duality p=" + std::to_string(p) + " k=" + kstr(k), T(tee(p, cat(k, V{-1}))),
            T(cat(rhs, V{-(p + 1)})));
      }
    }
  }
  for (int k = 1; k <= 5; ++k)
    add(rows, "diamond chain k=" + std::to_string(k), T(cat(diamond(ones(k)), V{-1})), T({k, -1}));
  // T(1bar,{1}_{2p-2},1bar,1bar) with the weight-homogeneous second factor
  for (int p = 1; p <= 3; ++p) {
    ConstExpr rhs = Q(2 * p) * T({2 * p + 1});
    for (int k = 1; k <= p; ++k) rhs -= T({-(2 * k - 1)}) * T({-(2 * p - 2 * k + 2)});
    ConstExpr printed = Q(2 * p) * T({2 * p + 1});
    for (int k = 1; k <= p; ++k) printed -= T({-(2 * k - 1)}) * T({-(2 * p - 2 * k + 1)});
    const std::string tag = "T(1bar,{1}_{2p-2},1bar,1bar) p=" + std::to_string(p);
    const V ix = cat(cat(V{-1}, ones(2 * p - 2)), V{-1, -1});
    add(rows, tag + " printed second factor", T(ix), printed, tag);
    add(rows, tag + " weight-homogeneous second factor", T(ix), rhs, tag);
  }
  // parity corollary
  for (int w = 1; w <= 3; ++w) {
    for (const auto& k : all_compositions(w)) {
      V rk(k.rbegin(), k.rend());
      const std::string tag = "reversed pair k=" + kstr(k);
      add(rows, tag + " printed sign", T(cat(k, V{-1})) + sgn(sum(k)) * T(cat(rk, V{-1})), reversal_rhs(k, 0, 0), tag);
      add(rows, tag + " sign from diamond reversal", T(cat(k, V{-1})) + sgn(sum(k) + 1) * T(cat(rk, V{-1})),
          reversal_rhs(k, 0, 0), tag);
    }
  }
}

void ladder_families(std::vector<CatalogRow>& rows) {
  for (int p = 1; p <= 3; ++p) {
    // c21, with alpha_{p-j}
    ConstExpr rhs;
    for (int j = 1; j <= p; ++j)
      for (int k = 1; k <= j; ++k)
        rhs += Q(1, 1L << (2 * j - 2)) * ConstExpr::tbar(2 * k) * ConstExpr::zetabar(2 * j - 2 * k) * ConstExpr::alpha(p - j);
    rhs = sgn(p) * rhs;
    V lhs_ix = cat(cat(V{-1}, ones(2 * p - 2)), V{-1});
    add(rows, "alternating ladder closed form p=" + std::to_string(p), T(lhs_ix), rhs);
    add(rows, "alternating ladder duality p=" + std::to_string(p), T(lhs_ix), T(cat(ones(2 * p - 2), V{-2})));
    ConstExpr c17;
    for (int j = 1; j <= p; ++j) c17 += ConstExpr::alpha(p - j) * W(2 * j, 2, 1);
    add(rows, "ladder via W_1(2j,2) p=" + std::to_string(p), T(lhs_ix), sgn(p - 1) * c17);
  }
  for (int j = 1; j <= 3; ++j) {
    ConstExpr rhs;
    for (int k = 1; k <= j; ++k) rhs += ConstExpr::tbar(2 * k) * ConstExpr::zetabar(2 * j - 2 * k);
    add(rows, "W_1(2j,2) closed form j=" + std::to_string(j), W(2 * j, 2, 1), Q(-1, 1L << (2 * j - 2)) * rhs);
  }
  add_text(rows, "W_1(2,2)", "W(2,2,1)", "-1/2*tbar(2)");
  add_text(rows, "W_1(4,2)", "W(4,2,1)", "-1/8*tbar(4)-1/8*tbar(2)*zeta(2)");
  add_text(rows, "W_1(6,2)", "W(6,2,1)", "-7/128*tbar(2)*zeta(4)-1/32*tbar(4)*zeta(2)-1/32*tbar(6)");
  // T({1}_{r-1}, kbar) and W(k+r-1, r) expansions; ({1}_{-1},1bar) is empty
  auto ladder = [](int n) { return n < 0 ? ConstExpr(1) : T(cat(ones(n), V{-1})); };
  for (int r = 1; r <= 3; ++r) {
    for (int k = 1; k <= 3; ++k) {
      ConstExpr rhs;
      for (int j = 1; j <= r; ++j) rhs += sgn(j - 1) * ladder(r - j - 1) * W(k + j - 1, j, j);
      std::string tag = " r=" + std::to_string(r) + " k=" + std::to_string(k);
      add(rows, "ladder expansion" + tag, T(cat(ones(r - 1), V{-k})), rhs);
      ConstExpr rhs2;
      for (int j = 1; j <= r; ++j) rhs2 += sgn(j - 1) * ladder(r - j - 1) * T(cat(ones(j - 1), V{-k}));
      add(rows, "weighted sum expansion" + tag, W(k + r - 1, r, r), rhs2);
    }
  }
  // product formulas at x = 1 (m, k >= 2) and x = -1
  for (int r = 2; r <= 3; ++r) {
    for (int m = 1; m <= 3; ++m) {
      for (int k = 1; k <= 3; ++k) {
        if (k + m + r - 2 > 6) continue;
        for (int bar = 0; bar <= 1; ++bar) {
          if (!bar && (m < 2 || k < 2)) continue;
          const int s = bar ? -1 : 1;
          ConstExpr lhs;
          for (int j = 1; j <= r - 1; ++j)
            lhs += sgn(j - 1) * T(cat(ones(r - 1 - j), V{s * m})) * T(cat(ones(j - 1), V{s * k}));
          ConstExpr rhs;
          for (const auto& c : compositions(k + r - 1, r)) {
            V ix(c.begin(), c.end() - 1);
            rhs += Q(binom(c.back() + m - 2, m - 1)) * T(cat(ix, V{s * (c.back() + m - 1)}));
          }
          for (const auto& c : compositions(m + r - 1, r)) {
            V ix(c.begin(), c.end() - 1);
            rhs += sgn(r) * Q(binom(c.back() + k - 2, k - 1)) * T(cat(ix, V{s * (c.back() + k - 1)}));
          }
          add(rows,
              std::string(bar ? "alternating" : "plain") + " product decomposition r=" + std::to_string(r) +
                  " m=" + std::to_string(m) + " k=" + std::to_string(k),
              lhs, rhs);
        }
      }
    }
  }
}

const std::vector<std::pair<std::string, std::string>> kSymbols = {
    {"a1", "1,1,1,-1"}, {"a2", "-2,2"},      {"a3", "-1,3"},      {"a4", "1,-3"},      {"a5", "-2,1,-1"},
    {"a6", "3,-1"},     {"a7", "-4"},        {"b1", "1,1,1,1,-1"}, {"b2", "2,1,1,-1"},  {"b3", "1,1,2,-1"},
    {"b4", "-1,2,1,-1"}, {"b5", "-2,1,1,-1"}, {"b6", "1,3,-1"},    {"b7", "1,-3,-1"},   {"b8", "3,-1,-1"},
    {"b9", "-3,-1,-1"}, {"b10", "-2,-2,-1"}, {"b11", "-1,4"},      {"b12", "1,-4"},     {"b13", "1,4"}};

const std::vector<TableRow> kWeight4 = {
    {"4", "8a1"},
    {"-2,-2", "9a2-12a7+18a3"},
    {"-1,-2,-1", "24a1-4a5-2a6"},
    {"2,2", "4a4"},
    {"-1,-3", "3a7-4a3-2a2"},
    {"1,1,-2", "3a2-4a7+6a3"},
    {"-2,-1,-1", "2a5"},
    {"2,-2", "12a1-2a4-a6"},
    {"-3,-1", "9a7-12a3-6a2"},
    {"1,3", "6a1-2a4"},
    {"-1,1,-2", "12a1-2a6"},
    {"2,1,-1", "2a2+6a3-3a7"},
    {"1,2,-1", "-4a2-9a3+6a7"},
    {"-1,2,-1", "-12a1+a5+2a6"},
};

const std::vector<TableRow> kWeight5 = {
    {"-5", "25b1"},
    {"-3,2", "2b6+4b7-77b11+240b1+21b4-17b5+2b8"},
    {"5", "2b2-2b12+7b13"},
    {"-2,3", "-90b1-10b4+8b5+35b11-b6-2b7-b8"},
    {"2,3", "2b13+2b2-2b12"},
    {"-1,-2,-2", "-b10-6b2+12b12-24b13+3b3+4b9"},
    {"2,-3", "-4b12+4b13+b2"},
    {"2,-1,-2", "180b1-70b11+20b4-10b5+2b6+4b7+2b8"},
    {"3,2", "6b13"},
    {"1,-1,3", "9b12+3b13-6b3-2b9+3b2"},
    {"-1,-4", "-20b1+6b11-2b4+2b5"},
    {"-1,2,-2", "2b10+3b2+12b13-6b3-3b9"},
    {"-3,-2", "2b4-2b5+60b1-14b11"},
    {"-1,3,-1", "-2b10-2b2-6b13+5b3+2b9"},
    {"-2,-3", "60b1-14b11+5b4-5b5"},
    {"-2,-1,2", "4b5-120b1+28b11-8b4+2b8"},
    {"3,-2", "12b12-6b13-3b3"},
    {"2,-2,-1", "-2b7-60b1+4b5+28b11-8b4-b8"},
    {"-4,-1", "21b11-60b1-5b4+5b5"},
    {"-1,-3,-1", "b10+2b2-12b12+12b13+b3-b9"},
    {"4,-1", "2b2-12b12+12b13+3b3"},
    {"2,1,-2", "-60b1+42b11-12b4+6b5-2b6-4b7-3b8"},
    {"-3,1,-1", "3b12"},
    {"2,2,-1", "-2b7-60b1+42b11-12b4+6b5-4b6-3b8"},
    {"-1,-1,-3", "-24b12+12b13+9b3+b9"},
    {"3,1,-1", "b7+30b1-14b11+4b4-2b5+b6+b8"},
    {"-1,1,-3", "9b12-6b13-3b3"},
    {"1,1,-3", "-b7-20b1+14b11-4b4+2b5-b6-b8"},
    {"1,-2,2", "b9-3b2+6b12-6b13"},
    {"1,2,-2", "4b7+90b1-56b11+16b4-8b5+3b6+4b8"},
    {"1,-1,-3", "4b5-90b1+28b11-8b4"},
    {"-2,-1,-2", "-b10+6b2+12b12+12b13-9b3-4b9"},
    {"1,-2,-2", "30b1-b6-2b7-b8"},
    {"-2,2,-1", "b10+3b2-12b12+12b13-b9"},
    {"-2,1,-2", "12b12-b10-6b13-3b3"},
    {"-1,1,1,-2", "-100b1+14b11-2b4+6b5+2b8"},
    {"2,-1,2", "-12b12+6b3+2b9"},
    {"-1,1,2,-1", "180b1-35b11+7b4-11b5-2b8"},
    {"-1,-2,1,-1", "60b1-14b11+3b4-5b5"},
    {"-1,-1,2,-1", "-360b1+84b11-20b4+24b5+2b8"},
    {"1,1,1,-2", "2b12-b13-b3"},
    {"-2,-1,1,-1", "150b1+13b4-10b5-49b11+b6+2b7+b8"},
    {"1,2,1,-1", "-3b12+3b13"},
    {"2,-1,-1,-1", "36b5-480b1-44b4+168b11-4b6-8b7-4b8"},
};

std::vector<CatalogRow> weight2_rows() {
  std::vector<CatalogRow> rows;
  add_text(rows, "T(1bar) = -pi/2", "T(-1)", "-pi/2");
  add_text(rows, "T(2) = 2T(1,1bar)", "T(2)", "2*T(1,-1)");
  add_text(rows, "T(2bar) = -2G_1", "T(-2)", "-2*G(1)");
  add_text(rows, "T(1,1bar) = pi^2/8", "T(1,-1)", "pi^2/8");
  add_text(rows, "T(2) = pi^2/4", "T(2)", "pi^2/4");
  add_text(rows, "T(1bar,1bar) = T(2bar)", "T(-1,-1)", "T(-2)");
  add_text(rows, "T(2bar) via alternating t-value", "T(-2)", "-1/2*tbar(2)");
  add_text(rows, "alternating t-value and Catalan", "tbar(2)", "4*catalan");
  return rows;
}

std::vector<CatalogRow> weight3_rows() {
  std::vector<CatalogRow> rows;
  add_text(rows, "T(3bar) = 3T(1,1,1bar)", "T(-3)", "3*T(1,1,-1)");
  add_text(rows, "T(1bar,2bar) reduction", "T(-1,-2)", "6*T(1,1,-1)-2*T(-2,-1)");
  add_text(rows, "T(2,1bar) reduction", "T(2,-1)", "T(3)-T(1,-2)");
  add_text(rows, "T(1,2) = T(3)", "T(1,2)", "T(3)");
  add_text(rows, "T(1,1bar,1bar) = T(3bar)", "T(1,-1,-1)", "T(-3)");
  add_text(rows, "T(1bar,1,1bar) = T(1,2bar)", "T(-1,1,-1)", "T(1,-2)");
  add_text(rows, "T({1bar}_3) = T(2,1bar)", "T(-1,-1,-1)", "T(2,-1)");
  add_text(rows, "T(1bar,2) = T(2bar,1bar)", "T(-1,2)", "T(-2,-1)");
  add_text(rows, "T(3bar) = -pi^3/16", "T(-3)", "-pi^3/16");
  add_text(rows, "T(1,2bar) closed form", "T(1,-2)", "-7/4*zeta(3)+pi/4*tbar(2)");
  add_text(rows, "T(1bar,1bar,1bar) closed form", "T(-1,-1,-1)", "7/2*zeta(3)-pi/4*tbar(2)");
  return rows;
}

std::vector<CatalogRow> table_rows(int weight) {
  std::vector<CatalogRow> rows;
  const std::string sym = weight == 4 ? "a" : "b";
  for (const auto& r : reduction_table(weight))
    add(rows, "T(" + r.lhs + ") = " + r.rhs, ConstExpr::T(r.lhs), parse_table_expr(r.rhs));
  if (weight == 4) {
    add_text(rows, "T(1,1bar,2) = a5", "T(1,-1,2)", "a5");
    add_text(rows, "duality T(1bar,1bar,2bar)", "T(-1,-1,-2)", "T(-1,2,-1)");
    add_text(rows, "duality T(1bar,1,1,1bar)", "T(-1,1,1,-1)", "T(1,1,-2)");
    add_text(rows, "duality T(1bar,1,1bar,1bar)", "T(-1,1,-1,-1)", "T(3,-1)");
  } else {
    add_text(rows, "T(1,1bar,1bar,2bar) = b4", "T(1,-1,-1,-2)", "b4");
    add_text(rows, "T(1,1,1bar,2) = b5", "T(1,1,-1,2)", "b5");
    add_text(rows, "T(1bar,1,3) = b7", "T(-1,1,3)", "b7");
    add_text(rows, "T(2bar,1,2) = b8", "T(-2,1,2)", "b8");
    add_text(rows, "duality T(1bar,1bar,3)", "T(-1,-1,3)", "T(1,-2,-2)");
    add_text(rows, "duality T(1bar,2bar,2)", "T(-1,-2,2)", "T(2,-1,-2)");
    add_text(rows, "duality T(1,2bar,1bar,1bar)", "T(1,-2,-1,-1)", "T(-2,-1,1,-1)");
    add_text(rows, "duality T(1,1bar,2bar,1bar)", "T(1,-1,-2,-1)", "T(-1,-2,1,-1)");
    add_text(rows, "duality T(1bar,1bar,1,2bar)", "T(-1,-1,1,-2)", "T(-1,1,2,-1)");
    add_text(rows, "duality T(1bar,2,2)", "T(-1,2,2)", "T(2,-2,-1)");
  }
  return rows;
}

std::vector<CatalogRow> special_rows() {
  std::vector<CatalogRow> rows;
  add_text(rows, "T(1bar) = -pi/2", "T(-1)", "-pi/2");
  add_text(rows, "T(2bar) = -2G_1", "T(-2)", "-2*G(1)");
  add_text(rows, "T(2) = pi^2/4", "T(2)", "pi^2/4");
  add_text(rows, "T(1,2bar) closed form", "T(1,-2)", "-7/4*zeta(3)+pi/4*tbar(2)");
  add_text(rows, "T(1bar,1,1bar) = T(1,2bar)", "T(-1,1,-1)", "T(1,-2)");
  add_text(rows, "T(1,1,1,2bar) closed form", "T(1,1,1,-2)", "31/16*zeta(5)-1/16*pi*tbar(4)-7/96*pi^3*tbar(2)");
  add_text(rows, "T(1bar,1,1,1,1bar) = T(1,1,1,2bar)", "T(-1,1,1,1,-1)", "T(1,1,1,-2)");
  add_text(rows, "W(4,3) closed form", "W(4,3,3)", "1/8*tbar(4)+tbar(2)*zeta(2)-7/8*pi*zeta(3)");
  add_text(rows, "W(6,5) closed form", "W(6,5,5)",
           "-1/32*tbar(6)-7/192*pi^3*zeta(3)-15/8*tbar(2)*zeta(4)+31/32*pi*zeta(5)");
  add_text(rows, "T(1bar,1bar,1bar) closed form", "T(-1,-1,-1)", "7/2*zeta(3)-pi/4*tbar(2)");
  add_text(rows, "T(1bar,1,1,1bar) closed form", "T(-1,1,1,-1)", "1/8*tbar(4)-3/8*tbar(2)*zeta(2)");
  add_text(rows, "T(1bar,1,1,1bar) = T(1,1,2bar)", "T(-1,1,1,-1)", "T(1,1,-2)");
  add_text(rows, "T(1bar,{1}_4,1bar) closed form", "T(-1,1,1,1,1,-1)",
           "-15/128*tbar(2)*zeta(4)+3/32*tbar(4)*zeta(2)-1/32*tbar(6)");
  add_text(rows, "T(1bar,{1}_4,1bar) = T({1}_4,2bar)", "T(-1,1,1,1,1,-1)", "T(1,1,1,1,-2)");
  add_text(rows, "T(1bar,1,1bar,1bar) closed form", "T(-1,1,-1,-1)", "-1/8*tbar(2)^2+45/16*zeta(4)");
  for (int r = 1; r <= 6; ++r) {
    V ix = cat(ones(r - 1), V{-1});
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), r);
    mpq_class c(r % 2 == 0 ? 1 : -1);
    c /= fact;
    c /= mpz_class(1) << r;
    add(rows, "ladder T({1}_" + std::to_string(r - 1) + ",1bar)", T(ix), ConstExpr(c) * ConstExpr::pi().pow(r));
  }
  for (int k = 1; k <= 6; ++k)
    add(rows, "T(" + std::to_string(k) + "bar) via alternating t-value", T({-k}),
        Q(-1, 1L << (k - 1)) * ConstExpr::tbar(k));
  add_text(rows, "alternating t-value at 3", "tbar(3)", "pi^3/4");
  add_text(rows, "alternating t-value at 5", "tbar(5)", "5/48*pi^5");
  // W_2 values, tolerance 1e-12
  add_text(rows, "W_2(3,3) = -pi^3/16", "W(3,3,2)", "-pi^3/16", "", 12);
  add_text(rows, "T(1,1bar,1bar) = T(3bar)", "T(1,-1,-1)", "T(-3)");
  add_text(rows, "W_2(5,3) printed (log^3 term)", "W(5,3,2)",
           "-241/11520*pi^5-1/24*pi^3*log2^3+1/24*pi*log2^4+pi*Li(4)+1/8*pi*log2*zeta(3)", "W_2(5,3)", 12);
  add_text(rows, "W_2(5,3) with log^2 term", "W(5,3,2)",
           "-241/11520*pi^5-1/24*pi^3*log2^2+1/24*pi*log2^4+pi*Li(4)+1/8*pi*log2*zeta(3)", "W_2(5,3)", 12);
  add_text(rows, "W_2(7,3)", "W(7,3,2)",
           "-47/11520*pi^7-1/192*pi^5*log2^2+1/192*pi^3*log2^4+1/8*pi^3*Li(4)+7/64*pi^3*log2*zeta(3)"
           "+1/2*pi*(T(1,-5)+T(2,-4)+T(3,-3)+T(4,-2)+T(5,-1))",
           "", 12);
  add_text(rows, "T(1,1bar,1,1,1bar) = T(1,1,3bar)", "T(1,-1,1,1,-1)", "T(1,1,-3)");
  add_text(rows, "T(1,1,3bar) closed form", "T(1,1,-3)",
           "121/11520*pi^5+1/24*pi^3*log2^2-1/24*pi*log2^4-pi*Li(4)-7/8*pi*log2*zeta(3)", "", 12);
  add_text(rows, "T(1,1bar,{1}_4,1bar) = T({1}_4,3bar)", "T(1,-1,1,1,1,1,-1)", "T(1,1,1,1,-3)", "", 12);
  add_text(rows, "T({1}_4,3bar) closed form", "T(1,1,1,1,-3)",
           "-77/69120*pi^7+1/576*pi^5*log2^2-1/576*pi^3*log2^4-1/24*pi^3*Li(4)-7/192*pi^3*log2*zeta(3)"
           "+1/2*pi*(T(1,-5)+T(2,-4)+T(3,-3)+T(4,-2)+T(5,-1))",
           "", 12);
  add_text(rows, "W_2(5,5) = T(1,1bar,1,1,1bar)", "W(5,5,2)", "T(1,-1,1,1,-1)");
  add_text(rows, "W_2(5,5) via W_2(2j+1,3)", "W(5,5,2)", "-(alpha(1)*W(3,3,2)+alpha(0)*W(5,3,2))");
  return rows;
}

std::vector<CatalogRow> theorem_rows() {
  std::vector<CatalogRow> rows;
  weighted_sum_duality(rows);
  binomial_duality(rows);
  reversal_dualities(rows);
  ladder_families(rows);
  return rows;
}

}  // namespace

const std::vector<std::pair<std::string, std::string>>& table_symbols() { return kSymbols; }

ConstExpr parse_table_expr(const std::string& text) {
  static const std::regex implicit(R"((\d)\s*([ab]\d+))");
  static const std::regex sym(R"(\b([ab])(\d+)\b)");
  std::string s = std::regex_replace(text, implicit, "$1*$2");
  std::string out;
  auto begin = std::sregex_iterator(s.begin(), s.end(), sym);
  size_t last = 0;
  for (auto it = begin; it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    out += s.substr(last, m.position() - last);
    std::string name = m.str();
    auto f = std::find_if(kSymbols.begin(), kSymbols.end(), [&](const auto& p) { return p.first == name; });
    if (f == kSymbols.end()) throw ParseError("unknown table symbol '" + name + "'");
    out += "T(" + f->second + ")";
    last = m.position() + m.length();
  }
  out += s.substr(last);
  return parse_expr(out);
}

const std::vector<TableRow>& reduction_table(int weight) {
  if (weight == 4) return kWeight4;
  if (weight == 5) return kWeight5;
  throw AmtvError("reduction tables exist for weights 4 and 5");
}

std::vector<std::string> table_basis(int weight) {
  std::vector<std::string> out;
  const char c = weight == 4 ? 'a' : 'b';
  if (weight != 4 && weight != 5) throw AmtvError("table bases exist for weights 4 and 5");
  for (const auto& [name, ix] : kSymbols)
    if (name[0] == c) out.push_back(ix);
  return out;
}

const std::vector<SuiteSpec>& catalog_suites() {
  static const std::vector<SuiteSpec> s = {{"weight2", 40, 35}, {"weight3", 40, 35},  {"weight4", 40, 35},
                                           {"weight5", 60, 50}, {"theorems", 30, 25}, {"special-values", 40, 35}};
  return s;
}

const SuiteSpec& suite_spec(const std::string& name) {
  for (const auto& s : catalog_suites())
    if (s.name == name) return s;
  throw AmtvError("unknown suite '" + name + "'");
}

std::vector<CatalogRow> catalog_rows(const std::string& suite) {
  suite_spec(suite);
  if (suite == "weight2") return weight2_rows();
  if (suite == "weight3") return weight3_rows();
  if (suite == "weight4") return table_rows(4);
  if (suite == "weight5") return table_rows(5);
  if (suite == "theorems") return theorem_rows();
  return special_rows();
}

CatalogReport verify_catalog(const std::string& suite, const EvalOptions& opts, int digits_override) {
  const SuiteSpec& spec = suite_spec(suite);
  CatalogReport rep;
  rep.suite = suite;
  rep.digits = digits_override > 0 ? digits_override : spec.digits;
  rep.tol_exp = digits_override > 0 ? std::min(spec.tol_exp, digits_override - 5) : spec.tol_exp;
  auto rows = catalog_rows(suite);
  Evaluator ev(rep.digits, opts);
  std::vector<ConstExpr> diffs;
  for (const auto& r : rows) diffs.push_back(r.lhs - r.rhs);
  auto vals = ev.evaluate_many(diffs);
  auto guard = hp::WorkingPrecision(rep.digits);
  rep.max_residual = hp::Real(0L);
  std::map<std::string, std::vector<std::string>> groups;
  std::map<std::string, bool> group_seen;
  for (size_t i = 0; i < rows.size(); ++i) {
    RowResult rr;
    rr.anchor = rows[i].anchor;
    rr.lhs = to_string(rows[i].lhs);
    rr.rhs = to_string(rows[i].rhs);
    rr.group = rows[i].group;
    rr.tol_exp = rows[i].tol_exp ? std::min(rows[i].tol_exp, rep.tol_exp) : rep.tol_exp;
    rr.residual = hp::abs(vals[i].value);
    rr.pass = rr.residual < hp::pow10(-rr.tol_exp);
    if (rr.group.empty()) {
      rep.max_residual = hp::max(rep.max_residual, rr.residual);
      if (!rr.pass) rep.failures.push_back(rr.anchor);
    } else {
      group_seen[rr.group] = true;
      auto& g = groups[rr.group];
      if (rr.pass) {
        g.push_back(rr.anchor);
        rep.max_residual = hp::max(rep.max_residual, rr.residual);
      }
    }
    rep.rows.push_back(std::move(rr));
  }
  for (const auto& [g, seen] : group_seen) {
    rep.groups.emplace_back(g, groups[g]);
    if (groups[g].empty()) rep.failures.push_back("group " + g);
  }
  rep.all_pass = rep.failures.empty();
  return rep;
}

}  // namespace amtv
