#include "amtv/basis.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "amtv/errors.hpp"

namespace amtv {

namespace {

TIndex signed_index(std::vector<int> v) { return TIndex::from_signed(v); }

void compositions(int n, const std::vector<int>& parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p : parts) {
    if (p > n) continue;
    cur.push_back(p);
    compositions(n - p, parts, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Sign duality_sign(const TIndex& ix) {
  auto a = to_word(ix);
  auto b = from_word(dual_word(a.word));
  return a.sign * b.sign;
}

std::vector<TIndex> basis_candidates(int weight) {
  std::vector<std::vector<int>> comps;
  std::vector<int> cur;
  compositions(weight, {1, 2, 3}, cur, comps);
  std::vector<TIndex> out;
  for (const auto& c : comps) {
    std::vector<int> s(c);
    for (size_t j = 0; j < s.size(); ++j)
      if (j + 1 == s.size() || s[j] >= 2) s[j] = -s[j];
    out.push_back(signed_index(s));
  }
  std::sort(out.begin(), out.end(), [](const TIndex& a, const TIndex& b) {
    if (a.depth() != b.depth()) return a.depth() < b.depth();
    return a.ks < b.ks;
  });
  const std::vector<std::pair<std::vector<int>, std::vector<int>>> swaps = {
      {{-3}, {3}}, {{-2, -2}, {2, -2}}, {{-2, -3}, {2, -3}}, {{1, -2, -2}, {1, 2, -2}}, {{-3, -3}, {3, -3}}};
  for (auto& ix : out)
    for (const auto& [from, to] : swaps)
      if (ix == signed_index(from)) ix = signed_index(to);
  return out;
}

BasisReport find_basis(int weight, Evaluator& ev, const mpz_class& max_height) {
  if (weight < 1) throw AmtvError("weight must be positive");
  BasisReport rep;
  rep.weight = weight;
  rep.digits = ev.digits();
  rep.height = max_height;

  std::vector<TIndex> order;
  std::set<Word> seen;
  for (const auto& ix : basis_candidates(weight)) {
    Word c = canonical_rep(to_word(ix).word);
    if (seen.insert(c).second) order.push_back(ix);
  }
  for (const auto& w : canonical_reps(weight)) {
    if (seen.insert(w).second) order.push_back(from_word(w).index);
  }
  rep.scanned = order.size();
  auto vals = ev.T_many(order);

  auto guard = hp::WorkingPrecision(ev.digits());
  const hp::Real tiny = hp::pow10(-(ev.digits() * 4 / 5));
  std::vector<HPReal> basis_vals;
  for (size_t i = 0; i < order.size(); ++i) {
    const HPReal& v = vals[i];
    if (basis_vals.empty()) {
      if (hp::abs(v.value) < tiny) {
        rep.relations.push_back({order[i], {}, hp::abs(v.value)});
      } else {
        rep.basis.push_back(order[i]);
        basis_vals.push_back(v);
      }
      continue;
    }
    std::vector<hp::Real> xs{v.value};
    for (const auto& b : basis_vals) xs.push_back(b.value);
    PslqResult r = pslq_search(xs, ev.digits(), max_height);
    if (r.outcome == PslqOutcome::Found && r.relation[0] != 0) {
      BasisRelation rel;
      rel.target = order[i];
      hp::Real acc = v.value;
      for (size_t j = 1; j < r.relation.size(); ++j) {
        mpq_class q(-r.relation[j], r.relation[0]);
        q.canonicalize();
        acc -= hp::Real(q) * basis_vals[j - 1].value;
        rel.coefficients.push_back(q);
      }
      rel.residual = hp::abs(acc);
      rep.relations.push_back(std::move(rel));
    } else if (r.outcome == PslqOutcome::Excluded) {
      rep.basis.push_back(order[i]);
      basis_vals.push_back(v);
    } else {
      rep.undecided.push_back(order[i]);
    }
  }
  return rep;
}

BasisReport find_basis(int weight, int digits, const mpz_class& max_height) {
  Evaluator ev(digits);
  return find_basis(weight, ev, max_height);
}

std::vector<DeligneElement> deligne_basis(int weight, Evaluator& ev) {
  if (weight < 1 || weight > 5) throw AmtvError("deligne_basis supports weights 1..5");
  std::vector<DeligneElement> out;
  auto guard = hp::WorkingPrecision(ev.digits() + 15);
  const hp::Real two_pi = hp::pi() * 2L;
  for (int p = weight; p >= 0; --p) {
    std::vector<std::vector<int>> comps;
    std::vector<int> cur;
    if (weight - p > 0) {
      std::vector<int> parts;
      for (int j = 1; j <= weight - p; ++j) parts.push_back(j);
      compositions(weight - p, parts, cur, comps);
    } else {
      comps.push_back({});
    }
    for (const auto& k : comps) {
      DeligneElement e;
      e.p = p;
      e.ks = k;
      // (2 pi i)^p = (2 pi)^p i^p
      hp::Complex tp(hp::pow(two_pi, p), hp::Real(0L));
      switch (p % 4) {
        case 1:
          tp = hp::Complex(hp::Real(0L), tp.re);
          break;
        case 2:
          tp = hp::Complex(-tp.re, hp::Real(0L));
          break;
        case 3:
          tp = hp::Complex(hp::Real(0L), -tp.re);
          break;
        default:
          break;
      }
      std::string label = "(2pi i)^" + std::to_string(p);
      if (k.empty()) {
        e.value = {tp, hp::Real(0L)};
      } else {
        std::vector<int> rk(k.rbegin(), k.rend());
        std::vector<int> etas(k.size(), 0);
        etas.back() = 1;
        HPComplex L = ev.colored_mzv(rk, etas);
        hp::Real err = L.err * hp::abs(tp);
        e.value = {tp * L.value, err};
        label += " L(";
        for (size_t j = 0; j < k.size(); ++j) label += (j ? "," : "") + std::to_string(k[j]);
        label += ")";
      }
      e.label = label;
      out.push_back(std::move(e));
    }
  }
  return out;
}

std::vector<LiftedRelation> lifted_relations(int weight) {
  std::vector<LiftedRelation> out;
  for (int k = 1; k + 2 <= weight; ++k) {
    auto factors = enumerate_indices(k);
    for (const auto& ix : enumerate_indices(weight - k)) {
      TIndex d = dual(ix);
      if (!(ix < d)) continue;
      const int s = to_int(duality_sign(ix));
      for (const auto& x : factors) {
        FormalSum<TIndex> rel = product_as_T(x, ix);
        for (const auto& [t, c] : product_as_T(x, d)) rel.add(t, -c * s);
        if (rel.empty()) continue;
        out.push_back({"T(" + to_string(x) + ") * [T(" + to_string(ix) + ") - T(" + to_string(d) + ")]", std::move(rel)});
      }
    }
  }
  for (const auto& ix : enumerate_indices(weight)) {
    if (ix.depth() != 3) continue;
    bool ok = true;
    for (int j = 0; j < 3; ++j)
      if (ix.ks[j] == 1 && ix.sigmas[j] == Sign::Plus) ok = false;
    if (!ok) continue;
    TIndex rev({ix.ks[2], ix.ks[1], ix.ks[0]}, {ix.sigmas[2], ix.sigmas[1], ix.sigmas[0]});
    if (!(ix < rev)) continue;
    TIndex head({ix.ks[0], ix.ks[1]}, {ix.sigmas[0], ix.sigmas[1]});
    TIndex last({ix.ks[2]}, {ix.sigmas[2]});
    TIndex rhead({ix.ks[2], ix.ks[1]}, {ix.sigmas[2], ix.sigmas[1]});
    TIndex first({ix.ks[0]}, {ix.sigmas[0]});
    FormalSum<TIndex> rel;
    rel.add(ix, to_int(ix.sigmas[2]));
    for (const auto& [t, c] : product_as_T(head, last)) rel.add(t, -c);
    rel.add(rev, -to_int(ix.sigmas[0]));
    for (const auto& [t, c] : product_as_T(rhead, first)) rel.add(t, c);
    if (rel.empty()) continue;
    out.push_back({"reversal at (" + to_string(ix) + ")", std::move(rel)});
  }
  return out;
}

}  // namespace amtv
