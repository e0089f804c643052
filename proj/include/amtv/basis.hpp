#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "amtv/formal_sum.hpp"
#include "amtv/level4.hpp"
#include "amtv/pslq.hpp"
#include "amtv/tvalue.hpp"

namespace amtv {

// target = sum coefficients[j] * basis[j]
struct BasisRelation {
  TIndex target;
  std::vector<mpq_class> coefficients;
  hp::Real residual;
};

struct BasisReport {
  int weight = 0;
  int digits = 0;
  mpz_class height;
  std::vector<TIndex> basis;
  std::vector<BasisRelation> relations;
  std::vector<TIndex> undecided;
  std::size_t scanned = 0;
  int dim() const { return static_cast<int>(basis.size()); }
};

// Candidate pattern: parts in {1,2,3}, last part barred, earlier parts barred
// iff >= 2; ordered by depth then entries, with the known per-weight swaps.
std::vector<TIndex> basis_candidates(int weight);

// Greedy scan: candidates first, then the remaining canonical representatives.
BasisReport find_basis(int weight, Evaluator& ev, const mpz_class& max_height);
BasisReport find_basis(int weight, int digits, const mpz_class& max_height);

struct DeligneElement {
  std::string label;  // e.g. "(2pi i)^1 L(2,1)"
  int p = 0;
  std::vector<int> ks;
  HPComplex value;
};

// (2 pi i)^p Li_k(i,1,...,1), p + |k| = weight; the i sits on the outermost summation index.
std::vector<DeligneElement> deligne_basis(int weight, Evaluator& ev);

struct LiftedRelation {
  std::string origin;
  FormalSum<TIndex> relation;  // sums to zero
};

// Products of lower-weight values with duality relations, plus depth-3 reversal identities.
std::vector<LiftedRelation> lifted_relations(int weight);

// T(ix) = sign * T(dual(ix))
Sign duality_sign(const TIndex& ix);

}  // namespace amtv
