#pragma once

#include <gmpxx.h>

#include <functional>
#include <stdexcept>
#include <vector>

#include "amtv/constants.hpp"
#include "amtv/formal_sum.hpp"
#include "amtv/tvalue.hpp"

namespace amtv {

enum class HarmonicKind { T, S };

// Exact T_n(ks) / S_n(ks), including the 2^m prefactor. Empty ks gives 1.
mpq_class harmonic_sum(HarmonicKind kind, long n, const std::vector<int>& ks);

// Oracle-tier estimate: |true - value| <= bound.
struct ErrBound {
  long double value = 0;
  long double bound = 0;
};

// T(ks (*) ls), the alternating convoluted value. Throws PrecisionError when
// 10^-digits is not reached within term_budget outer terms.
ErrBound convoluted_T(const std::vector<int>& ks, const std::vector<int>& ls, int digits,
                      long term_budget = 4'000'000);

// Brute-force nested sum with certified tail bound.
ErrBound oracle_eval(const TIndex& ix, long term_budget = 10'000'000);

// Sum over compositions of k into r parts of T(k_1,...,\bar k_l,...,\bar k_r).
// l = 0 or l = r bars only the last entry.
FormalSum<TIndex> weighted_sum_symbolic(int k, int r, int l);

enum class LogRow { ee, eo, oe, oo };

// Closed form of the log-moment integral of the selected row.
ConstExpr log_moment_integral(int n, int m, LogRow row);
// Left-hand side by double-exponential quadrature.
long double log_moment_quadrature(int n, int m, LogRow row);

// Closed form of sum_{n>=1} (-1)^{n-1} hbar_n^{(p)} / n^q, p + q even.
ConstExpr alt_odd_harmonic_closed(int p, int q);

// Solve sum_{j<=p} A(j,p) B_j = C_p (A(p,p) = 1, indices from 1) with the
// signed-path formula.
template <class T>
std::vector<T> triangular_invert(const std::function<T(int, int)>& A, const std::vector<T>& C) {
  const int P = static_cast<int>(C.size());
  std::vector<T> B(P, T(0));
  for (int p = 1; p <= P; ++p) {
    // paths[j] = sum over paths j = i0 < ... < ik = p of (-1)^k prod A(i_{l-1}, i_l)
    std::vector<T> paths(p + 1, T(0));
    paths[p] = T(1);
    for (int j = p - 1; j >= 1; --j) {
      T s(0);
      for (int i = j + 1; i <= p; ++i) s -= A(j, i) * paths[i];
      paths[j] = s;
    }
    T b(0);
    for (int j = 1; j <= p; ++j) b += C[j - 1] * paths[j];
    B[p - 1] = b;
  }
  return B;
}

template <class T>
std::vector<T> forward_substitute(const std::function<T(int, int)>& A, const std::vector<T>& C) {
  const int P = static_cast<int>(C.size());
  std::vector<T> B(P, T(0));
  for (int p = 1; p <= P; ++p) {
    T b = C[p - 1];
    for (int j = 1; j < p; ++j) b -= A(j, p) * B[j - 1];
    B[p - 1] = b;
  }
  return B;
}

}  // namespace amtv
