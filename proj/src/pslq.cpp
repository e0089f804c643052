#include "amtv/pslq.hpp"

#include <cmath>

#include "amtv/errors.hpp"

namespace amtv {

namespace {

using hp::Real;

Real from_mpz(const mpz_class& z) { return Real(z); }

void normalize(std::vector<mpz_class>& c) {
  mpz_class g = 0;
  for (const auto& v : c) g = gcd(g, v);
  if (g > 1)
    for (auto& v : c) v /= g;
  for (const auto& v : c) {
    if (v == 0) continue;
    if (v < 0)
      for (auto& w : c) w = -w;
    break;
  }
}

}  // namespace

Real relation_residual(const std::vector<mpz_class>& c, const std::vector<Real>& xs) {
  Real s(0L);
  for (size_t j = 0; j < c.size(); ++j)
    if (c[j] != 0) s += from_mpz(c[j]) * xs[j];
  return hp::abs(s);
}

PslqResult pslq_search(const std::vector<Real>& input, int digits, const mpz_class& max_height) {
  const int n = static_cast<int>(input.size());
  if (n < 2) throw AmtvError("pslq needs at least two values");
  if (max_height < 1) throw AmtvError("pslq height bound must be positive");
  const double log_h = std::log10(max_height.get_d());
  if (digits * 4.0 / 5.0 < n * log_h)
    throw PrecisionError("pslq: " + std::to_string(digits) + " digits cannot support " + std::to_string(n) +
                         " values at height 1e" + std::to_string(log_h));
  auto guard = hp::WorkingPrecision(digits);
  PslqResult res;

  Real norm(0L);
  for (const auto& v : input) norm += v * v;
  norm = hp::sqrt(norm);
  if (norm.is_zero()) throw AmtvError("pslq: all inputs vanish");
  const Real threshold = hp::pow10(-(digits * 4 / 5));
  const Real gamma = hp::sqrt(Real(4L) / Real(3L));

  // Trivial relations: a single (near-)zero entry.
  for (int j = 0; j < n; ++j) {
    if (hp::abs(input[j]) < threshold * norm) {
      res.outcome = PslqOutcome::Found;
      res.relation.assign(n, 0);
      res.relation[j] = 1;
      return res;
    }
  }

  std::vector<Real> x(n);
  for (int j = 0; j < n; ++j) x[j] = input[j] / norm;
  std::vector<Real> s(n);
  {
    Real acc(0L);
    for (int j = n - 1; j >= 0; --j) {
      acc += x[j] * x[j];
      s[j] = hp::sqrt(acc);
    }
  }
  // H is n x (n-1), lower trapezoidal.
  std::vector<std::vector<Real>> H(n, std::vector<Real>(n - 1, Real(0L)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n - 1; ++j) {
      if (i == j)
        H[i][j] = s[j + 1] / s[j];
      else if (i > j)
        H[i][j] = -(x[i] * x[j]) / (s[j] * s[j + 1]);
    }
  }
  std::vector<std::vector<mpz_class>> A(n, std::vector<mpz_class>(n, 0)), B(n, std::vector<mpz_class>(n, 0));
  for (int i = 0; i < n; ++i) A[i][i] = B[i][i] = 1;
  std::vector<Real> y = x;

  auto reduce = [&](int i, int j) {
    if (H[j][j].is_zero()) return;
    mpz_class t = (H[i][j] / H[j][j]).round();
    if (t == 0) return;
    Real tr(t);
    y[j] += tr * y[i];
    for (int k = 0; k <= j; ++k) H[i][k] -= tr * H[j][k];
    for (int k = 0; k < n; ++k) {
      A[i][k] -= t * A[j][k];
      B[k][j] += t * B[k][i];
    }
  };
  for (int i = 1; i < n; ++i)
    for (int j = i - 1; j >= 0; --j) reduce(i, j);

  const Real huge = hp::pow10(digits * 9 / 10);
  const Real height_norm = Real(max_height) * hp::sqrt(Real(static_cast<long>(n)));
  const long max_iter = 200000;
  for (long it = 1; it <= max_iter; ++it) {
    res.iterations = it;
    int m = 0;
    Real best(-1L);
    Real g = gamma;
    for (int i = 0; i < n - 1; ++i) {
      Real v = g * hp::abs(H[i][i]);
      if (v > best) {
        best = v;
        m = i;
      }
      g *= gamma;
    }
    std::swap(y[m], y[m + 1]);
    std::swap(A[m], A[m + 1]);
    std::swap(H[m], H[m + 1]);
    for (int k = 0; k < n; ++k) std::swap(B[k][m], B[k][m + 1]);
    if (m < n - 2) {
      Real t0 = hp::sqrt(H[m][m] * H[m][m] + H[m][m + 1] * H[m][m + 1]);
      if (t0.is_zero()) break;
      Real t1 = H[m][m] / t0, t2 = H[m][m + 1] / t0;
      for (int i = m; i < n; ++i) {
        Real t3 = H[i][m], t4 = H[i][m + 1];
        H[i][m] = t1 * t3 + t2 * t4;
        H[i][m + 1] = t1 * t4 - t2 * t3;
      }
    }
    for (int i = m + 1; i < n; ++i)
      for (int j = std::min(i - 1, m + 1); j >= 0; --j) reduce(i, j);

    // Candidate relation: smallest |y_j|.
    int jmin = 0;
    for (int j = 1; j < n; ++j)
      if (hp::abs(y[j]) < hp::abs(y[jmin])) jmin = j;
    if (hp::abs(y[jmin]) < threshold) {
      std::vector<mpz_class> c(n);
      for (int k = 0; k < n; ++k) c[k] = B[k][jmin];
      normalize(c);
      mpz_class h = 0;
      for (const auto& v : c) h = std::max<mpz_class>(h, abs(v));
      if (h <= max_height && relation_residual(c, input) < threshold * norm) {
        res.outcome = PslqOutcome::Found;
        res.relation = std::move(c);
      } else {
        res.outcome = PslqOutcome::Exhausted;
      }
      return res;
    }

    Real hmax(0L);
    for (int j = 0; j < n - 1; ++j) hmax = hp::max(hmax, hp::abs(H[j][j]));
    if (!hmax.is_zero()) {
      Real bound = Real(1L) / hmax;
      res.norm_bound = bound.to_double();
      if (bound > height_norm) {
        res.outcome = PslqOutcome::Excluded;
        return res;
      }
    }
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        if (Real(mpz_class(abs(A[i][k]))) > huge) {
          res.outcome = PslqOutcome::Exhausted;
          return res;
        }
  }
  res.outcome = PslqOutcome::Exhausted;
  return res;
}

std::optional<std::vector<mpz_class>> pslq(const std::vector<HPReal>& xs, int digits, const mpz_class& max_height) {
  auto guard = hp::WorkingPrecision(digits);
  const Real tol = hp::pow10(-digits);
  std::vector<Real> vals;
  for (const auto& x : xs) {
    if (x.err > tol) throw PrecisionError("pslq input error " + x.err.to_string(3) + " exceeds 1e-" + std::to_string(digits));
    vals.push_back(x.value);
  }
  auto r = pslq_search(vals, digits, max_height);
  if (r.outcome != PslqOutcome::Found) return std::nullopt;
  return r.relation;
}

std::optional<std::vector<mpq_class>> express(const HPReal& x, const std::vector<HPReal>& basis, int digits,
                                              const mpz_class& max_height) {
  std::vector<HPReal> xs{x};
  xs.insert(xs.end(), basis.begin(), basis.end());
  auto r = pslq(xs, digits, max_height);
  if (!r || (*r)[0] == 0) return std::nullopt;
  std::vector<mpq_class> out;
  for (size_t j = 1; j < r->size(); ++j) {
    mpq_class q(-(*r)[j], (*r)[0]);
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

}  // namespace amtv
