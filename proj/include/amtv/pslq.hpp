#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "amtv/hp.hpp"
#include "amtv/level4.hpp"

namespace amtv {

enum class PslqOutcome { Found, Excluded, Exhausted };

struct PslqResult {
  PslqOutcome outcome = PslqOutcome::Exhausted;
  std::vector<mpz_class> relation;  // set when Found
  double norm_bound = 0;            // every relation has Euclidean norm >= this
  long iterations = 0;
};

// Integer relation search among xs known to 10^-digits. Found relations have
// height <= max_height and residual below 10^-(4 digits / 5). Excluded means
// no relation of height <= max_height exists. Throws PrecisionError when
// digits cannot support the requested height.
PslqResult pslq_search(const std::vector<hp::Real>& xs, int digits, const mpz_class& max_height);

std::optional<std::vector<mpz_class>> pslq(const std::vector<HPReal>& xs, int digits, const mpz_class& max_height);

// x = sum c_j basis_j with rational c, from a relation with nonzero lead.
std::optional<std::vector<mpq_class>> express(const HPReal& x, const std::vector<HPReal>& basis, int digits,
                                              const mpz_class& max_height);

struct Relation {
  std::vector<std::string> symbols;
  std::vector<mpz_class> coefficients;
  hp::Real residual;
  int digits = 0;
  mpz_class height;
};

// |sum c_j x_j|
hp::Real relation_residual(const std::vector<mpz_class>& c, const std::vector<hp::Real>& xs);

}  // namespace amtv
