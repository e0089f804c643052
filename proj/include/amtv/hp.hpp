#pragma once

#include <mpfr.h>
#include <gmpxx.h>

#include <compare>
#include <string>
#include <utility>

namespace amtv::hp {

// Bits needed for `digits` decimal digits.
mpfr_prec_t digits_to_bits(int digits);

mpfr_prec_t default_bits();

// Scoped thread-local working precision. New Reals take this precision.
class WorkingPrecision {
 public:
  explicit WorkingPrecision(int digits);
  static WorkingPrecision from_bits(mpfr_prec_t bits);
  ~WorkingPrecision();
  WorkingPrecision(const WorkingPrecision&) = delete;
  WorkingPrecision& operator=(const WorkingPrecision&) = delete;
  WorkingPrecision(WorkingPrecision&& o) noexcept : saved_(o.saved_), active_(o.active_) { o.active_ = false; }

 private:
  WorkingPrecision() = default;
  mpfr_prec_t saved_ = 0;
  bool active_ = false;
};

class Real {
 public:
  Real();
  Real(long v);  // NOLINT
  Real(int v) : Real(static_cast<long>(v)) {}  // NOLINT
  Real(double v);  // NOLINT
  Real(const mpq_class& q);  // NOLINT
  Real(const mpz_class& z);  // NOLINT
  explicit Real(const std::string& decimal);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  static Real with_bits(mpfr_prec_t bits);

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t bits() const { return mpfr_get_prec(v_); }

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator*=(long o);
  Real& operator/=(long o);

  Real operator-() const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long double to_long_double() const { return mpfr_get_ld(v_, MPFR_RNDN); }
  // Nearest integer.
  mpz_class round() const;
  // Decimal exponent e with 10^(e-1) <= |x| < 10^e, or a large negative value for 0.
  long log10_magnitude() const;

  // Scientific decimal with `sig` significant digits, e.g. "-1.5707963e0".
  std::string to_string(int sig) const;

 private:
  mpfr_t v_;
};

Real operator+(Real a, const Real& b);
Real operator-(Real a, const Real& b);
Real operator*(Real a, const Real& b);
Real operator/(Real a, const Real& b);
Real operator*(Real a, long b);
Real operator*(long b, Real a);
Real operator/(Real a, long b);

std::partial_ordering operator<=>(const Real& a, const Real& b);
bool operator==(const Real& a, const Real& b);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real log(const Real& x);
Real exp(const Real& x);
Real pow(const Real& x, long n);
Real pi();
Real log2();
// 10^e
Real pow10(long e);
Real max(const Real& a, const Real& b);

struct Complex {
  Real re;
  Real im;
  Complex() = default;
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit Complex(Real r) : re(std::move(r)), im(0L) {}
  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
};

Complex operator+(Complex a, const Complex& b);
Complex operator-(Complex a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator-(const Complex& a);
Real abs(const Complex& z);

}  // namespace amtv::hp
