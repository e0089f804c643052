#include "amtv/hp.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace amtv::hp {

namespace {
thread_local mpfr_prec_t g_bits = 128;
}

mpfr_prec_t digits_to_bits(int digits) {
  if (digits < 1) digits = 1;
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 16;
}

mpfr_prec_t default_bits() { return g_bits; }

WorkingPrecision::WorkingPrecision(int digits) : saved_(g_bits), active_(true) { g_bits = digits_to_bits(digits); }

WorkingPrecision WorkingPrecision::from_bits(mpfr_prec_t bits) {
  WorkingPrecision w;
  w.saved_ = g_bits;
  w.active_ = true;
  g_bits = bits;
  return w;
}

WorkingPrecision::~WorkingPrecision() {
  if (active_) g_bits = saved_;
}

Real::Real() {
  mpfr_init2(v_, g_bits);
  mpfr_set_zero(v_, 1);
}

Real::Real(long v) {
  mpfr_init2(v_, g_bits);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(double v) {
  mpfr_init2(v_, g_bits);
  mpfr_set_d(v_, v, MPFR_RNDN);
}

Real::Real(const mpq_class& q) {
  mpfr_init2(v_, g_bits);
  mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const mpz_class& z) {
  mpfr_init2(v_, g_bits);
  mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const std::string& decimal) {
  mpfr_init2(v_, g_bits);
  if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
    mpfr_clear(v_);
    throw std::invalid_argument("not a decimal number: " + decimal);
  }
}

Real::Real(const Real& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::with_bits(mpfr_prec_t bits) {
  auto guard = WorkingPrecision::from_bits(bits);
  return Real();
}

Real& Real::operator+=(const Real& o) {
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(const Real& o) {
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(const Real& o) {
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(const Real& o) {
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(long o) {
  mpfr_mul_si(v_, v_, o, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(long o) {
  mpfr_div_si(v_, v_, o, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

mpz_class Real::round() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
  return z;
}

long Real::log10_magnitude() const {
  if (mpfr_zero_p(v_)) return -1000000000L;
  // log10|x| ~ exponent * log10(2)
  long e2 = mpfr_get_exp(v_);
  return static_cast<long>(std::floor(e2 * 0.30102999566398120)) + 1;
}

std::string Real::to_string(int sig) const {
  if (sig < 1) sig = 1;
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  if (mpfr_zero_p(v_)) return "0";
  mpfr_exp_t e = 0;
  char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(sig), v_, MPFR_RNDN);
  std::string digits(s);
  mpfr_free_str(s);
  std::string out;
  if (!digits.empty() && digits[0] == '-') {
    out += '-';
    digits.erase(0, 1);
  }
  out += digits[0];
  if (digits.size() > 1) {
    out += '.';
    out += digits.substr(1);
  }
  out += 'e';
  out += std::to_string(static_cast<long>(e) - 1);
  return out;
}

Real operator+(Real a, const Real& b) { return a += b; }
Real operator-(Real a, const Real& b) { return a -= b; }
Real operator*(Real a, const Real& b) { return a *= b; }
Real operator/(Real a, const Real& b) { return a /= b; }
Real operator*(Real a, long b) { return a *= b; }
Real operator*(long b, Real a) { return a *= b; }
Real operator/(Real a, long b) { return a /= b; }

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.get(), b.get())) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.get(), b.get());
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }

Real abs(const Real& x) {
  Real r;
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real sqrt(const Real& x) {
  Real r;
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real log(const Real& x) {
  Real r;
  mpfr_log(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real exp(const Real& x) {
  Real r;
  mpfr_exp(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, long n) {
  Real r;
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

Real pi() {
  Real r;
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

Real log2() {
  Real r;
  mpfr_const_log2(r.get(), MPFR_RNDN);
  return r;
}

Real pow10(long e) {
  Real r(10L);
  mpfr_pow_si(r.get(), r.get(), e, MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return (a < b) ? b : a; }

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Complex operator+(Complex a, const Complex& b) { return a += b; }
Complex operator-(Complex a, const Complex& b) { return a -= b; }

Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }

Complex operator*(const Complex& a, const Complex& b) {
  return Complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

Real abs(const Complex& z) {
  Real r;
  mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  return r;
}

}  // namespace amtv::hp
