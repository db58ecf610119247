#include "dq/interval.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "dq/errors.hpp"

namespace dq {
namespace {

thread_local int g_precision = 128;

constexpr const char* kZetaPrime2 = "-0.937548254315843753702574094568";
constexpr const char* kZetaPrime2Radius = "1e-29";

void min_into(mpfr_t dst, mpfr_srcptr candidate) {
  if (mpfr_less_p(candidate, dst)) mpfr_set(dst, candidate, MPFR_RNDD);
}

void max_into(mpfr_t dst, mpfr_srcptr candidate) {
  if (mpfr_greater_p(candidate, dst)) mpfr_set(dst, candidate, MPFR_RNDU);
}

void require_no_nan(const Interval& x, const char* op) {
  if (mpfr_nan_p(x.lo_ptr()) || mpfr_nan_p(x.hi_ptr()))
    throw DomainError(std::string("interval ") + op + " produced NaN");
}

}  // namespace

int default_precision() { return g_precision; }

void set_default_precision(int bits) {
  if (bits < 64) throw DomainError("interval precision must be at least 64 bits");
  g_precision = bits;
}

PrecisionScope::PrecisionScope(int bits) : saved_(g_precision) { set_default_precision(bits); }
PrecisionScope::~PrecisionScope() { g_precision = saved_; }

Interval::Interval(Uninit, int prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
}

Interval::Interval() : Interval(Uninit{}, g_precision) {
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(long value) : Interval(Uninit{}, g_precision) {
  mpfr_set_si(lo_, value, MPFR_RNDD);
  mpfr_set_si(hi_, value, MPFR_RNDU);
}

Interval::Interval(const Nat& value) : Interval(Uninit{}, g_precision) {
  mpfr_set_z(lo_, value.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(hi_, value.get_mpz_t(), MPFR_RNDU);
}

Interval::Interval(const Rational& value) : Interval(Uninit{}, g_precision) {
  mpfr_set_q(lo_, value.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, value.get_mpq_t(), MPFR_RNDU);
}

Interval Interval::from_decimal(std::string_view literal) {
  const std::string text(literal);
  Interval r(Uninit{}, g_precision);
  if (mpfr_set_str(r.lo_, text.c_str(), 10, MPFR_RNDD) != 0 ||
      mpfr_set_str(r.hi_, text.c_str(), 10, MPFR_RNDU) != 0)
    throw DomainError("not a decimal literal: '" + text + "'");
  return r;
}

Interval Interval::from_bounds(double lo, double hi) {
  if (!(lo <= hi)) throw DomainError("interval bounds out of order");
  Interval r(Uninit{}, g_precision);
  mpfr_set_d(r.lo_, lo, MPFR_RNDD);
  mpfr_set_d(r.hi_, hi, MPFR_RNDU);
  return r;
}

Interval Interval::hull(const Interval& a, const Interval& b) {
  Interval r(a);
  min_into(r.lo_, b.lo_);
  max_into(r.hi_, b.hi_);
  return r;
}

Interval Interval::pi() {
  Interval r(Uninit{}, g_precision);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::ln2() {
  Interval r(Uninit{}, g_precision);
  mpfr_const_log2(r.lo_, MPFR_RNDD);
  mpfr_const_log2(r.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::euler_gamma() {
  Interval r(Uninit{}, g_precision);
  mpfr_const_euler(r.lo_, MPFR_RNDD);
  mpfr_const_euler(r.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::zeta_prime_2() {
  const Interval centre = from_decimal(kZetaPrime2);
  const Interval radius = from_decimal(kZetaPrime2Radius);
  return hull(centre - radius, centre + radius);
}

Interval::Interval(const Interval& other) : Interval(Uninit{}, other.precision()) {
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : Interval(Uninit{}, MPFR_PREC_MIN) {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
  if (this != &other) {
    mpfr_set_prec(lo_, other.precision());
    mpfr_set_prec(hi_, other.precision());
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

double Interval::lower() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::upper() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Interval::mid() const {
  mpfr_t m;
  mpfr_init2(m, precision() + 1);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  const double d = mpfr_get_d(m, MPFR_RNDN);
  mpfr_clear(m);
  return d;
}

double Interval::width() const {
  mpfr_t w;
  mpfr_init2(w, 64);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  const double d = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return d;
}

int Interval::precision() const { return static_cast<int>(mpfr_get_prec(lo_)); }

bool Interval::contains(double x) const { return mpfr_cmp_d(lo_, x) <= 0 && mpfr_cmp_d(hi_, x) >= 0; }

bool Interval::contains(const Interval& inner) const {
  return mpfr_lessequal_p(lo_, inner.lo_) && mpfr_greaterequal_p(hi_, inner.hi_);
}

bool Interval::is_point() const { return mpfr_equal_p(lo_, hi_); }

Nat Interval::floor_lower() const {
  Nat n;
  mpfr_get_z(n.get_mpz_t(), lo_, MPFR_RNDD);
  return n;
}

Nat Interval::ceil_upper() const {
  Nat n;
  mpfr_get_z(n.get_mpz_t(), hi_, MPFR_RNDU);
  return n;
}

std::optional<Nat> Interval::floor_exact() const {
  Nat lo = floor_lower();
  Nat hi;
  mpfr_get_z(hi.get_mpz_t(), hi_, MPFR_RNDD);
  if (lo != hi) return std::nullopt;
  return lo;
}

std::string Interval::str(int digits) const {
  const int prec = std::max(digits, 1) - 1;
  std::vector<char> buf(64 + static_cast<std::size_t>(prec));
  std::string out = "[";
  mpfr_snprintf(buf.data(), buf.size(), "%.*RDe", prec, lo_);
  out += buf.data();
  out += ", ";
  mpfr_snprintf(buf.data(), buf.size(), "%.*RUe", prec, hi_);
  out += buf.data();
  out += "]";
  return out;
}

Interval& Interval::operator+=(const Interval& rhs) {
  mpfr_add(lo_, lo_, rhs.lo_, MPFR_RNDD);
  mpfr_add(hi_, hi_, rhs.hi_, MPFR_RNDU);
  require_no_nan(*this, "addition");
  return *this;
}

Interval& Interval::operator-=(const Interval& rhs) {
  // Write through temporaries so that x -= x is handled.
  Interval r(Uninit{}, std::max(precision(), rhs.precision()));
  mpfr_sub(r.lo_, lo_, rhs.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, hi_, rhs.lo_, MPFR_RNDU);
  *this = std::move(r);
  require_no_nan(*this, "subtraction");
  return *this;
}

Interval& Interval::operator*=(const Interval& rhs) {
  const int prec = std::max(precision(), rhs.precision());
  Interval r(Uninit{}, prec);
  mpfr_t t;
  mpfr_init2(t, prec);
  const std::array<std::pair<mpfr_srcptr, mpfr_srcptr>, 4> corners{{
      {lo_, rhs.lo_}, {lo_, rhs.hi_}, {hi_, rhs.lo_}, {hi_, rhs.hi_}}};
  mpfr_set_inf(r.lo_, 1);
  mpfr_set_inf(r.hi_, -1);
  for (const auto& [a, b] : corners) {
    mpfr_mul(t, a, b, MPFR_RNDD);
    min_into(r.lo_, t);
    mpfr_mul(t, a, b, MPFR_RNDU);
    max_into(r.hi_, t);
  }
  mpfr_clear(t);
  *this = std::move(r);
  require_no_nan(*this, "multiplication");
  return *this;
}

Interval& Interval::operator/=(const Interval& rhs) {
  if (mpfr_sgn(rhs.lo_) <= 0 && mpfr_sgn(rhs.hi_) >= 0) throw DomainError("interval division by an interval containing zero");
  const int prec = std::max(precision(), rhs.precision());
  Interval r(Uninit{}, prec);
  mpfr_t t;
  mpfr_init2(t, prec);
  const std::array<std::pair<mpfr_srcptr, mpfr_srcptr>, 4> corners{{
      {lo_, rhs.lo_}, {lo_, rhs.hi_}, {hi_, rhs.lo_}, {hi_, rhs.hi_}}};
  mpfr_set_inf(r.lo_, 1);
  mpfr_set_inf(r.hi_, -1);
  for (const auto& [a, b] : corners) {
    mpfr_div(t, a, b, MPFR_RNDD);
    min_into(r.lo_, t);
    mpfr_div(t, a, b, MPFR_RNDU);
    max_into(r.hi_, t);
  }
  mpfr_clear(t);
  *this = std::move(r);
  return *this;
}

Interval operator-(const Interval& x) {
  Interval r(Interval::Uninit{}, x.precision());
  mpfr_neg(r.lo_, x.hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, x.lo_, MPFR_RNDU);
  return r;
}

Interval sqrt(const Interval& x) {
  if (mpfr_sgn(x.lo_) < 0) throw DomainError("sqrt of an interval with negative part");
  Interval r(Interval::Uninit{}, x.precision());
  mpfr_sqrt(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

Interval log(const Interval& x) {
  if (mpfr_sgn(x.lo_) <= 0) throw DomainError("log of an interval that is not strictly positive");
  Interval r(Interval::Uninit{}, x.precision());
  mpfr_log(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_log(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

Interval log10(const Interval& x) {
  if (mpfr_sgn(x.lo_) <= 0) throw DomainError("log10 of an interval that is not strictly positive");
  Interval r(Interval::Uninit{}, x.precision());
  mpfr_log10(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_log10(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

Interval exp(const Interval& x) {
  Interval r(Interval::Uninit{}, x.precision());
  mpfr_exp(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

Interval exp10(const Interval& x) {
  Interval r(Interval::Uninit{}, x.precision());
  mpfr_exp10(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_exp10(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

Interval pow(const Interval& base, long exponent) {
  if (exponent == 0) return Interval(1L);
  if (exponent < 0) return Interval(1L) / pow(base, -exponent);
  Interval result(1L);
  Interval square(base);
  auto e = static_cast<unsigned long>(exponent);
  while (e != 0) {
    if ((e & 1UL) != 0) result *= square;
    e >>= 1;
    if (e != 0) square *= square;
  }
  // Even powers of an interval straddling zero are non-negative.
  if (exponent % 2 == 0 && mpfr_sgn(result.lo_) < 0) mpfr_set_zero(result.lo_, 1);
  return result;
}

Interval pow(const Interval& base, const Interval& exponent) {
  if (exponent.is_point() && mpfr_integer_p(exponent.lo_) && mpfr_fits_slong_p(exponent.lo_, MPFR_RNDN))
    return pow(base, mpfr_get_si(exponent.lo_, MPFR_RNDN));
  if (mpfr_sgn(base.lo_) <= 0) throw DomainError("non-integer power of an interval that is not strictly positive");
  // x^y is monotone in x and in y separately on x > 0, so the extremes sit
  // on the four corners.
  const int prec = std::max(base.precision(), exponent.precision());
  Interval r(Interval::Uninit{}, prec);
  mpfr_t t;
  mpfr_init2(t, prec);
  mpfr_set_inf(r.lo_, 1);
  mpfr_set_inf(r.hi_, -1);
  for (mpfr_srcptr b : {base.lo_ptr(), base.hi_ptr()}) {
    for (mpfr_srcptr e : {exponent.lo_ptr(), exponent.hi_ptr()}) {
      mpfr_pow(t, b, e, MPFR_RNDD);
      min_into(r.lo_, t);
      mpfr_pow(t, b, e, MPFR_RNDU);
      max_into(r.hi_, t);
    }
  }
  mpfr_clear(t);
  return r;
}

Interval pow(const Interval& base, const Rational& exponent) {
  if (exponent.get_den() == 1 && exponent.get_num().fits_slong_p()) return pow(base, exponent.get_num().get_si());
  return pow(base, Interval(exponent));
}

Interval min(const Interval& a, const Interval& b) {
  Interval r(a);
  min_into(r.lo_, b.lo_);
  if (mpfr_less_p(b.hi_, r.hi_)) mpfr_set(r.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval max(const Interval& a, const Interval& b) {
  Interval r(a);
  if (mpfr_greater_p(b.lo_, r.lo_)) mpfr_set(r.lo_, b.lo_, MPFR_RNDD);
  max_into(r.hi_, b.hi_);
  return r;
}

bool certainly_less(const Interval& a, const Interval& b) { return mpfr_less_p(a.hi_, b.lo_) != 0; }
bool certainly_less_equal(const Interval& a, const Interval& b) { return mpfr_lessequal_p(a.hi_, b.lo_) != 0; }
bool possibly_less(const Interval& a, const Interval& b) { return mpfr_less_p(a.lo_, b.hi_) != 0; }

double log10_upper(const Interval& x) { return log10(x).upper(); }
double log10_lower(const Interval& x) { return log10(x).lower(); }

}  // namespace dq
