#pragma once

// Outward-rounded real intervals on MPFR endpoints.
//
// Every operation returns an enclosure of the exact real result: lower
// endpoints are computed with MPFR_RNDD and upper endpoints with MPFR_RNDU.
// Comparisons come in two flavours: "certainly" predicates hold only when
// they hold for every pair of points in the operands, "possibly" predicates
// when they hold for at least one.

#include <mpfr.h>

#include <optional>
#include <string>
#include <string_view>

#include "dq/nat.hpp"

namespace dq {

// Working precision (bits per endpoint) for newly created intervals.
// Thread-local; defaults to 128.
int default_precision();
void set_default_precision(int bits);

class PrecisionScope {
 public:
  explicit PrecisionScope(int bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  int saved_;
};

class Interval {
 public:
  Interval();  // [0, 0]
  Interval(long value);  // NOLINT(google-explicit-constructor): exact small integers
  explicit Interval(const Nat& value);
  explicit Interval(const Rational& value);

  // Outward conversion of a decimal literal such as "3.35e8" or "-0.957".
  static Interval from_decimal(std::string_view literal);
  // Outward conversion of a double-precision pair; lo must not exceed hi.
  static Interval from_bounds(double lo, double hi);
  static Interval hull(const Interval& a, const Interval& b);

  static Interval pi();
  static Interval ln2();
  static Interval euler_gamma();
  // ζ'(2) = -Σ log(n)/n², enclosed from a 30-digit literal.
  static Interval zeta_prime_2();

  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  double lower() const;  // rounded down to double
  double upper() const;  // rounded up to double
  double mid() const;
  // Upper bound on hi - lo, as a double.
  double width() const;
  int precision() const;

  bool contains(double x) const;
  bool contains(const Interval& inner) const;
  bool is_point() const;

  // Exact integer part when floor(lo) == floor(hi).
  std::optional<Nat> floor_exact() const;
  Nat floor_lower() const;  // floor(lo)
  Nat ceil_upper() const;   // ceil(hi)

  // "[lo, hi]" with the requested significant digits, rounded outward.
  std::string str(int digits = 10) const;

  Interval& operator+=(const Interval& rhs);
  Interval& operator-=(const Interval& rhs);
  Interval& operator*=(const Interval& rhs);
  Interval& operator/=(const Interval& rhs);

  friend Interval operator-(const Interval& x);
  friend Interval operator+(Interval lhs, const Interval& rhs) { return lhs += rhs; }
  friend Interval operator-(Interval lhs, const Interval& rhs) { return lhs -= rhs; }
  friend Interval operator*(Interval lhs, const Interval& rhs) { return lhs *= rhs; }
  friend Interval operator/(Interval lhs, const Interval& rhs) { return lhs /= rhs; }

  friend Interval sqrt(const Interval& x);
  friend Interval log(const Interval& x);
  friend Interval log10(const Interval& x);
  friend Interval exp(const Interval& x);
  friend Interval exp10(const Interval& x);
  friend Interval pow(const Interval& base, const Interval& exponent);
  friend Interval pow(const Interval& base, long exponent);
  friend Interval min(const Interval& a, const Interval& b);
  friend Interval max(const Interval& a, const Interval& b);

  friend bool certainly_less(const Interval& a, const Interval& b);
  friend bool certainly_less_equal(const Interval& a, const Interval& b);
  friend bool possibly_less(const Interval& a, const Interval& b);

  const __mpfr_struct* lo_ptr() const { return lo_; }
  const __mpfr_struct* hi_ptr() const { return hi_; }

 private:
  struct Uninit {};
  explicit Interval(Uninit, int prec);

  mpfr_t lo_;
  mpfr_t hi_;
};

bool certainly_less(const Interval& a, const Interval& b);
bool certainly_less_equal(const Interval& a, const Interval& b);
bool possibly_less(const Interval& a, const Interval& b);

inline bool certainly_greater(const Interval& a, const Interval& b) { return certainly_less(b, a); }
inline bool certainly_positive(const Interval& a) { return certainly_less(Interval(0L), a); }

Interval pow(const Interval& base, const Rational& exponent);

// log10 of the endpoints, rounded outward to double.
double log10_upper(const Interval& x);
double log10_lower(const Interval& x);

}  // namespace dq
