#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <string>
#include <string_view>

#include "cantorfiber/errors.hpp"

namespace cantorfiber {

using BigFloat = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<0>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::mpq_rational;

/// Working precision for newly created BigFloat values, in bits.
/// Minimum 53. Set once at startup (or per CLI invocation) before computing;
/// values created earlier keep their precision.
void set_precision_bits(unsigned bits);
unsigned precision_bits();

/// Relative rounding slack of one arithmetic op at the current precision.
double rounding_eps();

/// A real number with a certified error radius: the true value lies in
/// [value - radius, value + radius]. Arithmetic propagates radii
/// conservatively, so derived quantities stay certified.
class RealScalar {
 public:
  RealScalar() : v_(0), r_(0) {}
  RealScalar(const BigFloat& v, double radius) : v_(v), r_(radius) {}

  static RealScalar from_int(long long n) { return RealScalar(BigFloat(n), 0.0); }
  static RealScalar from_double(double d) { return RealScalar(BigFloat(d), 0.0); }
  static RealScalar from_rational(const Rational& q);
  static RealScalar from_rational(long long num, long long den);
  /// Accepts "p/q", decimal, or integer text.
  static RealScalar parse(std::string_view text);

  const BigFloat& value() const { return v_; }
  double radius() const { return r_; }
  bool exact() const { return r_ == 0.0; }

  /// Loosen the certified radius (never tightens).
  RealScalar with_radius(double r) const;

  RealScalar operator-() const { return RealScalar(-v_, r_); }
  friend RealScalar operator+(const RealScalar& a, const RealScalar& b);
  friend RealScalar operator-(const RealScalar& a, const RealScalar& b);
  friend RealScalar operator*(const RealScalar& a, const RealScalar& b);
  friend RealScalar operator/(const RealScalar& a, const RealScalar& b);

  RealScalar& operator+=(const RealScalar& b) { return *this = *this + b; }
  RealScalar& operator-=(const RealScalar& b) { return *this = *this - b; }
  RealScalar& operator*=(const RealScalar& b) { return *this = *this * b; }

  friend RealScalar abs(const RealScalar& a) { return RealScalar(abs(a.v_), a.r_); }
  friend RealScalar sqrt(const RealScalar& a);
  friend RealScalar pow_ui(const RealScalar& a, unsigned n);

  /// -1, 0(+overlap/unknown), +1 comparison certified against radii.
  static int cmp_certain(const RealScalar& a, const RealScalar& b);
  /// Certified sign: -1, +1, or 0 when the ball straddles zero.
  int sign_certain() const;

  BigFloat upper() const { return v_ + BigFloat(r_); }
  BigFloat lower() const { return v_ - BigFloat(r_); }

  /// Decimal string with the full working precision.
  std::string str() const;
  std::string str(unsigned digits) const;

  double to_double() const { return static_cast<double>(v_); }

 private:
  BigFloat v_;
  double r_;
};

/// Parse "p/q", decimal or integer text into an exact rational.
Rational parse_rational(std::string_view text);

}  // namespace cantorfiber
