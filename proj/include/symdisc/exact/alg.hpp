#pragma once

// Exact arithmetic in Q(sqrt2, sqrt3) = Q-span of {1, sqrt2, sqrt3, sqrt6} and its
// complexification.

#include <array>
#include <complex>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace symdisc::exact {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

class AlgNum {
 public:
  AlgNum() = default;
  AlgNum(long long v) : q0_(v) {}  // NOLINT(google-explicit-constructor)
  AlgNum(Rational q0, Rational q2 = 0, Rational q3 = 0, Rational q6 = 0)
      : q0_(std::move(q0)), q2_(std::move(q2)), q3_(std::move(q3)), q6_(std::move(q6)) {}

  static AlgNum sqrt2() { return {0, 1, 0, 0}; }
  static AlgNum sqrt3() { return {0, 0, 1, 0}; }
  static AlgNum sqrt6() { return {0, 0, 0, 1}; }

  const Rational& q0() const { return q0_; }
  const Rational& q2() const { return q2_; }
  const Rational& q3() const { return q3_; }
  const Rational& q6() const { return q6_; }

  bool is_zero() const { return q0_ == 0 && q2_ == 0 && q3_ == 0 && q6_ == 0; }
  bool is_rational() const { return q2_ == 0 && q3_ == 0 && q6_ == 0; }

  AlgNum operator-() const { return {-q0_, -q2_, -q3_, -q6_}; }
  AlgNum& operator+=(const AlgNum& o);
  AlgNum& operator-=(const AlgNum& o);
  AlgNum& operator*=(const AlgNum& o);
  AlgNum& operator/=(const AlgNum& o);

  friend AlgNum operator+(AlgNum a, const AlgNum& b) { return a += b; }
  friend AlgNum operator-(AlgNum a, const AlgNum& b) { return a -= b; }
  friend AlgNum operator*(AlgNum a, const AlgNum& b) { return a *= b; }
  friend AlgNum operator/(AlgNum a, const AlgNum& b) { return a /= b; }
  friend bool operator==(const AlgNum&, const AlgNum&) = default;

  /// Multiplicative inverse; throws Error{DivisionByZero} on zero.
  AlgNum inv() const;

  /// Galois conjugates: sqrt3 -> -sqrt3 and sqrt2 -> -sqrt2 respectively.
  AlgNum flip_sqrt3() const { return {q0_, q2_, -q3_, -q6_}; }
  AlgNum flip_sqrt2() const { return {q0_, -q2_, q3_, -q6_}; }

  long double to_long_double() const;
  std::string to_string() const;

 private:
  Rational q0_, q2_, q3_, q6_;
};

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

struct SignResult {
  Sign sign = Sign::Zero;
  unsigned bits = 0;  // precision at which the interval excluded zero
};

/// Starting precision for sign intervals: 64 bits, raised by SYMDISC_PRECISION if set.
unsigned default_sign_precision();

/// Exact sign: zero short-circuit, then interval evaluation of the sqrt
/// coordinates with doubling precision until the interval excludes zero.
SignResult alg_sign(const AlgNum& x, unsigned start_bits = default_sign_precision());

class AlgComplex {
 public:
  AlgComplex() = default;
  AlgComplex(AlgNum re, AlgNum im = {}) : re_(std::move(re)), im_(std::move(im)) {}  // NOLINT
  AlgComplex(long long v) : re_(v) {}                                                 // NOLINT

  static AlgComplex i() { return {AlgNum(0), AlgNum(1)}; }

  const AlgNum& re() const { return re_; }
  const AlgNum& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  AlgComplex conj() const { return {re_, -im_}; }
  AlgNum norm() const { return re_ * re_ + im_ * im_; }
  AlgComplex inv() const;

  AlgComplex operator-() const { return {-re_, -im_}; }
  AlgComplex& operator+=(const AlgComplex& o);
  AlgComplex& operator-=(const AlgComplex& o);
  AlgComplex& operator*=(const AlgComplex& o);
  AlgComplex& operator/=(const AlgComplex& o) { return *this *= o.inv(); }

  friend AlgComplex operator+(AlgComplex a, const AlgComplex& b) { return a += b; }
  friend AlgComplex operator-(AlgComplex a, const AlgComplex& b) { return a -= b; }
  friend AlgComplex operator*(AlgComplex a, const AlgComplex& b) { return a *= b; }
  friend AlgComplex operator/(AlgComplex a, const AlgComplex& b) { return a /= b; }
  friend bool operator==(const AlgComplex&, const AlgComplex&) = default;

  std::complex<long double> to_complex() const { return {re_.to_long_double(), im_.to_long_double()}; }
  std::string to_string() const;

 private:
  AlgNum re_, im_;
};

/// e^{i k pi / 12}, exact for every integer k.
AlgComplex exp_i_pi_12(int k);

}  // namespace symdisc::exact
