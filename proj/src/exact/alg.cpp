#include "symdisc/exact/alg.hpp"

#include <cstdlib>
#include <sstream>

#include "symdisc/error.hpp"

namespace symdisc::exact {

AlgNum& AlgNum::operator+=(const AlgNum& o) {
  q0_ += o.q0_;
  q2_ += o.q2_;
  q3_ += o.q3_;
  q6_ += o.q6_;
  return *this;
}

AlgNum& AlgNum::operator-=(const AlgNum& o) {
  q0_ -= o.q0_;
  q2_ -= o.q2_;
  q3_ -= o.q3_;
  q6_ -= o.q6_;
  return *this;
}

AlgNum& AlgNum::operator*=(const AlgNum& o) {
  const Rational &a0 = q0_, &a2 = q2_, &a3 = q3_, &a6 = q6_;
  const Rational &b0 = o.q0_, &b2 = o.q2_, &b3 = o.q3_, &b6 = o.q6_;
  // sqrt2^2 = 2, sqrt3^2 = 3, sqrt6^2 = 6, sqrt2 sqrt3 = sqrt6, sqrt2 sqrt6 = 2 sqrt3, sqrt3 sqrt6 = 3 sqrt2
  Rational c0 = a0 * b0 + 2 * a2 * b2 + 3 * a3 * b3 + 6 * a6 * b6;
  Rational c2 = a0 * b2 + a2 * b0 + 3 * (a3 * b6 + a6 * b3);
  Rational c3 = a0 * b3 + a3 * b0 + 2 * (a2 * b6 + a6 * b2);
  Rational c6 = a0 * b6 + a6 * b0 + a2 * b3 + a3 * b2;
  q0_ = std::move(c0);
  q2_ = std::move(c2);
  q3_ = std::move(c3);
  q6_ = std::move(c6);
  return *this;
}

AlgNum& AlgNum::operator/=(const AlgNum& o) { return *this *= o.inv(); }

AlgNum AlgNum::inv() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero in Q(sqrt2, sqrt3)");
  // x * flip3(x) lies in Q(sqrt2); multiply again by its sqrt2-conjugate to reach Q.
  const AlgNum half = *this * flip_sqrt3();
  const AlgNum full = half * half.flip_sqrt2();
  const Rational denom = full.q0_;
  AlgNum out = flip_sqrt3() * half.flip_sqrt2();
  out.q0_ /= denom;
  out.q2_ /= denom;
  out.q3_ /= denom;
  out.q6_ /= denom;
  return out;
}

long double AlgNum::to_long_double() const {
  return static_cast<long double>(q0_) + static_cast<long double>(q2_) * std::sqrt(2.0L) +
         static_cast<long double>(q3_) * std::sqrt(3.0L) + static_cast<long double>(q6_) * std::sqrt(6.0L);
}

std::string AlgNum::to_string() const {
  std::ostringstream out;
  bool first = true;
  auto term = [&](const Rational& q, const char* unit) {
    if (q == 0) return;
    if (!first) out << (q < 0 ? " - " : " + ");
    else if (q < 0) out << "-";
    const Rational mag = q < 0 ? Rational(-q) : q;
    if (*unit == '\0') out << mag;
    else if (mag == 1) out << unit;
    else out << mag << "*" << unit;
    first = false;
  };
  term(q0_, "");
  term(q2_, "sqrt2");
  term(q3_, "sqrt3");
  term(q6_, "sqrt6");
  if (first) out << "0";
  return out.str();
}

unsigned default_sign_precision() {
  unsigned bits = 64;
  if (const char* env = std::getenv("SYMDISC_PRECISION")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > static_cast<long>(bits)) bits = static_cast<unsigned>(v);
  }
  return bits;
}

namespace {

struct Interval {
  Rational lo, hi;
};

// [floor(sqrt(d) 2^bits), floor(...) + 1] / 2^bits
Interval sqrt_interval(unsigned d, unsigned bits) {
  const Integer scale = Integer(1) << bits;
  const Integer s = boost::multiprecision::sqrt(Integer(d) * scale * scale);
  return {Rational(s, scale), Rational(s + 1, scale)};
}

void add_term(Interval& acc, const Rational& q, const Interval& root) {
  if (q >= 0) {
    acc.lo += q * root.lo;
    acc.hi += q * root.hi;
  } else {
    acc.lo += q * root.hi;
    acc.hi += q * root.lo;
  }
}

}  // namespace

SignResult alg_sign(const AlgNum& x, unsigned start_bits) {
  if (x.is_zero()) return {Sign::Zero, 0};
  if (x.is_rational()) return {x.q0() > 0 ? Sign::Positive : Sign::Negative, 0};
  for (unsigned bits = std::max(1u, start_bits);; bits *= 2) {
    Interval acc{x.q0(), x.q0()};
    add_term(acc, x.q2(), sqrt_interval(2, bits));
    add_term(acc, x.q3(), sqrt_interval(3, bits));
    add_term(acc, x.q6(), sqrt_interval(6, bits));
    if (acc.lo > 0) return {Sign::Positive, bits};
    if (acc.hi < 0) return {Sign::Negative, bits};
    // A nonzero element of the field has a positive separation from zero, so this terminates.
    if (bits > (1u << 24)) throw Error(ErrorKind::SolverFailure, "sign precision exhausted");
  }
}

AlgComplex& AlgComplex::operator+=(const AlgComplex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

AlgComplex& AlgComplex::operator-=(const AlgComplex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

AlgComplex& AlgComplex::operator*=(const AlgComplex& o) {
  AlgNum re = re_ * o.re_ - im_ * o.im_;
  AlgNum im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

AlgComplex AlgComplex::inv() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero in Q(sqrt2, sqrt3)(i)");
  const AlgNum n_inv = norm().inv();
  return {re_ * n_inv, -im_ * n_inv};
}

std::string AlgComplex::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  if (re_.is_zero()) return "i*(" + im_.to_string() + ")";
  return "(" + re_.to_string() + ") + i*(" + im_.to_string() + ")";
}

AlgComplex exp_i_pi_12(int k) {
  // cos(j pi / 12) for j = 0..6
  const Rational h(1, 2), q(1, 4);
  const std::array<AlgNum, 7> cosines{
      AlgNum(1),                      // 0
      AlgNum(0, q, 0, q),             // (sqrt6 + sqrt2)/4
      AlgNum(0, 0, h, 0),             // sqrt3/2
      AlgNum(0, h, 0, 0),             // sqrt2/2
      AlgNum(h),                      // 1/2
      AlgNum(0, -q, 0, q),            // (sqrt6 - sqrt2)/4
      AlgNum(0),                      // 0
  };
  auto cos_of = [&](int j) {
    j = ((j % 24) + 24) % 24;
    if (j > 12) j = 24 - j;          // cos is even
    if (j <= 6) return cosines[static_cast<std::size_t>(j)];
    return -cosines[static_cast<std::size_t>(12 - j)];  // cos(pi - x) = -cos x
  };
  // sin(x) = cos(pi/2 - x)
  return {cos_of(k), cos_of(6 - k)};
}

}  // namespace symdisc::exact
