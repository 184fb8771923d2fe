#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <string>

#include "symdisc/exact/alg.hpp"

namespace symdisc::exact {

enum class Var : std::size_t { Nu1 = 0, Nu2 = 1, Nu3 = 2, Z = 3 };

inline constexpr std::size_t kNumVars = 4;
inline constexpr unsigned kMaxTotalDegree = 12;

/// Sparse polynomial in (nu1, nu2, nu3, z) over AlgComplex. Zero coefficients
/// are never stored, so equality is coefficientwise.
class ExactPoly {
 public:
  using Monomial = std::array<std::uint8_t, kNumVars>;

  ExactPoly() = default;
  ExactPoly(const AlgComplex& c);  // NOLINT(google-explicit-constructor)
  ExactPoly(long long c) : ExactPoly(AlgComplex(c)) {}  // NOLINT

  static ExactPoly variable(Var v);

  const std::map<Monomial, AlgComplex>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  unsigned total_degree() const;
  unsigned degree_in(Var v) const;

  /// Coefficient of v^k as a polynomial in the remaining variables.
  ExactPoly coefficient(Var v, unsigned k) const;

  /// Substitutes `to` for every occurrence of `from`.
  ExactPoly rename(Var from, Var to) const;

  std::complex<long double> evaluate(const std::array<std::complex<long double>, kNumVars>& at) const;

  ExactPoly operator-() const;
  ExactPoly& operator+=(const ExactPoly& o);
  ExactPoly& operator-=(const ExactPoly& o);
  ExactPoly& operator*=(const ExactPoly& o);

  friend ExactPoly operator+(ExactPoly a, const ExactPoly& b) { return a += b; }
  friend ExactPoly operator-(ExactPoly a, const ExactPoly& b) { return a -= b; }
  friend ExactPoly operator*(const ExactPoly& a, const ExactPoly& b);
  friend bool operator==(const ExactPoly&, const ExactPoly&) = default;

  ExactPoly pow(unsigned k) const;

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const AlgComplex& c);
  std::map<Monomial, AlgComplex> terms_;
};

}  // namespace symdisc::exact
