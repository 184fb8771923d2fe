#pragma once

// Exact checks of the dimension-3 closed form: the reduction of the 3x3
// determinant to a cubic bracket in z, and the identities at the base point
// nu0 = (e^{i pi/6}, e^{i pi/3}, e^{-i pi/6}).

#include <array>
#include <string_view>

#include "symdisc/exact/alg.hpp"
#include "symdisc/exact/exact_poly.hpp"
#include "symdisc/exact/report.hpp"

namespace symdisc::exact {

/// (a, b, c) from the elementary symmetric values (p1, p2, p3) of nu.
template <typename T>
std::array<T, 3> abc_from_symmetric(const T& p1, const T& p2, const T& p3) {
  const T two(2), three(3);
  T a = p2 * (two - p1) + p3 * (two * p1 - three);
  T b = (p1 - two) * (p2 - two * p1 + three) + three * (p3 - p1 + two);
  T c = p2 - two * p1 + three;
  return {a, b, c};
}

template <typename T>
std::array<T, 3> elementary_symmetric3(const T& x, const T& y, const T& z) {
  return {x + y + z, x * y + x * z + y * z, x * y * z};
}

std::array<AlgComplex, 3> base_point_exact();

enum class Fault { None, PCoeff };
Fault fault_from_string(std::string_view s);

/// Coefficients (x^0, x^1, x^2) of the real quadratic
///   p(x) = (3 sqrt3 - 5) x^2 + (3 sqrt6 - 6 sqrt2) x + 4 sqrt3 - 6.
/// Fault::PCoeff flips the sign of the x^1 coefficient.
std::array<AlgNum, 3> claimed_real_quadratic(Fault fault = Fault::None);

/// The polynomials taking part in the determinant reduction, all in (nu1, nu2, nu3, z).
struct ReductionPolys {
  ExactPoly bracket;          // the cubic in z
  ExactPoly det_cleared;      // 3x3 determinant with row j scaled by (1-nu_j)^2 (1-z nu_j)^2
  ExactPoly det_rhs;          // (nu1-nu3)(nu2-nu3) z * bracket
  ExactPoly A_claimed;        // stated z^3 coefficient
  ExactPoly minus2C_claimed;  // stated z^0 coefficient
  ExactPoly BplusC2_claimed;  // stated z^1 coefficient (B + 2C)
  ExactPoly a, b, c;          // closed-form coefficients of the quadratic
  ExactPoly A, B, C;          // read off the bracket
  ExactPoly factored;         // (z - 1)(A z^2 - B z + 2C)
};

ReductionPolys build_reduction_polys();

/// Exact polynomial identities behind the dimension-3 closed form.
VerificationReport verify_reduction_identities();

/// Exact identities and sign claims at the base point.
VerificationReport verify_base_point_identities(Fault fault = Fault::None,
                                                unsigned sign_bits = default_sign_precision());

}  // namespace symdisc::exact
