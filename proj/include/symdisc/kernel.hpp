#pragma once

// Bergman kernel of the symmetrized polydisc G_n:
//
//   K(pi_n(lambda), pi_n(mu)) = det[(1 - lambda_j conj(mu_k))^{-2}]
//                               / (pi^n prod_{j<k} (lambda_j - lambda_k)(conj(mu_j) - conj(mu_k)))
//
// The second argument is always the conjugated one.

#include <array>
#include <complex>
#include <span>

#include "symdisc/linalg.hpp"
#include "symdisc/symcore.hpp"

namespace symdisc {

/// (1 - lambda_j conj(mu_k))^{-2}; throws Error{SingularEntry} on a vanishing base.
ComplexMatrix cauchy_power_matrix(const PolyPoint& lambda, const PolyPoint& mu);

struct DeltaEval {
  Complex value;
  double scale = 0.0;  // Hadamard bound of the Cauchy-power matrix

  double relative() const { return scale > 0.0 ? std::abs(value) / scale : std::abs(value); }
};

Complex delta_n(const PolyPoint& lambda, const PolyPoint& mu);
DeltaEval delta_scaled(const PolyPoint& lambda, const PolyPoint& mu);

struct KernelEval {
  Complex value;
  Complex numerator;    // Delta_n, or its confluent counterpart
  Complex denominator;  // pi^n times the (confluent) Vandermonde pair
  double scale = 0.0;   // Hadamard bound of the numerator matrix
  bool second_argument_conjugated = true;
};

/// pi^n evaluated in long double.
double pi_power(std::size_t n);

/// Direct evaluation; throws Error{RepeatedCoordinate} if either tuple repeats a
/// coordinate and Error{NotInDomain} outside D^n.
KernelEval kernel_gn(const PolyPoint& lambda, const PolyPoint& mu);

/// Smooth extension at coincident coordinates. Coordinates closer than
/// `cluster_tol` are merged into one node of higher multiplicity; derivative
/// rows (columns for mu) replace the repeated ones.
KernelEval kernel_confluent(const PolyPoint& lambda, const PolyPoint& mu, double cluster_tol = 0.0);

struct StableOptions {
  RootFinderOptions roots{};
  double cluster_tol = 1e-4;
};

/// Kernel at symmetrized points; preimages are recovered with roots_from_sym.
/// Roots within `cluster_tol` form one node, placed at the root of the matching
/// derivative of the defining polynomial.
KernelEval kernel_gn_stable(const SymPoint& s, const SymPoint& t, const StableOptions& opts = {});

/// Data of the dimension-3 closed form with mu_3 = 0.
struct QuadraticData {
  std::array<Complex, 3> nu{};
  Complex a, b, c;
};

QuadraticData abc_coeffs(std::span<const Complex, 3> nu);

/// (a z^2 - b z + 2c) / (pi^3 prod_{j<=3,k<=2} (1 - lambda_j conj(mu_k))^2)
/// with z = conj(mu_2)/conj(mu_1) and nu_j = lambda_j conj(mu_1).
Complex kernel_g3_mu3zero(std::span<const Complex, 3> lambda, std::span<const Complex, 2> mu12);

struct BracketCoeffs {
  Complex A, B, C;
};

/// Cubic in z obtained by clearing denominators of the reduced 2x2 determinant:
///   (nu1+nu3-2)(z nu2+z nu3-2)(1-z nu1)^2(1-nu2)^2 - (nu2+nu3-2)(z nu1+z nu3-2)(1-nu1)^2(1-z nu2)^2
/// Coefficients are returned lowest degree first.
std::array<Complex, 4> bracket_polynomial(std::span<const Complex, 3> nu);

/// A, B, C read off the bracket: [z^3] = A, [z^0] = -2C, [z^1] = B + 2C.
BracketCoeffs bracket_coeffs_ABC(std::span<const Complex, 3> nu);

}  // namespace symdisc
