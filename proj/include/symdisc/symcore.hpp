#pragma once

// Elementary symmetric polynomials, the symmetrization map and its inverse.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace symdisc {

using Complex = std::complex<double>;

/// A point of C^n given by its pre-symmetrization coordinates.
///
/// `in_domain` enforces |coord| < 1 for every coordinate; `raw` skips the check
/// and is used for algebraic identities at arbitrary complex tuples.
class PolyPoint {
 public:
  PolyPoint() = default;

  static PolyPoint in_domain(std::vector<Complex> coords);
  static PolyPoint raw(std::vector<Complex> coords);

  std::size_t size() const noexcept { return coords_.size(); }
  const Complex& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Complex> coords() const noexcept { return coords_; }

  bool inside_polydisc() const noexcept;
  bool pairwise_distinct(double tol = 0.0) const noexcept;

  friend bool operator==(const PolyPoint&, const PolyPoint&) = default;

 private:
  explicit PolyPoint(std::vector<Complex> coords) : coords_(std::move(coords)) {}
  std::vector<Complex> coords_;
};

/// A point (s_1, ..., s_n) of C^n read as symmetrized coordinates.
class SymPoint {
 public:
  SymPoint() = default;
  explicit SymPoint(std::vector<Complex> coords) : coords_(std::move(coords)) {}

  std::size_t size() const noexcept { return coords_.size(); }
  const Complex& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Complex> coords() const noexcept { return coords_; }

  friend bool operator==(const SymPoint&, const SymPoint&) = default;

 private:
  std::vector<Complex> coords_;
};

SymPoint elem_sym(std::span<const Complex> values);
inline SymPoint elem_sym(const PolyPoint& p) { return elem_sym(p.coords()); }

struct RootFinderOptions {
  std::uint64_t seed = 0;
  int max_iterations = 2000;
};

/// All n roots of x^n - s_1 x^{n-1} + s_2 x^{n-2} - ... + (-1)^n s_n by
/// Aberth-Ehrlich iteration. Throws Error{SolverFailure} past the iteration cap.
std::vector<Complex> roots_from_sym(const SymPoint& s, const RootFinderOptions& opts = {});

enum class Membership { Inside, Outside, BoundaryIndeterminate };

/// Strict threshold on root moduli; roots within this distance of the unit
/// circle are reported as indeterminate.
inline constexpr double kMembershipGuard = 1e-12;

Membership classify_gn(const SymPoint& s, const RootFinderOptions& opts = {});
bool in_gn(const SymPoint& s, const RootFinderOptions& opts = {});

/// prod_{j<k} (lambda_j - lambda_k) * (conj(mu_j) - conj(mu_k)).
Complex vandermonde_pair(const PolyPoint& lambda, const PolyPoint& mu);

/// prod_{j<k} (x_j - x_k).
Complex vandermonde(std::span<const Complex> x);

}  // namespace symdisc
