#include "symdisc/symcore.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "symdisc/error.hpp"

namespace symdisc {

PolyPoint PolyPoint::in_domain(std::vector<Complex> coords) {
  for (std::size_t j = 0; j < coords.size(); ++j) {
    if (!(std::abs(coords[j]) < 1.0)) {
      throw Error(ErrorKind::NotInDomain,
                  "coordinate " + std::to_string(j) + " has modulus >= 1");
    }
  }
  return PolyPoint(std::move(coords));
}

PolyPoint PolyPoint::raw(std::vector<Complex> coords) { return PolyPoint(std::move(coords)); }

bool PolyPoint::inside_polydisc() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Complex& c) { return std::abs(c) < 1.0; });
}

bool PolyPoint::pairwise_distinct(double tol) const noexcept {
  for (std::size_t j = 0; j < coords_.size(); ++j)
    for (std::size_t k = j + 1; k < coords_.size(); ++k)
      if (std::abs(coords_[j] - coords_[k]) <= tol) return false;
  return true;
}

SymPoint elem_sym(std::span<const Complex> values) {
  // e[k] holds the k-th elementary symmetric polynomial of the values seen so far.
  std::vector<Complex> e(values.size() + 1, Complex{0.0, 0.0});
  e[0] = 1.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t k = i + 1; k >= 1; --k) e[k] += values[i] * e[k - 1];
  }
  return SymPoint(std::vector<Complex>(e.begin() + 1, e.end()));
}

namespace {

using LComplex = std::complex<long double>;

struct HornerResult {
  LComplex value;
  LComplex derivative;
  long double bound;  // sum |c_k| |z|^{n-k}
};

HornerResult horner(const std::vector<LComplex>& c, LComplex z) {
  LComplex p = c[0];
  LComplex dp = 0.0L;
  long double b = std::abs(c[0]);
  const long double az = std::abs(z);
  for (std::size_t k = 1; k < c.size(); ++k) {
    dp = dp * z + p;
    p = p * z + c[k];
    b = b * az + std::abs(c[k]);
  }
  return {p, dp, b};
}

}  // namespace

std::vector<Complex> roots_from_sym(const SymPoint& s, const RootFinderOptions& opts) {
  const std::size_t n = s.size();
  std::vector<Complex> roots;
  roots.reserve(n);

  // Monic coefficients, highest degree first: c[k] = (-1)^k s_k.
  std::vector<LComplex> c(n + 1);
  c[0] = 1.0L;
  for (std::size_t k = 1; k <= n; ++k) {
    LComplex sk(s[k - 1].real(), s[k - 1].imag());
    c[k] = (k % 2 == 0) ? sk : -sk;
  }
  while (c.size() > 1 && c.back() == LComplex(0.0L)) {
    c.pop_back();
    roots.emplace_back(0.0, 0.0);
  }
  const std::size_t deg = c.size() - 1;
  if (deg == 1) {
    roots.emplace_back(static_cast<double>((-c[1]).real()), static_cast<double>((-c[1]).imag()));
  } else if (deg > 1) {
    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<long double> unit(0.0L, 1.0L);
    const long double radius = std::pow(std::abs(c[deg]), 1.0L / static_cast<long double>(deg));
    const long double offset = 0.4L + unit(rng);
    std::vector<LComplex> z(deg);
    for (std::size_t i = 0; i < deg; ++i) {
      long double angle = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(i) /
                              static_cast<long double>(deg) + offset;
      long double r = radius * (1.0L + 0.01L * unit(rng));
      z[i] = std::polar(r, angle);
    }

    constexpr long double eps = std::numeric_limits<long double>::epsilon();
    const long double stop = 4.0L * static_cast<long double>(deg + 1) * eps;
    std::vector<bool> done(deg, false);
    bool all_done = false;
    for (int iter = 0; iter < opts.max_iterations && !all_done; ++iter) {
      all_done = true;
      for (std::size_t i = 0; i < deg; ++i) {
        if (done[i]) continue;
        const HornerResult h = horner(c, z[i]);
        if (std::abs(h.value) <= stop * h.bound) {
          done[i] = true;
          continue;
        }
        all_done = false;
        if (h.derivative == LComplex(0.0L)) {
          z[i] *= LComplex(1.0L + 1e-6L, 1e-6L);
          continue;
        }
        const LComplex newton = h.value / h.derivative;
        LComplex repulsion = 0.0L;
        for (std::size_t j = 0; j < deg; ++j)
          if (j != i) repulsion += 1.0L / (z[i] - z[j]);
        const LComplex step = newton / (1.0L - newton * repulsion);
        z[i] -= step;
        if (std::abs(step) <= eps * std::abs(z[i])) done[i] = true;
      }
    }
    if (!all_done && !std::all_of(done.begin(), done.end(), [](bool d) { return d; })) {
      throw Error(ErrorKind::SolverFailure,
                  "Aberth iteration did not converge within " + std::to_string(opts.max_iterations) +
                      " iterations");
    }
    for (const auto& r : z)
      roots.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
  }

  std::sort(roots.begin(), roots.end(), [](const Complex& a, const Complex& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return roots;
}

Membership classify_gn(const SymPoint& s, const RootFinderOptions& opts) {
  Membership result = Membership::Inside;
  for (const auto& r : roots_from_sym(s, opts)) {
    const double m = std::abs(r);
    if (m >= 1.0 + kMembershipGuard) return Membership::Outside;
    if (m >= 1.0 - kMembershipGuard) result = Membership::BoundaryIndeterminate;
  }
  return result;
}

bool in_gn(const SymPoint& s, const RootFinderOptions& opts) {
  return classify_gn(s, opts) == Membership::Inside;
}

Complex vandermonde(std::span<const Complex> x) {
  Complex v{1.0, 0.0};
  for (std::size_t j = 0; j < x.size(); ++j)
    for (std::size_t k = j + 1; k < x.size(); ++k) v *= x[j] - x[k];
  return v;
}

Complex vandermonde_pair(const PolyPoint& lambda, const PolyPoint& mu) {
  if (lambda.size() != mu.size())
    throw Error(ErrorKind::DimensionMismatch, "lambda and mu differ in dimension");
  Complex v{1.0, 0.0};
  const std::size_t n = lambda.size();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k)
      v *= (lambda[j] - lambda[k]) * (std::conj(mu[j]) - std::conj(mu[k]));
  return v;
}

}  // namespace symdisc
