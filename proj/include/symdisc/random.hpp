#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

namespace symdisc {

/// Uniform point of the disc |x| < radius.
inline std::complex<double> random_disc_point(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double r = radius * std::sqrt(unit(rng));
  return std::polar(r, 2.0 * std::numbers::pi * unit(rng));
}

inline std::vector<std::complex<double>> random_disc_points(std::mt19937_64& rng, std::size_t n, double radius) {
  std::vector<std::complex<double>> out(n);
  for (auto& c : out) c = random_disc_point(rng, radius);
  return out;
}

}  // namespace symdisc
