#include "symdisc/linalg.hpp"

#include <cmath>
#include <utility>

#include "symdisc/error.hpp"

namespace symdisc {

std::complex<double> determinant(ComplexMatrix m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  using LC = std::complex<long double>;
  const std::size_t n = m.rows();
  // Eliminate in long double so the result does not depend on row order at double precision.
  std::vector<LC> a(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a[r * n + c] = LC(m(r, c).real(), m(r, c).imag());
  LC det{1.0L, 0.0L};
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    long double best = std::abs(a[col * n + col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const long double v = std::abs(a[r * n + col]);
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (best == 0.0L) return {0.0, 0.0};
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a[pivot * n + c], a[col * n + c]);
      det = -det;
    }
    const LC p = a[col * n + col];
    det *= p;
    for (std::size_t r = col + 1; r < n; ++r) {
      const LC factor = a[r * n + col] / p;
      if (factor == LC{0.0L, 0.0L}) continue;
      for (std::size_t c = col + 1; c < n; ++c) a[r * n + c] -= factor * a[col * n + c];
    }
  }
  return {static_cast<double>(det.real()), static_cast<double>(det.imag())};
}

double hadamard_bound(const ComplexMatrix& m) {
  double prod = 1.0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    double sq = 0.0;
    for (std::size_t c = 0; c < m.cols(); ++c) sq += std::norm(m(r, c));
    prod *= std::sqrt(sq);
  }
  return prod;
}

double max_row_norm(const ComplexMatrix& m) {
  double best = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    double sum = 0.0;
    for (std::size_t c = 0; c < m.cols(); ++c) sum += std::abs(m(r, c));
    best = std::max(best, sum);
  }
  return best;
}

}  // namespace symdisc
