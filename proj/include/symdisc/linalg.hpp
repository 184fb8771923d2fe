#pragma once

#include <complex>
#include <vector>

namespace symdisc {

/// Dense row-major complex matrix, sized for the n <= 16 determinants used here.
class ComplexMatrix {
 public:
  using value_type = std::complex<double>;

  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, value_type{0.0, 0.0}) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const value_type& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<value_type> data_;
};

/// Determinant by LU factorization with partial pivoting, accumulated in long double.
std::complex<double> determinant(ComplexMatrix m);

/// Product of Euclidean row norms; bounds |det| from above (Hadamard).
double hadamard_bound(const ComplexMatrix& m);

/// Largest absolute row sum.
double max_row_norm(const ComplexMatrix& m);

}  // namespace symdisc
