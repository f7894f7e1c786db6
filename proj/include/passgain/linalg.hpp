#pragma once

#include <cstddef>
#include <vector>

namespace passgain {

// Dense square matrix, row-major.
class Matrix {
public:
  Matrix() = default;
  explicit Matrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}

  static Matrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  Matrix transposed() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);

private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

double frobenius_distance(const Matrix& a, const Matrix& b);

struct SymmetricEigen {
  std::vector<double> values;  // ascending
  Matrix vectors;              // column k pairs with values[k]
  int sweeps = 0;
};

// Cyclic Jacobi rotations until the off-diagonal Frobenius norm is <= off_tol.
// Throws NumericError if the input is not symmetric or max_sweeps runs out.
SymmetricEigen jacobi_eigen(const Matrix& m, double off_tol = 1e-12, int max_sweeps = 100);

}  // namespace passgain
