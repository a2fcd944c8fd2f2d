// eigen.hpp
// Small dense real symmetric matrices and their spectral decomposition.

#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace rindler::fock {

// Square, row-major, real. Blocks of the density matrices in this library
// are at most 4x4, so no effort is spent on cache blocking.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t size() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  double trace() const;
  double max_abs() const;
  // max_ij |M_ij - M_ji|
  double asymmetry() const;
  Matrix scaled(double factor) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

struct EigenDecomposition {
  std::vector<double> values;  // descending
  Matrix vectors;              // column k is the eigenvector of values[k]
};

// Full spectral decomposition of a symmetric matrix. 1x1 and 2x2 inputs are
// solved in closed form (a single exact Jacobi rotation); larger inputs use
// cyclic Jacobi sweeps until the off-diagonal Frobenius norm drops to 1e-14
// of the matrix norm. Eigenvalues are sorted descending; ties keep the order
// produced by the sweep. Throws ContractViolation if the input is not
// symmetric to within 1e-14 (scaled by max(1, max |M_ij|)).
EigenDecomposition hermitian_eigen(const Matrix& m);

std::vector<double> hermitian_eigenvalues(const Matrix& m);

}  // namespace rindler::fock
