#include "rindler/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "rindler/error.hpp"

namespace rindler::fock {

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) : n_(rows.size()) {
  data_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) throw DomainError("Matrix rows must form a square array");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

double Matrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

double Matrix::asymmetry() const {
  double m = 0.0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) m = std::max(m, std::abs((*this)(i, j) - (*this)(j, i)));
  return m;
}

Matrix Matrix::scaled(double factor) const {
  Matrix out = *this;
  for (double& v : out.data_) v *= factor;
  return out;
}

namespace {

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

double frobenius_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

// Annihilates a(p,q) with the rotation of Rutishauser's formulation,
// accumulating the rotation into v.
void rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const std::size_t n = a.size();
  const double theta = 0.5 * (a(q, q) - a(p, p)) / apq;
  double t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
  if (theta < 0.0) t = -t;
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const double tau = s / (1.0 + c);

  a(p, p) -= t * apq;
  a(q, q) += t * apq;
  a(p, q) = a(q, p) = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    if (r != p && r != q) {
      const double arp = a(r, p);
      const double arq = a(r, q);
      a(r, p) = a(p, r) = arp - s * (arq + tau * arp);
      a(r, q) = a(q, r) = arq + s * (arp - tau * arq);
    }
    const double vrp = v(r, p);
    const double vrq = v(r, q);
    v(r, p) = vrp - s * (vrq + tau * vrp);
    v(r, q) = vrq + s * (vrp - tau * vrq);
  }
}

constexpr double kSymmetryTol = 1e-14;
constexpr double kOffDiagonalTol = 1e-14;
constexpr int kMaxSweeps = 100;

}  // namespace

EigenDecomposition hermitian_eigen(const Matrix& m) {
  const std::size_t n = m.size();
  if (m.asymmetry() > kSymmetryTol * std::max(1.0, m.max_abs())) {
    throw ContractViolation("hermitian_eigen: input is not symmetric (max |M - M^T| = " +
                            std::to_string(m.asymmetry()) + ")");
  }

  Matrix a = m;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) a(i, j) = a(j, i) = 0.5 * (m(i, j) + m(j, i));
  Matrix v(n);
  for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;

  if (n == 2) {
    rotate(a, v, 0, 1);
  } else if (n > 2) {
    const double norm = frobenius_norm(a);
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
      if (off_diagonal_norm(a) <= kOffDiagonalTol * norm) break;
      for (std::size_t p = 0; p + 1 < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });

  EigenDecomposition out{std::vector<double>(n), Matrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]);
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const Matrix& m) { return hermitian_eigen(m).values; }

}  // namespace rindler::fock
