#pragma once

#include <complex>
#include <span>
#include <vector>

#include "hqmm/common.hpp"

namespace hqmm {

// Dense row-major double matrix. Sizes here are tiny (states x states or
// states*symbols squared), so everything is kept simple and value-typed.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double value = 0.0)
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, value) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  std::span<const double> row(int i) const {
    return {a_.data() + static_cast<std::size_t>(i) * cols_, static_cast<std::size_t>(cols_)};
  }
  std::span<const double> flat() const { return a_; }

  bool operator==(const Matrix&) const = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<double> a_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
double max_abs_diff(const Matrix& a, const Matrix& b);

// row vector * matrix
std::vector<double> left_apply(std::span<const double> v, const Matrix& a);

// Complex dense matrix for the generic quantum-operation path.
class CMatrix {
 public:
  using value_type = std::complex<double>;
  CMatrix() = default;
  CMatrix(int rows, int cols, value_type value = {})
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, value) {}

  static CMatrix identity(int n) {
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  value_type& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  value_type operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<value_type> a_;
};

CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator+(const CMatrix& a, const CMatrix& b);
CMatrix adjoint(const CMatrix& a);
std::complex<double> trace(const CMatrix& a);
double max_abs_diff(const CMatrix& a, const CMatrix& b);
void scale(CMatrix& a, std::complex<double> factor);

struct SymmetricEigen {
  std::vector<double> values;  // descending
  Matrix vectors;              // column k pairs with values[k]
};

// Cyclic Jacobi for real symmetric matrices. Off-diagonal Frobenius norm is
// driven below off_tol * max(1, ||A||_F); throws on non-convergence with the
// residual in the message.
SymmetricEigen jacobi_eigen(Matrix a, double off_tol = 1e-14, int max_sweeps = 100);
std::vector<double> symmetric_eigenvalues(const Matrix& a);

// Hermitian spectrum via the real 2d x 2d embedding [[Re, -Im], [Im, Re]]
// whose spectrum is that of H with every eigenvalue doubled.
std::vector<double> hermitian_eigenvalues(const CMatrix& h);

struct StationaryOptions {
  double residual_tol = kEigTol;
  long max_iterations = 1'000'000;
  double agreement_tol = 1e-9;  // restarted iterates must agree this closely
};

// Left fixed point mu = mu * A of a row-stochastic matrix, by power iteration
// on the half-lazy map (A + I)/2 (same fixed points, converges for periodic
// chains). Restarts from every basis vector to detect non-uniqueness; throws
// std::runtime_error telling the caller to supply mu explicitly.
std::vector<double> stationary_left_fixed_point(const Matrix& a,
                                                const StationaryOptions& opts = {});

}  // namespace hqmm
