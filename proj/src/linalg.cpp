#include "hqmm/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace hqmm {

Matrix operator*(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  double d = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) d = std::max(d, std::abs(a(i, j) - b(i, j)));
  return d;
}

std::vector<double> left_apply(std::span<const double> v, const Matrix& a) {
  std::vector<double> out(a.cols(), 0.0);
  for (int i = 0; i < a.rows(); ++i) {
    const double vi = v[i];
    if (vi == 0.0) continue;
    for (int j = 0; j < a.cols(); ++j) out[j] += vi * a(i, j);
  }
  return out;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  CMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const auto aik = a(i, k);
      if (aik == std::complex<double>{}) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
  CMatrix c = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

CMatrix adjoint(const CMatrix& a) {
  CMatrix t(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) t(j, i) = std::conj(a(i, j));
  return t;
}

std::complex<double> trace(const CMatrix& a) {
  std::complex<double> t = 0.0;
  for (int i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  double d = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) d = std::max(d, std::abs(a(i, j) - b(i, j)));
  return d;
}

void scale(CMatrix& a, std::complex<double> factor) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) a(i, j) *= factor;
}

namespace {

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

double frobenius_norm(const Matrix& a) {
  double s = 0.0;
  for (double x : a.flat()) s += x * x;
  return std::sqrt(s);
}

}  // namespace

SymmetricEigen jacobi_eigen(Matrix a, double off_tol, int max_sweeps) {
  const int n = a.rows();
  Matrix v = Matrix::identity(n);
  const double stop = off_tol * std::max(1.0, frobenius_norm(a));

  int sweep = 0;
  while (off_diagonal_norm(a) > stop) {
    if (++sweep > max_sweeps) {
      std::ostringstream msg;
      msg << "jacobi_eigen: no convergence after " << max_sweeps
          << " sweeps, off-diagonal residual " << off_diagonal_norm(a);
      throw std::runtime_error(msg.str());
    }
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) <= 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // A <- J^T A J on rows/columns p and q
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i) > a(j, j); });

  SymmetricEigen out;
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  for (int k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]);
    for (int r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

std::vector<double> symmetric_eigenvalues(const Matrix& a) {
  return jacobi_eigen(a).values;
}

std::vector<double> hermitian_eigenvalues(const CMatrix& h) {
  const int d = h.rows();
  Matrix m(2 * d, 2 * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      m(i, j) = h(i, j).real();
      m(i, j + d) = -h(i, j).imag();
      m(i + d, j) = h(i, j).imag();
      m(i + d, j + d) = h(i, j).real();
    }
  const std::vector<double> doubled = symmetric_eigenvalues(m);
  std::vector<double> out(d);
  for (int k = 0; k < d; ++k) out[k] = doubled[2 * k];  // each value appears twice
  return out;
}

namespace {

// One converged fixed point of v <- v (A + I)/2, starting from `v`.
std::vector<double> iterate_to_fixed_point(const Matrix& a, std::vector<double> v,
                                           const StationaryOptions& opts) {
  const int n = a.rows();
  for (long it = 0; it < opts.max_iterations; ++it) {
    std::vector<double> w = left_apply(v, a);
    double residual = 0.0;
    for (int j = 0; j < n; ++j) residual = std::max(residual, std::abs(w[j] - v[j]));
    for (int j = 0; j < n; ++j) w[j] = 0.5 * (w[j] + v[j]);
    double total = std::accumulate(w.begin(), w.end(), 0.0);
    for (double& x : w) x /= total;
    v = std::move(w);
    if (residual <= opts.residual_tol) return v;
  }
  throw std::runtime_error(
      "stationary distribution: power iteration did not converge; the chain may "
      "be reducible -- supply the initial distribution explicitly");
}

}  // namespace

std::vector<double> stationary_left_fixed_point(const Matrix& a,
                                                const StationaryOptions& opts) {
  const int n = a.rows();
  if (n == 1) return {1.0};

  std::vector<double> uniform(n, 1.0 / n);
  std::vector<double> mu = iterate_to_fixed_point(a, uniform, opts);

  // Uniqueness: every basis start must land on the same fixed point.
  for (int i = 0; i < n; ++i) {
    std::vector<double> e(n, 0.0);
    e[i] = 1.0;
    const std::vector<double> w = iterate_to_fixed_point(a, std::move(e), opts);
    for (int j = 0; j < n; ++j)
      if (std::abs(w[j] - mu[j]) > opts.agreement_tol)
        throw std::runtime_error(
            "stationary distribution is not unique (reducible chain) -- supply the "
            "initial distribution explicitly");
  }
  return mu;
}

}  // namespace hqmm
