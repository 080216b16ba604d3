#include "cornerdet/dense.hpp"

#include <cmath>
#include <utility>

#include "cornerdet/errors.hpp"
#include "cornerdet/kernels.hpp"

namespace cornerdet {

DenseMatrix::DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) throw ShapeError("DenseMatrix: dimensions must be >= 1");
  a_.assign(size_t(rows) * cols, Cplx(0.0));
}

DenseMatrix DenseMatrix::identity(int n) {
  DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

DenseMatrix DenseMatrix::flip_both() const {
  DenseMatrix f(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      f(i, j) = (*this)(rows_ - 1 - i, cols_ - 1 - j);
  return f;
}

bool DenseMatrix::all_finite() const {
  for (const Cplx& v : a_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw ShapeError("matrix sum: shape mismatch");
  DenseMatrix c(a.rows_, a.cols_);
  for (size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] + b.a_[i];
  return c;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols_ != b.rows_) throw ShapeError("matrix product: shape mismatch");
  DenseMatrix c(a.rows_, b.cols_);
  kernels::matmul(a.data(), b.data(), c.data(), a.rows_, a.cols_, b.cols_);
  return c;
}

LuDecomposition::LuDecomposition(DenseMatrix m) : lu_(std::move(m)) {
  if (!lu_.is_square()) throw ShapeError("LU: matrix must be square");
  if (!lu_.all_finite()) throw DomainError("LU: non-finite entry");
  piv_.resize(lu_.rows());
  sign_ = kernels::lu_factor(lu_.data(), lu_.rows(), piv_.data(), &singular_col_);
}

Cplx LuDecomposition::determinant() const {
  if (singular()) return 0.0;
  const int n = lu_.rows();
  double log_mag = 0.0;
  Cplx phase = double(sign_);
  for (int k = 0; k < n; ++k) {
    Cplx d = lu_(k, k);
    double m = std::abs(d);
    log_mag += std::log(m);
    phase *= d / m;
  }
  return phase * std::exp(log_mag);
}

std::vector<Cplx> LuDecomposition::solve(const std::vector<Cplx>& rhs) const {
  const int n = lu_.rows();
  if (int(rhs.size()) != n) throw ShapeError("solve: rhs length mismatch");
  if (singular())
    throw SingularMatrixError("solve: singular pivot", singular_col_);
  std::vector<Cplx> x = rhs;
  // Row swaps were applied to whole rows during factorization, so the stored
  // multipliers live in the final row order; permute the right-hand side
  // completely before forward substitution.
  for (int k = 0; k < n; ++k)
    if (piv_[k] != k) std::swap(x[k], x[piv_[k]]);
  for (int k = 0; k < n; ++k)
    for (int i = k + 1; i < n; ++i) x[i] -= lu_(i, k) * x[k];
  for (int i = n - 1; i >= 0; --i) {
    for (int j = i + 1; j < n; ++j) x[i] -= lu_(i, j) * x[j];
    x[i] /= lu_(i, i);
  }
  return x;
}

DenseMatrix LuDecomposition::inverse() const {
  const int n = lu_.rows();
  if (singular())
    throw SingularMatrixError("inverse: singular pivot", singular_col_);
  DenseMatrix inv(n, n);
  std::vector<Cplx> e(n, 0.0);
  for (int j = 0; j < n; ++j) {
    e[j] = 1.0;
    std::vector<Cplx> col = solve(e);
    e[j] = 0.0;
    for (int i = 0; i < n; ++i) inv(i, j) = col[i];
  }
  return inv;
}

Cplx determinant(const DenseMatrix& m) { return LuDecomposition(m).determinant(); }

std::vector<Cplx> solve(const DenseMatrix& m, const std::vector<Cplx>& rhs) {
  return LuDecomposition(m).solve(rhs);
}

DenseMatrix inverse(const DenseMatrix& m) { return LuDecomposition(m).inverse(); }

}  // namespace cornerdet
