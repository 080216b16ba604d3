#ifndef CORNERDET_DENSE_HPP
#define CORNERDET_DENSE_HPP

#include <vector>

#include "cornerdet/types.hpp"

namespace cornerdet {

// Row-major dense complex matrix, 0-based indexing.
class DenseMatrix {
 public:
  DenseMatrix(int rows, int cols);
  static DenseMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Cplx& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Cplx& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  Cplx* data() { return a_.data(); }
  const Cplx* data() const { return a_.data(); }

  DenseMatrix transpose() const;
  // W M W with W the flip permutation (reverses both index orders).
  DenseMatrix flip_both() const;
  bool all_finite() const;

  friend DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);

 private:
  int rows_, cols_;
  std::vector<Cplx> a_;
};

// LU with partial pivoting over the kernels module; factors once, then
// serves determinant / solve / inverse.
class LuDecomposition {
 public:
  explicit LuDecomposition(DenseMatrix m);

  bool singular() const { return singular_col_ >= 0; }
  int singular_index() const { return singular_col_; }

  // Exactly 0 when a pivot collapsed; otherwise the product of pivots
  // accumulated in log-magnitude/phase form to dodge overflow.
  Cplx determinant() const;
  std::vector<Cplx> solve(const std::vector<Cplx>& rhs) const;
  DenseMatrix inverse() const;

 private:
  DenseMatrix lu_;
  std::vector<int> piv_;
  int sign_ = 1;
  int singular_col_ = -1;
};

Cplx determinant(const DenseMatrix& m);
std::vector<Cplx> solve(const DenseMatrix& m, const std::vector<Cplx>& rhs);
DenseMatrix inverse(const DenseMatrix& m);

}  // namespace cornerdet

#endif
