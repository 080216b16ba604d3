#include "cornerdet/lattice.hpp"

#include "cornerdet/errors.hpp"

namespace cornerdet {

IntegerMatrix::IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) throw ShapeError("integer matrix dimensions must be positive");
  a_.assign(size_t(rows) * cols, BigInt(0));
}

IntegerMatrix IntegerMatrix::transpose_times_self() const {
  IntegerMatrix g(cols_, cols_);
  for (int i = 0; i < cols_; ++i) {
    for (int j = i; j < cols_; ++j) {
      BigInt s = 0;
      for (int r = 0; r < rows_; ++r) s += (*this)(r, i) * (*this)(r, j);
      g(i, j) = s;
      if (j != i) g(j, i) = s;
    }
  }
  return g;
}

IntegerMatrix IntegerMatrix::without_row(int r) const {
  if (r < 0 || r >= rows_ || rows_ < 2) throw ShapeError("row removal out of range");
  IntegerMatrix out(rows_ - 1, cols_);
  int dst = 0;
  for (int i = 0; i < rows_; ++i) {
    if (i == r) continue;
    for (int j = 0; j < cols_; ++j) out(dst, j) = (*this)(i, j);
    ++dst;
  }
  return out;
}

IntegerMatrix build_basis(int n) {
  if (n < 1) throw ShapeError("basis size must be positive");
  IntegerMatrix b(n + 1, n);
  for (int i = 0; i < n; ++i) {
    b(i, i) = -2;
    if (i > 0) b(i, i - 1) = 1;
    if (i + 1 < n) b(i, i + 1) = 1;
  }
  b(n, 0) = 1;
  b(n, n - 1) = 1;  // n = 1 merges both corners into a single 1
  return b;
}

BigInt bareiss_determinant(IntegerMatrix m) {
  if (m.rows() != m.cols()) throw ShapeError("determinant needs a square matrix");
  const int n = m.rows();
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i) {
        if (m(i, k) != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        // Every entry of the updated trailing block is divisible by the
        // previous pivot; '/' is exact here.
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

BigInt gram_determinant(int n) {
  return bareiss_determinant(build_basis(n).transpose_times_self());
}

CauchyBinetResult cauchy_binet_check(int n) {
  const IntegerMatrix b = build_basis(n);
  CauchyBinetResult out;
  out.sum = 0;
  out.minor_abs.reserve(size_t(n) + 1);
  for (int r = 0; r <= n; ++r) {
    BigInt d = bareiss_determinant(b.without_row(r));
    out.sum += d * d;
    out.minor_abs.push_back(d < 0 ? BigInt(-d) : d);
  }
  return out;
}

}  // namespace cornerdet
