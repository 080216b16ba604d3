#ifndef CORNERDET_LATTICE_HPP
#define CORNERDET_LATTICE_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace cornerdet {

using BigInt = boost::multiprecision::cpp_int;

class IntegerMatrix {
 public:
  IntegerMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  BigInt& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const BigInt& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  IntegerMatrix transpose_times_self() const;  // B^T B
  IntegerMatrix without_row(int r) const;

 private:
  int rows_, cols_;
  std::vector<BigInt> a_;
};

// (n+1) x n basis: tridiagonal (-2 diagonal, 1 off-diagonal) on the top n
// rows, last row (1, 0, ..., 0, 1). n = 1 degenerates to the single column
// (-2; 1); the cube law below starts at n = 2.
IntegerMatrix build_basis(int n);

// Exact determinant by fraction-free (Bareiss) elimination.
BigInt bareiss_determinant(IntegerMatrix m);

// det(B_n^T B_n); equals (n+1)^3 for n >= 2.
BigInt gram_determinant(int n);

struct CauchyBinetResult {
  BigInt sum;                      // sum of squared maximal minors
  std::vector<BigInt> minor_abs;   // |det C_j|, row j deleted, each n+1
};

CauchyBinetResult cauchy_binet_check(int n);

}  // namespace cornerdet

#endif
