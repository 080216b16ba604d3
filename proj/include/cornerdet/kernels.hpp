#ifndef CORNERDET_KERNELS_HPP
#define CORNERDET_KERNELS_HPP

#include <vector>

#include "cornerdet/types.hpp"

// Dense compute kernels. Each has a serial reference implementation and an
// OpenMP-parallel one; the unqualified name dispatches on problem size and
// the global switch. The parallel variants split work so every output value
// is produced by the same arithmetic chain as in the serial code, so the two
// agree bit for bit (asserted in tests, relied on for reproducible output).

namespace cornerdet::kernels {

void set_parallel(bool on);
bool parallel_enabled();

// Row-major n x n LU factorization in place with partial pivoting.
// piv[k] records the row swapped into position k. Returns the permutation
// sign (+1/-1). A pivot below ~1e-300 marks the matrix singular: the first
// such column index is written to *singular_col (-1 otherwise) and the
// column's elimination step is skipped.
int lu_factor_serial(Cplx* a, int n, int* piv, int* singular_col);
int lu_factor_parallel(Cplx* a, int n, int* piv, int* singular_col);
int lu_factor(Cplx* a, int n, int* piv, int* singular_col);

// c = a * b with a: n x k, b: k x m, c: n x m, all row-major.
void matmul_serial(const Cplx* a, const Cplx* b, Cplx* c, int n, int k, int m);
void matmul_parallel(const Cplx* a, const Cplx* b, Cplx* c, int n, int k, int m);
void matmul(const Cplx* a, const Cplx* b, Cplx* c, int n, int k, int m);

// Truncated convolution of two sequences indexed k = -half..half (stored with
// offset half): w_k = sum_m u_m v_{k-m} over indices within range.
std::vector<Cplx> convolve_serial(const std::vector<Cplx>& u,
                                  const std::vector<Cplx>& v, int half);
std::vector<Cplx> convolve_parallel(const std::vector<Cplx>& u,
                                    const std::vector<Cplx>& v, int half);
std::vector<Cplx> convolve(const std::vector<Cplx>& u,
                           const std::vector<Cplx>& v, int half);

}  // namespace cornerdet::kernels

#endif
