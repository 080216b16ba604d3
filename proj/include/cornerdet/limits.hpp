#ifndef CORNERDET_LIMITS_HPP
#define CORNERDET_LIMITS_HPP

#include <utility>
#include <vector>

#include "cornerdet/dense.hpp"
#include "cornerdet/symbols.hpp"
#include "cornerdet/toeplitz.hpp"
#include "cornerdet/types.hpp"

namespace cornerdet {

struct LimitRatioReport {
  Cplx limit_value;
  std::vector<std::pair<int, Cplx>> samples;      // (n, ratio), ascending n
  std::vector<std::pair<int, double>> residuals;  // (n, |ratio - limit|)
  bool monotone_decreasing = false;
};

// Limit of det(T_n + E_n)/det T_n for symbols whose inverse corners settle:
// det[(I 0; 0 I) + (S11 0; 0 W S11^T W) E] with W the flip matrix.
Cplx tame_limit_ratio(const DenseMatrix& s11, const CornerPerturbation& p);

// Scalar specialization: det(I + E/G) for a 2x2 corner scalar set E.
// Vanishes exactly when G is an eigenvalue of -E.
Cplx scalar_tame_limit(double g, const DenseMatrix& e);

// lim c_j^{(n)} = (1/a_+)_{j-1} / G(a) for j = 1..m. Accepts Hermitian
// Fisher-Hartwig symbols with exponents in (-1/2, 1/2), positive Hermitian
// Laurent symbols, and the pure-FH block case delta = gamma real (where the
// sequence is the binomial one of the closed-form corner limit).
std::vector<Cplx> hermitian_first_column_limit(const SymbolSpec& s, int m);

// Limit corner block S11 = (1/c_1) L(c) U(conj c).
DenseMatrix s11_limit_matrix(const std::vector<Cplx>& c);

Cplx hermitian_limit_ratio(const SymbolSpec& s, const CornerPerturbation& p);

// Finite-n ratios against the applicable limit, with a monotone-residual
// trend flag. No convergence rate is asserted.
LimitRatioReport limit_ratio_report(const SymbolSpec& s,
                                    const CornerPerturbation& p,
                                    const std::vector<int>& n_list);

}  // namespace cornerdet

#endif
