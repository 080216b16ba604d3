#ifndef CORNERDET_FISHER_HARTWIG_HPP
#define CORNERDET_FISHER_HARTWIG_HPP

#include "cornerdet/dense.hpp"
#include "cornerdet/gamma.hpp"
#include "cornerdet/types.hpp"

namespace cornerdet {

// Parameters of (1-1/t)^delta (1-t)^gamma with the integrability constraints
// Re delta > -1, Re gamma > -1, Re(delta+gamma) > -1.
struct FHParams {
  FHParams(Cplx delta, Cplx gamma);
  Cplx delta, gamma;
};

// One inverse-entry asymptotic: value(n) = leading * n^order_exponent *
// (1 + correction/(2n)).
struct AsymptoticEntry {
  Cplx leading;
  Cplx correction;
  Cplx order_exponent;
  Cplx eval(double n) const;
};

enum class EntrySide { Top, Bottom };

// det T_n as the telescoped product prod_{j=1..n} of
// Gamma(j) Gamma(j+delta+gamma) / (Gamma(j+delta) Gamma(j+gamma)).
Cplx fh_exact_det(const FHParams& p, int n);

// The constant in det T_n ~ C n^{delta gamma}: an exact factorial product for
// nonnegative-integer parameters, otherwise the Richardson-extrapolated ratio
// fh_exact_det(N)/N^{delta gamma} at large N.
Cplx fh_asymptotic_constant(const FHParams& p);
Cplx fh_asymptotic_det(const FHParams& p, double n);

// Full T_n^{-1} as scalar * M_gamma U M_{delta+gamma}^{-1} L M_delta with
// triangular Toeplitz factors built from the reciprocal-symbol sequences.
DenseMatrix duduchava_roch_inverse(const FHParams& p, int n);

// Exact inverse entries: last column c_{jn} and, through the parameter-swap
// identity, first column c_{j1}. 1-based j in [1, n].
Cplx fh_last_col_entry(const FHParams& p, int j, int n);
Cplx fh_first_col_entry(const FHParams& p, int j, int n);

// Large-n expansion of c_{jn} (Top, fixed j >= 1) or c_{n-j,n} (Bottom,
// fixed j >= 0).
AsymptoticEntry fh_entry_asymptotic(const FHParams& p, int j, EntrySide side);

// Two-term Stirling approximation of Gamma(n+alpha)/Gamma(n).
Cplx gamma_ratio_asymptotic(Cplx alpha, double n);

// det(T_n + E_n)/det T_n for a scalar (m0 = 1) perturbation E, evaluated
// from the four exact corner entries.
Cplx fh_scalar_corner_ratio(const FHParams& p, const DenseMatrix& e, int n);

// Two-term expansion of that ratio for delta = gamma = alpha real:
// |I + E| + (alpha/n)(E12 + E21 - alpha(E11 + E22) - 2 alpha det E).
Cplx cor33_expansion(double alpha, const DenseMatrix& e, double n);

// Exact rational determinants for alpha in {1, 2, 3}, optionally with the
// antidiagonal unit-corner perturbation.
double example34_closed_det(int alpha, int n, bool perturbed);

}  // namespace cornerdet

#endif
