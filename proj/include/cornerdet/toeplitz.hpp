#ifndef CORNERDET_TOEPLITZ_HPP
#define CORNERDET_TOEPLITZ_HPP

#include <vector>

#include "cornerdet/dense.hpp"
#include "cornerdet/symbols.hpp"
#include "cornerdet/types.hpp"

namespace cornerdet {

// Four m0 x m0 blocks placed in the corners of an n x n matrix (n >= 2 m0),
// zeros elsewhere: E11 top-left, E12 top-right, E21 bottom-left, E22
// bottom-right.
struct CornerPerturbation {
  explicit CornerPerturbation(int m0);

  int m0;
  DenseMatrix e11, e12, e21, e22;

  bool is_zero() const;
  void check_finite() const;
};

// The four m0 x m0 corner blocks of an inverse, natural (uncentered) indexing.
struct InverseCorners {
  explicit InverseCorners(int m0);

  int m0;
  DenseMatrix s11, s12, s21, s22;
};

// Output of the Szego/Levinson recursion at order n: the first column of
// T_n^{-1}, the monic predictor polynomial of degree n-1 (ascending
// coefficients, leading 1), kappa = 1/||Phi_{n-1}|| and the recursion
// coefficients alpha_0..alpha_{n-2}.
struct PredictorData {
  int n = 0;
  std::vector<Cplx> first_column;
  std::vector<Cplx> monic_coeffs;
  double kappa = 0.0;
  std::vector<Cplx> verblunsky;
};

// T_n(a) with entry (j,k) = a_{j-k}.
DenseMatrix build_toeplitz(const SymbolSpec& s, int n);

DenseMatrix build_perturbation(const CornerPerturbation& p, int n);

// Reconstructs the full inverse from its first column x and last column y.
// Requires |x_1| > 1e-12 ||x||_inf; otherwise the 1/x_1 in the formula is
// meaningless and a FormulaError is thrown.
DenseMatrix gst_inverse(const std::vector<Cplx>& x, const std::vector<Cplx>& y);

// Corner blocks of T_n(a)^{-1}. Small n uses the full LU inverse; larger n
// solves for the first and last columns once and evaluates only the corner
// entries of the reconstruction (O(m0^2 n) after the solves), falling back
// to the full inverse when the reconstruction is inapplicable.
InverseCorners inverse_corners(const SymbolSpec& s, int n, int m0);

// Szego recursion for Hermitian symbols with positive definite sections.
// Throws DefinitenessError naming the step where |alpha_j| >= 1.
PredictorData levinson_first_column(const SymbolSpec& s, int n);

// det(T_n + E_n)/det T_n reduced to a 2m0 x 2m0 determinant built from the
// inverse corners; the n x n perturbed matrix is never formed.
Cplx corner_reduction_det(const InverseCorners& sc, const CornerPerturbation& p);
Cplx perturbed_det_ratio_exact(const SymbolSpec& s, const CornerPerturbation& p,
                               int n);

}  // namespace cornerdet

#endif
