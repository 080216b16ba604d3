#include "cornerdet/toeplitz.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cornerdet/errors.hpp"

namespace cornerdet {

namespace {

constexpr int kFullInverseCutoff = 64;

// Entry (j,k), 1-based, of the reconstruction
//   x1 * c_jk = sum_{m=1..min(j,k)} x_{j-m+1} y_{n-k+m} - y_{j-m} x_{n+1-k+m}
// with the conventions y_0 = 0 and x_{n+1} = 0.
Cplx gst_entry(const std::vector<Cplx>& x, const std::vector<Cplx>& y, int j,
               int k) {
  const int n = int(x.size());
  Cplx acc = 0.0;
  for (int m = 1; m <= std::min(j, k); ++m) {
    acc += x[j - m] * y[n - k + m - 1];
    if (j - m >= 1 && n + 1 - k + m <= n) acc -= y[j - m - 1] * x[n - k + m];
  }
  return acc / x[0];
}

void check_block(const DenseMatrix& b, int m0, const char* name) {
  if (b.rows() != m0 || b.cols() != m0)
    throw ShapeError(std::string(name) + ": block must be m0 x m0");
  if (!b.all_finite())
    throw DomainError(std::string(name) + ": non-finite entry");
}

}  // namespace

CornerPerturbation::CornerPerturbation(int m0)
    : m0(m0), e11(std::max(m0, 1), std::max(m0, 1)), e12(e11), e21(e11), e22(e11) {
  if (m0 < 1) throw ShapeError("CornerPerturbation: m0 must be >= 1");
}

bool CornerPerturbation::is_zero() const {
  for (const DenseMatrix* b : {&e11, &e12, &e21, &e22})
    for (int i = 0; i < m0; ++i)
      for (int j = 0; j < m0; ++j)
        if ((*b)(i, j) != Cplx(0.0)) return false;
  return true;
}

void CornerPerturbation::check_finite() const {
  check_block(e11, m0, "E11");
  check_block(e12, m0, "E12");
  check_block(e21, m0, "E21");
  check_block(e22, m0, "E22");
}

InverseCorners::InverseCorners(int m0)
    : m0(m0), s11(std::max(m0, 1), std::max(m0, 1)), s12(s11), s21(s11), s22(s11) {
  if (m0 < 1) throw ShapeError("InverseCorners: m0 must be >= 1");
}

DenseMatrix build_toeplitz(const SymbolSpec& s, int n) {
  if (n < 1) throw ShapeError("build_toeplitz: n must be >= 1");
  std::vector<Cplx> c = fourier_coefficients(s, -(n - 1), n - 1);
  DenseMatrix t(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) t(j, k) = c[j - k + n - 1];
  return t;
}

DenseMatrix build_perturbation(const CornerPerturbation& p, int n) {
  p.check_finite();
  if (n < 2 * p.m0)
    throw ShapeError("build_perturbation: corner blocks need n >= 2 m0");
  const int m0 = p.m0;
  DenseMatrix e(n, n);
  for (int i = 0; i < m0; ++i)
    for (int j = 0; j < m0; ++j) {
      e(i, j) = p.e11(i, j);
      e(i, n - m0 + j) = p.e12(i, j);
      e(n - m0 + i, j) = p.e21(i, j);
      e(n - m0 + i, n - m0 + j) = p.e22(i, j);
    }
  return e;
}

DenseMatrix gst_inverse(const std::vector<Cplx>& x, const std::vector<Cplx>& y) {
  const int n = int(x.size());
  if (n < 1 || y.size() != x.size())
    throw ShapeError("gst_inverse: columns must share a positive length");
  double xmax = 0.0;
  for (const Cplx& v : x) xmax = std::max(xmax, std::abs(v));
  if (std::abs(x[0]) <= 1e-12 * xmax)
    throw FormulaError("gst_inverse: leading entry x1 vanishes");
  DenseMatrix inv(n, n);
  // Row 1 and column 1 come straight from the sums; the rest follows the
  // O(1) diagonal recurrence c_{j+1,k+1} = c_{jk} + (x_{j+1} y_{n-k} -
  // y_j x_{n+1-k})/x_1.
  for (int k = 1; k <= n; ++k) inv(0, k - 1) = y[n - k];
  for (int j = 2; j <= n; ++j) inv(j - 1, 0) = x[j - 1] * y[n - 1] / x[0];
  for (int j = 1; j < n; ++j)
    for (int k = 1; k < n; ++k)
      inv(j, k) = inv(j - 1, k - 1) +
                  (x[j] * y[n - k - 1] - y[j - 1] * x[n - k]) / x[0];
  return inv;
}

InverseCorners inverse_corners(const SymbolSpec& s, int n, int m0) {
  if (m0 < 1 || n < 2 * m0)
    throw ShapeError("inverse_corners: need m0 >= 1 and n >= 2 m0");
  InverseCorners sc(m0);
  auto slice = [&](const DenseMatrix& inv) {
    for (int i = 0; i < m0; ++i)
      for (int j = 0; j < m0; ++j) {
        sc.s11(i, j) = inv(i, j);
        sc.s12(i, j) = inv(i, n - m0 + j);
        sc.s21(i, j) = inv(n - m0 + i, j);
        sc.s22(i, j) = inv(n - m0 + i, n - m0 + j);
      }
  };
  DenseMatrix t = build_toeplitz(s, n);
  LuDecomposition lu(std::move(t));
  if (lu.singular())
    throw SingularMatrixError("inverse_corners: T_n is singular",
                              lu.singular_index());
  if (n <= kFullInverseCutoff) {
    slice(lu.inverse());
    return sc;
  }
  std::vector<Cplx> e(n, 0.0);
  e[0] = 1.0;
  std::vector<Cplx> x = lu.solve(e);
  e[0] = 0.0;
  e[n - 1] = 1.0;
  std::vector<Cplx> y = lu.solve(e);
  double xmax = 0.0;
  for (const Cplx& v : x) xmax = std::max(xmax, std::abs(v));
  if (std::abs(x[0]) <= 1e-12 * xmax) {
    slice(lu.inverse());
    return sc;
  }
  for (int i = 1; i <= m0; ++i)
    for (int j = 1; j <= m0; ++j) {
      sc.s11(i - 1, j - 1) = gst_entry(x, y, i, j);
      sc.s12(i - 1, j - 1) = gst_entry(x, y, i, n - m0 + j);
      sc.s21(i - 1, j - 1) = gst_entry(x, y, n - m0 + i, j);
      sc.s22(i - 1, j - 1) = gst_entry(x, y, n - m0 + i, n - m0 + j);
    }
  return sc;
}

PredictorData levinson_first_column(const SymbolSpec& s, int n) {
  if (n < 1) throw ShapeError("levinson_first_column: n must be >= 1");
  if (!s.is_hermitian())
    throw DomainError("levinson_first_column: symbol must be Hermitian");
  std::vector<Cplx> neg = fourier_coefficients(s, -n, 0);  // a_{-n}..a_0
  auto a = [&](int k) { return neg[k + n]; };               // k in [-n, 0]
  if (!(a(0).real() > 0.0) || std::abs(a(0).imag()) > 1e-12 * (1.0 + std::abs(a(0))))
    throw DefinitenessError("levinson: a_0 is not a positive real", -1);

  std::vector<Cplx> phi{1.0};  // ascending coefficients, monic
  double norm2 = a(0).real();
  std::vector<Cplx> alphas;
  alphas.reserve(n > 1 ? n - 1 : 0);
  for (int k = 0; k + 1 < n; ++k) {
    Cplx eps = 0.0;
    for (int j = 0; j <= k; ++j) eps += phi[j] * a(-(j + 1));
    Cplx alpha_conj = eps / norm2;
    if (std::abs(alpha_conj) >= 1.0)
      throw DefinitenessError(
          "levinson: lost positive definiteness at step " + std::to_string(k), k);
    std::vector<Cplx> next(k + 2);
    next[0] = -alpha_conj * std::conj(phi[k]);
    for (int j = 1; j <= k; ++j)
      next[j] = phi[j - 1] - alpha_conj * std::conj(phi[k - j]);
    next[k + 1] = phi[k];
    phi = std::move(next);
    norm2 *= 1.0 - std::norm(alpha_conj);
    alphas.push_back(std::conj(alpha_conj));
  }

  PredictorData out;
  out.n = n;
  out.first_column.resize(n);
  for (int j = 1; j <= n; ++j)
    out.first_column[j - 1] = std::conj(phi[n - j]) / norm2;
  out.monic_coeffs = std::move(phi);
  out.kappa = 1.0 / std::sqrt(norm2);
  out.verblunsky = std::move(alphas);
  return out;
}

Cplx corner_reduction_det(const InverseCorners& sc, const CornerPerturbation& p) {
  if (sc.m0 != p.m0)
    throw ShapeError("corner_reduction_det: block sizes disagree");
  const int m0 = p.m0;
  DenseMatrix tl = sc.s11 * p.e11 + sc.s12 * p.e21;
  DenseMatrix tr = sc.s11 * p.e12 + sc.s12 * p.e22;
  DenseMatrix bl = sc.s21 * p.e11 + sc.s22 * p.e21;
  DenseMatrix br = sc.s21 * p.e12 + sc.s22 * p.e22;
  DenseMatrix red(2 * m0, 2 * m0);
  for (int i = 0; i < m0; ++i)
    for (int j = 0; j < m0; ++j) {
      red(i, j) = tl(i, j) + (i == j ? 1.0 : 0.0);
      red(i, m0 + j) = tr(i, j);
      red(m0 + i, j) = bl(i, j);
      red(m0 + i, m0 + j) = br(i, j) + (i == j ? 1.0 : 0.0);
    }
  return determinant(red);
}

Cplx perturbed_det_ratio_exact(const SymbolSpec& s, const CornerPerturbation& p,
                               int n) {
  p.check_finite();
  if (n < 2 * p.m0)
    throw ShapeError("perturbed_det_ratio_exact: need n >= 2 m0");
  return corner_reduction_det(inverse_corners(s, n, p.m0), p);
}

}  // namespace cornerdet
