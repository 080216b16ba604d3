#include "cornerdet/limits.hpp"

#include <algorithm>
#include <cmath>

#include "cornerdet/errors.hpp"

namespace cornerdet {

Cplx tame_limit_ratio(const DenseMatrix& s11, const CornerPerturbation& p) {
  const int m0 = p.m0;
  if (s11.rows() != m0 || s11.cols() != m0)
    throw ShapeError("tame_limit_ratio: S11 must be m0 x m0");
  p.check_finite();
  const DenseMatrix s22 = s11.transpose().flip_both();
  DenseMatrix tl = s11 * p.e11;
  DenseMatrix tr = s11 * p.e12;
  DenseMatrix bl = s22 * p.e21;
  DenseMatrix br = s22 * p.e22;
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

Cplx scalar_tame_limit(double g, const DenseMatrix& e) {
  if (!(g > 0.0)) throw DomainError("scalar_tame_limit: G must be positive");
  if (e.rows() != 2 || e.cols() != 2)
    throw ShapeError("scalar_tame_limit: E must be 2x2");
  return (1.0 + e(0, 0) / g) * (1.0 + e(1, 1) / g) - e(0, 1) * e(1, 0) / (g * g);
}

std::vector<Cplx> hermitian_first_column_limit(const SymbolSpec& s, int m) {
  if (m < 1) throw ShapeError("hermitian_first_column_limit: m must be >= 1");
  if (!s.is_hermitian())
    throw DomainError("hermitian_first_column_limit: symbol must be Hermitian");
  if (s.kind() == SymbolKind::PureFH) {
    // Block case of the closed-form corner limit: c_j = binom(alpha+j-2, j-1)
    // with G = 1.
    const double alpha = s.fh().delta.real();
    std::vector<Cplx> c(m);
    c[0] = 1.0;
    for (int j = 1; j < m; ++j)
      c[j] = c[j - 1] * (alpha + double(j) - 1.0) / double(j);
    return c;
  }
  if (s.kind() == SymbolKind::HermitianFH)
    for (const auto& sing : s.hfh().singularities)
      if (std::abs(sing.alpha) >= 0.5)
        throw DomainError(
            "hermitian_first_column_limit: exponents must lie in (-1/2, 1/2)");
  std::vector<Cplx> g = analytic_inverse_coeffs(s, m);
  const double gm = geometric_mean(s);
  for (Cplx& v : g) v /= gm;
  return g;
}

DenseMatrix s11_limit_matrix(const std::vector<Cplx>& c) {
  const int m0 = int(c.size());
  if (m0 < 1) throw ShapeError("s11_limit_matrix: need at least one entry");
  double peak = 0.0;
  for (const Cplx& v : c) peak = std::max(peak, std::abs(v));
  if (std::abs(c[0]) <= 1e-12 * peak || peak == 0.0)
    throw FormulaError("s11_limit_matrix: degenerate leading entry");
  DenseMatrix s(m0, m0);
  for (int j = 1; j <= m0; ++j)
    for (int k = 1; k <= m0; ++k) {
      Cplx acc = 0.0;
      for (int i = 1; i <= std::min(j, k); ++i)
        acc += c[j - i] * std::conj(c[k - i]);
      s(j - 1, k - 1) = acc / c[0];
    }
  return s;
}

Cplx hermitian_limit_ratio(const SymbolSpec& s, const CornerPerturbation& p) {
  return tame_limit_ratio(s11_limit_matrix(hermitian_first_column_limit(s, p.m0)),
                          p);
}

LimitRatioReport limit_ratio_report(const SymbolSpec& s,
                                    const CornerPerturbation& p,
                                    const std::vector<int>& n_list) {
  // An empty list is allowed: the report then carries the limit alone.
  for (size_t i = 0; i < n_list.size(); ++i) {
    if (n_list[i] < 2 * p.m0)
      throw ShapeError("limit_ratio_report: each n must be >= 2 m0");
    if (i > 0 && n_list[i] <= n_list[i - 1])
      throw ShapeError("limit_ratio_report: n list must be strictly increasing");
  }

  LimitRatioReport rep;
  if (s.is_hermitian()) {
    rep.limit_value = hermitian_limit_ratio(s, p);
  } else if (s.kind() == SymbolKind::Laurent && p.m0 == 1) {
    DenseMatrix e(2, 2);
    e(0, 0) = p.e11(0, 0);
    e(0, 1) = p.e12(0, 0);
    e(1, 0) = p.e21(0, 0);
    e(1, 1) = p.e22(0, 0);
    rep.limit_value = scalar_tame_limit(geometric_mean(s), e);
  } else {
    throw UnsupportedSymbolError(
        "limit_ratio_report: no limit formula for this symbol/corner pair");
  }

  for (int n : n_list) {
    Cplx ratio = perturbed_det_ratio_exact(s, p, n);
    rep.samples.emplace_back(n, ratio);
    rep.residuals.emplace_back(n, std::abs(ratio - rep.limit_value));
  }
  rep.monotone_decreasing = true;
  for (size_t i = 1; i < rep.residuals.size(); ++i)
    if (rep.residuals[i].second >
        rep.residuals[i - 1].second * (1.0 + 1e-12) + 1e-15)
      rep.monotone_decreasing = false;
  return rep;
}

}  // namespace cornerdet
