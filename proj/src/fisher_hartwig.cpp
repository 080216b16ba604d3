#include "cornerdet/fisher_hartwig.hpp"

#include <cmath>
#include <vector>

#include "cornerdet/errors.hpp"
#include "cornerdet/kernels.hpp"

namespace cornerdet {

namespace {

bool is_nonneg_integer(Cplx z) {
  return is_real(z) && z.real() > -0.5 &&
         std::abs(z.real() - std::round(z.real())) <= 1e-12;
}

// (xi_{-delta})_k = Gamma(k+delta)/(Gamma(delta) Gamma(k+1)) for k = 0..m,
// by the product recurrence; exact zeros appear for nonnegative-integer
// delta, so 1/Gamma(0) degeneracies never form.
std::vector<Cplx> reciprocal_sequence(Cplx delta, int m) {
  std::vector<Cplx> v(m + 1);
  v[0] = 1.0;
  for (int k = 1; k <= m; ++k) v[k] = v[k - 1] * (delta + double(k - 1)) / double(k);
  return v;
}

// mu_k(alpha) = Gamma(k+alpha)/(Gamma(1+alpha) Gamma(k)) for k = 1..n.
std::vector<Cplx> mu_sequence(Cplx alpha, int n) {
  std::vector<Cplx> v(n + 1);
  v[1] = 1.0;
  for (int k = 1; k < n; ++k) v[k + 1] = v[k] * (double(k) + alpha) / double(k);
  return v;
}

Cplx pow_n(double n, Cplx e) { return std::exp(e * std::log(n)); }

// log of the Barnes value G(1+k) = (k-1)! (k-2)! ... 1! for integer k >= 0.
double log_barnes_integer(int k) {
  double acc = 0.0;
  for (int j = 1; j < k; ++j) acc += std::lgamma(double(j) + 1.0);
  return acc;
}

}  // namespace

FHParams::FHParams(Cplx delta, Cplx gamma) : delta(delta), gamma(gamma) {
  if (delta.real() <= -1.0 || gamma.real() <= -1.0 ||
      (delta + gamma).real() <= -1.0)
    throw DomainError(
        "FH parameters need Re delta > -1, Re gamma > -1, Re(delta+gamma) > -1");
}

Cplx AsymptoticEntry::eval(double n) const {
  return leading * pow_n(n, order_exponent) * (1.0 + correction / (2.0 * n));
}

Cplx fh_exact_det(const FHParams& p, int n) {
  if (n < 1) throw ShapeError("fh_exact_det: n must be >= 1");
  Cplx acc = 0.0;
  for (int j = 1; j <= n; ++j) {
    Cplx dj(double(j), 0.0);
    acc += log_gamma(dj) + log_gamma(dj + p.delta + p.gamma) -
           log_gamma(dj + p.delta) - log_gamma(dj + p.gamma);
  }
  Cplx det = std::exp(acc);
  if (!std::isfinite(det.real()) || !std::isfinite(det.imag()))
    throw NumericError("fh_exact_det: non-finite result");
  return det;
}

Cplx fh_asymptotic_constant(const FHParams& p) {
  if (is_nonneg_integer(p.delta) && is_nonneg_integer(p.gamma)) {
    int d = int(std::round(p.delta.real()));
    int g = int(std::round(p.gamma.real()));
    return std::exp(log_barnes_integer(d) + log_barnes_integer(g) -
                    log_barnes_integer(d + g));
  }
  // det T_N / N^{delta gamma} = C (1 + c/N + O(1/N^2)); one Richardson step
  // cancels the 1/N term.
  const int n1 = 2048;
  Cplx r1 = fh_exact_det(p, n1) / pow_n(double(n1), p.delta * p.gamma);
  Cplx r2 = fh_exact_det(p, 2 * n1) / pow_n(double(2 * n1), p.delta * p.gamma);
  return 2.0 * r2 - r1;
}

Cplx fh_asymptotic_det(const FHParams& p, double n) {
  if (n <= 0.0) throw ShapeError("fh_asymptotic_det: n must be positive");
  return fh_asymptotic_constant(p) * pow_n(n, p.delta * p.gamma);
}

DenseMatrix duduchava_roch_inverse(const FHParams& p, int n) {
  if (n < 1) throw ShapeError("duduchava_roch_inverse: n must be >= 1");
  const Cplx scale = gamma_ratio(1.0 + p.delta, 1.0 + p.delta + p.gamma) *
                     std::exp(log_gamma(1.0 + p.gamma));
  std::vector<Cplx> xi = reciprocal_sequence(p.delta, n - 1);
  std::vector<Cplx> eta = reciprocal_sequence(p.gamma, n - 1);
  std::vector<Cplx> mu_d = mu_sequence(p.delta, n);
  std::vector<Cplx> mu_g = mu_sequence(p.gamma, n);
  std::vector<Cplx> mu_dg = mu_sequence(p.delta + p.gamma, n);
  // Upper factor with the middle diagonal folded in, times the lower factor.
  DenseMatrix u(n, n), l(n, n);
  for (int j = 1; j <= n; ++j)
    for (int m = 1; m <= n; ++m) {
      u(j - 1, m - 1) = m >= j ? xi[m - j] / mu_dg[m] : 0.0;
      l(j - 1, m - 1) = j >= m ? eta[j - m] : 0.0;
    }
  DenseMatrix prod(n, n);
  kernels::matmul(u.data(), l.data(), prod.data(), n, n, n);
  DenseMatrix inv(n, n);
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k)
      inv(j - 1, k - 1) = scale * mu_g[j] * prod(j - 1, k - 1) * mu_d[k];
  return inv;
}

Cplx fh_last_col_entry(const FHParams& p, int j, int n) {
  if (j < 1 || j > n) throw ShapeError("fh_last_col_entry: need 1 <= j <= n");
  // Grouped as Gamma(j+gamma)/Gamma(j) * (xi_{-delta})_{n-j} *
  // Gamma(n+delta)/Gamma(n+delta+gamma); the middle factor absorbs
  // 1/Gamma(delta) and is an exact 0 for integer delta <= 0 cases.
  Cplx head = gamma_ratio(double(j) + p.gamma, double(j));
  Cplx mid = 1.0;
  for (int i = 1; i <= n - j; ++i) mid *= (p.delta + double(i - 1)) / double(i);
  Cplx tail = gamma_ratio(double(n) + p.delta, double(n) + p.delta + p.gamma);
  return head * mid * tail;
}

Cplx fh_first_col_entry(const FHParams& p, int j, int n) {
  return fh_last_col_entry(FHParams(p.gamma, p.delta), n - j + 1, n);
}

AsymptoticEntry fh_entry_asymptotic(const FHParams& p, int j, EntrySide side) {
  AsymptoticEntry e;
  const Cplx d = p.delta, g = p.gamma;
  const Cplx sig = (d + g) * (d + g - 1.0);
  if (side == EntrySide::Top) {
    if (j < 1) throw ShapeError("fh_entry_asymptotic: top needs j >= 1");
    Cplx dj(double(j), 0.0);
    e.leading = is_nonpositive_integer(d)
                    ? Cplx(0.0)
                    : std::exp(log_gamma(dj + g) - log_gamma(d) - log_gamma(dj));
    e.order_exponent = d - g - 1.0;
    e.correction =
        (d - dj) * (d - dj - 1.0) + d * (d - 1.0) - sig - dj * (dj - 1.0);
  } else {
    if (j < 0) throw ShapeError("fh_entry_asymptotic: bottom needs j >= 0");
    Cplx dj(double(j), 0.0);
    e.leading = reciprocal_sequence(d, j)[j];
    e.order_exponent = 0.0;
    e.correction =
        (g - dj) * (g - dj - 1.0) + d * (d - 1.0) - sig - (dj + 1.0) * dj;
  }
  return e;
}

Cplx gamma_ratio_asymptotic(Cplx alpha, double n) {
  if (n < 1.0) throw ShapeError("gamma_ratio_asymptotic: n must be >= 1");
  return pow_n(n, alpha) * (1.0 + alpha * (alpha - 1.0) / (2.0 * n));
}

Cplx fh_scalar_corner_ratio(const FHParams& p, const DenseMatrix& e, int n) {
  if (e.rows() != 2 || e.cols() != 2)
    throw ShapeError("fh_scalar_corner_ratio: E must be 2x2");
  if (n < 2) throw ShapeError("fh_scalar_corner_ratio: n must be >= 2");
  const Cplx c11 = fh_first_col_entry(p, 1, n);
  const Cplx c1n = fh_last_col_entry(p, 1, n);
  const Cplx cn1 = fh_first_col_entry(p, n, n);
  const Cplx cnn = fh_last_col_entry(p, n, n);
  const Cplx tl = 1.0 + c11 * e(0, 0) + c1n * e(1, 0);
  const Cplx tr = c11 * e(0, 1) + c1n * e(1, 1);
  const Cplx bl = cn1 * e(0, 0) + cnn * e(1, 0);
  const Cplx br = 1.0 + cn1 * e(0, 1) + cnn * e(1, 1);
  return tl * br - tr * bl;
}

Cplx cor33_expansion(double alpha, const DenseMatrix& e, double n) {
  if (e.rows() != 2 || e.cols() != 2)
    throw ShapeError("cor33_expansion: E must be 2x2");
  if (alpha <= -0.5) throw DomainError("cor33_expansion: alpha must exceed -1/2");
  const Cplx det_ipe =
      (1.0 + e(0, 0)) * (1.0 + e(1, 1)) - e(0, 1) * e(1, 0);
  const Cplx det_e = e(0, 0) * e(1, 1) - e(0, 1) * e(1, 0);
  return det_ipe + (alpha / n) * (e(0, 1) + e(1, 0) -
                                  alpha * (e(0, 0) + e(1, 1)) -
                                  2.0 * alpha * det_e);
}

double example34_closed_det(int alpha, int n, bool perturbed) {
  if (perturbed && n < 2)
    throw ShapeError("example34_closed_det: perturbed form needs n >= 2");
  if (n < 1) throw ShapeError("example34_closed_det: n must be >= 1");
  const double m = double(n);
  switch (alpha) {
    case 1:
      return perturbed ? 4.0 : m + 1.0;
    case 2:
      return perturbed ? std::pow(m + 1.0, 3)
                       : (m + 1.0) * (m + 2.0) * (m + 2.0) * (m + 3.0) / 12.0;
    case 3: {
      if (!perturbed)
        return (m + 1.0) * std::pow(m + 2.0, 2) * std::pow(m + 3.0, 3) *
               std::pow(m + 4.0, 2) * (m + 5.0) / 8640.0;
      const double s = (m + 2.0) * (m + 2.0);
      return (m + 1.0) * s * (m + 3.0) * (s + 1.0) * (s + 2.0) / 360.0;
    }
    default:
      throw DomainError("example34_closed_det: alpha must be 1, 2 or 3");
  }
}

}  // namespace cornerdet
