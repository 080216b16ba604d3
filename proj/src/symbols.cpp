#include "cornerdet/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <utility>

#include "cornerdet/errors.hpp"
#include "cornerdet/gamma.hpp"
#include "cornerdet/kernels.hpp"

namespace cornerdet {

namespace {

constexpr double kUnitTol = 1e-12;

int next_pow2(int n) {
  int p = 1;
  while (p < n) p *= 2;
  return p;
}

// In-place forward DFT, radix-2: X_j = sum_m x_m exp(-2 pi i j m / N).
void fft_inplace(std::vector<Cplx>& x) {
  const int n = int(x.size());
  for (int i = 1, j = 0; i < n; ++i) {
    int bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(x[i], x[j]);
  }
  for (int len = 2; len <= n; len <<= 1) {
    const double ang = -2.0 * kPi / len;
    const Cplx wl = std::polar(1.0, ang);
    for (int i = 0; i < n; i += len) {
      Cplx w = 1.0;
      for (int j = 0; j < len / 2; ++j) {
        Cplx u = x[i + j];
        Cplx v = x[i + j + len / 2] * w;
        x[i + j] = u + v;
        x[i + j + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

// Coefficients of (1-1/t)^delta (1-t)^gamma for |k| <= half, stored with
// offset half. Walks outward from a_0 by the Gamma functional equation.
std::vector<Cplx> pure_fh_bulk(Cplx delta, Cplx gamma, int half) {
  std::vector<Cplx> a(2 * half + 1);
  Cplx a0 = std::exp(log_gamma(1.0 + delta + gamma) - log_gamma(1.0 + delta) -
                     log_gamma(1.0 + gamma));
  a[half] = a0;
  for (int k = 0; k < half; ++k)
    a[half + k + 1] = a[half + k] * (double(k) - gamma) / (delta + double(k) + 1.0);
  for (int k = 0; k < half; ++k)
    a[half - k - 1] = a[half - k] * (double(k) - delta) / (gamma + double(k) + 1.0);
  for (const Cplx& v : a)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw NumericError("pure FH coefficients: non-finite value");
  return a;
}

std::vector<Cplx> laurent_bulk(const LaurentPolynomial& p, int k_min, int k_max) {
  std::vector<Cplx> out(k_max - k_min + 1, Cplx(0.0));
  for (const auto& [k, c] : p.coeffs)
    if (k >= k_min && k <= k_max) out[k - k_min] = c;
  return out;
}

std::vector<Cplx> hermitian_fh_bulk(const HermitianFisherHartwig& h, int k_min,
                                    int k_max) {
  const int n_req = std::max({std::abs(k_min), std::abs(k_max), 4}) + 1;
  // The factor sequences decay like |k|^{-1-2 alpha}, so cutting the
  // convolution at the requested range alone leaves a visible tail (about
  // half^{-2.4} for a pair of alpha = 0.3 factors). The floor keeps short
  // requests at coefficient-level accuracy; long requests scale with n.
  int half = std::max(16 * n_req, 2048);
  if (!h.smooth.coeffs.empty())
    half = std::max(half,
                    std::max(std::abs(h.smooth.min_index()),
                             std::abs(h.smooth.max_index())) + 16 * n_req);
  std::vector<Cplx> acc = laurent_bulk(h.smooth, -half, half);
  for (const auto& s : h.singularities) {
    std::vector<Cplx> factor = pure_fh_bulk(s.alpha, s.alpha, half);
    const double phi = std::arg(s.point);
    for (int k = -half; k <= half; ++k)
      factor[k + half] *= std::polar(1.0, -double(k) * phi);
    acc = kernels::convolve(acc, factor, half);
  }
  std::vector<Cplx> out(k_max - k_min + 1);
  for (int k = k_min; k <= k_max; ++k) out[k - k_min] = acc[k + half];
  return out;
}

std::vector<Cplx> circle_samples(const LaurentPolynomial& p, int n_grid) {
  std::vector<Cplx> v(n_grid);
  for (int m = 0; m < n_grid; ++m)
    v[m] = p.eval(std::polar(1.0, 2.0 * kPi * m / n_grid));
  return v;
}

// Fourier coefficients of the sampled values: c_k for |k| <= K from one DFT.
LogCoefficients dft_log_window(std::vector<Cplx> samples, int K) {
  const int n = int(samples.size());
  fft_inplace(samples);
  LogCoefficients lc;
  lc.half_order = K;
  lc.c.assign(2 * K + 1, Cplx(0.0));
  for (int k = -K; k <= K; ++k) {
    int idx = k >= 0 ? k : n + k;
    lc.c[k + K] = samples[idx] / double(n);
  }
  return lc;
}

// log samples of a positive real-valued symbol; grid positivity failure is a
// domain error per the smooth-part contract.
std::vector<Cplx> positive_log_samples(const LaurentPolynomial& p, int n_grid,
                                       const char* what) {
  std::vector<Cplx> v = circle_samples(p, n_grid);
  for (Cplx& s : v) {
    if (s.real() <= 0.0 || std::abs(s.imag()) > 1e-9 * std::max(1.0, std::abs(s.real())))
      throw DomainError(std::string(what) + ": not strictly positive on sampling grid");
    s = std::log(s);
  }
  return v;
}

// Continuous-branch log samples for a zero-free winding-zero symbol.
std::vector<Cplx> continuous_log_samples(const LaurentPolynomial& p, int n_grid) {
  std::vector<Cplx> v = circle_samples(p, n_grid);
  double peak = 0.0;
  for (const Cplx& s : v) peak = std::max(peak, std::abs(s));
  if (peak == 0.0) throw UnsupportedSymbolError("symbol vanishes identically");
  for (const Cplx& s : v)
    if (std::abs(s) <= 1e-13 * peak)
      throw UnsupportedSymbolError("symbol has zeros on the circle");
  std::vector<Cplx> l(n_grid);
  l[0] = std::log(v[0]);
  for (int m = 1; m < n_grid; ++m)
    l[m] = l[m - 1] + std::log(v[m] / v[m - 1]);
  Cplx closure = l[n_grid - 1] + std::log(v[0] / v[n_grid - 1]) - l[0];
  if (std::abs(closure.imag()) > kPi)
    throw UnsupportedSymbolError("symbol has nonzero winding number");
  return l;
}

}  // namespace

Cplx LaurentPolynomial::coefficient(int k) const {
  auto it = coeffs.find(k);
  return it == coeffs.end() ? Cplx(0.0) : it->second;
}

Cplx LaurentPolynomial::eval(Cplx t) const {
  Cplx s = 0.0;
  for (const auto& [k, c] : coeffs) s += c * std::pow(t, k);
  return s;
}

int LaurentPolynomial::min_index() const {
  return coeffs.empty() ? 0 : coeffs.begin()->first;
}

int LaurentPolynomial::max_index() const {
  return coeffs.empty() ? 0 : coeffs.rbegin()->first;
}

bool LaurentPolynomial::is_hermitian(double tol) const {
  for (const auto& [k, c] : coeffs) {
    Cplx mirror = coefficient(-k);
    if (std::abs(mirror - std::conj(c)) > tol * std::max(1.0, std::abs(c)))
      return false;
  }
  return true;
}

SymbolSpec::SymbolSpec(
    std::variant<LaurentPolynomial, PureFisherHartwig, HermitianFisherHartwig> v)
    : v_(std::move(v)) {
  validate();
}

SymbolSpec SymbolSpec::laurent(std::map<int, Cplx> coeffs) {
  return SymbolSpec(LaurentPolynomial{std::move(coeffs)});
}

SymbolSpec SymbolSpec::pure_fh(Cplx delta, Cplx gamma) {
  return SymbolSpec(PureFisherHartwig{delta, gamma});
}

SymbolSpec SymbolSpec::hermitian_fh(std::vector<FhSingularity> singularities,
                                    LaurentPolynomial smooth) {
  return SymbolSpec(HermitianFisherHartwig{std::move(singularities), std::move(smooth)});
}

SymbolKind SymbolSpec::kind() const {
  return static_cast<SymbolKind>(v_.index());
}

const LaurentPolynomial& SymbolSpec::laurent_part() const {
  if (kind() != SymbolKind::Laurent) throw DomainError("not a Laurent symbol");
  return std::get<LaurentPolynomial>(v_);
}

const PureFisherHartwig& SymbolSpec::fh() const {
  if (kind() != SymbolKind::PureFH) throw DomainError("not a pure FH symbol");
  return std::get<PureFisherHartwig>(v_);
}

const HermitianFisherHartwig& SymbolSpec::hfh() const {
  if (kind() != SymbolKind::HermitianFH) throw DomainError("not a Hermitian FH symbol");
  return std::get<HermitianFisherHartwig>(v_);
}

bool SymbolSpec::is_hermitian() const {
  switch (kind()) {
    case SymbolKind::Laurent:
      return laurent_part().is_hermitian();
    case SymbolKind::PureFH: {
      const auto& p = fh();
      return is_real(p.delta) && is_real(p.gamma) &&
             std::abs(p.delta - p.gamma) <= 1e-12;
    }
    case SymbolKind::HermitianFH:
      return true;
  }
  return false;
}

void SymbolSpec::validate() const {
  switch (kind()) {
    case SymbolKind::Laurent:
      break;
    case SymbolKind::PureFH: {
      const auto& p = fh();
      if (p.delta.real() <= -1.0 || p.gamma.real() <= -1.0 ||
          (p.delta + p.gamma).real() <= -1.0)
        throw DomainError(
            "FH parameters need Re delta > -1, Re gamma > -1, Re(delta+gamma) > -1");
      break;
    }
    case SymbolKind::HermitianFH: {
      const auto& h = std::get<HermitianFisherHartwig>(v_);
      for (size_t i = 0; i < h.singularities.size(); ++i) {
        const auto& s = h.singularities[i];
        if (std::abs(std::abs(s.point) - 1.0) > kUnitTol)
          throw DomainError("FH singularity must sit on the unit circle");
        if (s.alpha <= -0.5)
          throw DomainError("FH singularity exponent must exceed -1/2");
        for (size_t j = i + 1; j < h.singularities.size(); ++j)
          if (std::abs(s.point - h.singularities[j].point) <= kUnitTol)
            throw DomainError("FH singularities must be pairwise distinct");
      }
      if (h.smooth.coeffs.empty())
        throw DomainError("smooth part must be nonempty");
      std::vector<Cplx> v = circle_samples(h.smooth, 1024);
      for (const Cplx& s : v)
        if (s.real() <= 0.0 ||
            std::abs(s.imag()) > 1e-9 * std::max(1.0, std::abs(s.real())))
          throw DomainError("smooth part: not strictly positive on sampling grid");
      break;
    }
  }
}

Cplx pure_fh_coefficient(Cplx delta, Cplx gamma, int k) {
  if (is_nonpositive_integer(delta + double(k) + 1.0) ||
      is_nonpositive_integer(gamma - double(k) + 1.0))
    return 0.0;
  Cplx lg = log_gamma(1.0 + delta + gamma) - log_gamma(delta + double(k) + 1.0) -
            log_gamma(gamma - double(k) + 1.0);
  Cplx v = std::exp(lg);
  if (k & 1) v = -v;
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw NumericError("pure FH coefficient: non-finite value");
  return v;
}

std::vector<Cplx> fourier_coefficients(const SymbolSpec& s, int k_min, int k_max) {
  if (k_min > k_max) throw ShapeError("fourier_coefficients: empty range");
  switch (s.kind()) {
    case SymbolKind::Laurent:
      return laurent_bulk(s.laurent_part(), k_min, k_max);
    case SymbolKind::PureFH: {
      const int half = std::max(std::abs(k_min), std::abs(k_max));
      std::vector<Cplx> all = pure_fh_bulk(s.fh().delta, s.fh().gamma, half);
      return {all.begin() + (k_min + half), all.begin() + (k_max + half) + 1};
    }
    case SymbolKind::HermitianFH:
      return hermitian_fh_bulk(s.hfh(), k_min, k_max);
  }
  throw DomainError("unknown symbol kind");
}

Cplx fourier_coefficient(const SymbolSpec& s, int k) {
  return fourier_coefficients(s, k, k)[0];
}

Cplx LogCoefficients::at(int k) const {
  if (std::abs(k) > half_order) throw ShapeError("log coefficient out of range");
  return c[k + half_order];
}

int fft_grid_size(int min_needed) {
  int base = 4096;
  if (const char* env = std::getenv("CORNERDET_FFT_GRID")) {
    int v = std::atoi(env);
    if (v >= 16 && v <= (1 << 22)) base = v;
  }
  return next_pow2(std::max(base, min_needed));
}

LogCoefficients log_coefficients(const SymbolSpec& s, int K) {
  if (K < 0) throw ShapeError("log_coefficients: K must be >= 0");
  switch (s.kind()) {
    case SymbolKind::PureFH: {
      if (!s.is_hermitian())
        throw DomainError("log coefficients need a Hermitian symbol");
      const double alpha = s.fh().delta.real();
      LogCoefficients lc;
      lc.half_order = K;
      lc.c.assign(2 * K + 1, Cplx(0.0));
      for (int k = 1; k <= K; ++k) {
        lc.c[K + k] = -alpha / double(k);
        lc.c[K - k] = -alpha / double(k);
      }
      return lc;
    }
    case SymbolKind::HermitianFH: {
      const auto& h = s.hfh();
      int deg = std::max(std::abs(h.smooth.min_index()), std::abs(h.smooth.max_index()));
      const int n_grid = fft_grid_size(std::max(4 * (K + 1), 4 * (deg + 1)));
      LogCoefficients lc =
          dft_log_window(positive_log_samples(h.smooth, n_grid, "smooth part"), K);
      for (const auto& sing : h.singularities) {
        const double phi = std::arg(sing.point);
        for (int k = 1; k <= K; ++k) {
          Cplx term = -sing.alpha / double(k) * std::polar(1.0, -double(k) * phi);
          lc.c[K + k] += term;
          lc.c[K - k] += std::conj(term);
        }
      }
      return lc;
    }
    case SymbolKind::Laurent: {
      const auto& p = s.laurent_part();
      int deg = std::max(std::abs(p.min_index()), std::abs(p.max_index()));
      const int n_grid = fft_grid_size(std::max(4 * (K + 1), 4 * (deg + 1)));
      if (p.is_hermitian())
        return dft_log_window(positive_log_samples(p, n_grid, "symbol"), K);
      return dft_log_window(continuous_log_samples(p, n_grid), K);
    }
  }
  throw DomainError("unknown symbol kind");
}

double geometric_mean(const SymbolSpec& s) {
  if (s.kind() == SymbolKind::PureFH) {
    if (!s.is_hermitian())
      throw UnsupportedSymbolError(
          "geometric mean of a pure FH symbol needs delta = gamma real");
    return 1.0;
  }
  Cplx l0 = log_coefficients(s, 0).at(0);
  if (std::abs(l0.imag()) > 1e-9)
    throw UnsupportedSymbolError("geometric mean is not a positive real");
  return std::exp(l0.real());
}

SzegoConstant szego_constant(const SymbolSpec& s, int K) {
  if (K < 1) throw ShapeError("szego_constant: K must be >= 1");
  LogCoefficients lc = log_coefficients(s, K);
  Cplx sum = 0.0;
  double last = 0.0;
  double prev_scaled = -1.0;
  int run = 0;
  for (int k = 1; k <= K; ++k) {
    Cplx term = double(k) * lc.at(-k) * lc.at(k);
    double mag = std::abs(term);
    sum += term;
    last = mag;
    if (mag < 1e-280) {
      prev_scaled = -1.0;
      run = 0;
      continue;
    }
    // k*|term_k| is constant for log-singular symbols (harmonic tail) and
    // decays geometrically for smooth ones; a sustained non-decreasing run
    // marks a divergent sum.
    double scaled = double(k) * mag;
    if (prev_scaled >= 0.0 && scaled >= prev_scaled * (1.0 - 1e-12)) {
      if (++run >= 16)
        throw DivergenceError("szego constant: series diverges (non-summable terms)");
    } else {
      run = 0;
    }
    prev_scaled = scaled;
  }
  return {std::exp(sum), last};
}

std::vector<Cplx> analytic_inverse_coeffs(const SymbolSpec& s, int m) {
  if (m < 1) throw ShapeError("analytic_inverse_coeffs: m must be >= 1");
  LogCoefficients lc = log_coefficients(s, std::max(4 * m, 16));
  std::vector<Cplx> g(m, Cplx(0.0));
  g[0] = 1.0;
  for (int k = 1; k < m; ++k) {
    Cplx acc = 0.0;
    for (int j = 1; j <= k; ++j) acc += double(j) * (-lc.at(j)) * g[k - j];
    g[k] = acc / double(k);
  }
  return g;
}

}  // namespace cornerdet
