#ifndef CORNERDET_SYMBOLS_HPP
#define CORNERDET_SYMBOLS_HPP

#include <map>
#include <variant>
#include <vector>

#include "cornerdet/types.hpp"

namespace cornerdet {

// Finite Laurent polynomial sum a_k t^k over the stored index range.
struct LaurentPolynomial {
  std::map<int, Cplx> coeffs;

  Cplx coefficient(int k) const;
  Cplx eval(Cplx t) const;
  int min_index() const;
  int max_index() const;
  // a_{-k} == conj(a_k) for all stored k.
  bool is_hermitian(double tol = 1e-12) const;
};

// (1 - 1/t)^delta * (1 - t)^gamma.
struct PureFisherHartwig {
  Cplx delta, gamma;
};

struct FhSingularity {
  Cplx point;    // unit modulus
  double alpha;  // exponent of |point - t|^{2 alpha}
};

// Product of |t_j - t|^{2 alpha_j} factors times a positive smooth part.
struct HermitianFisherHartwig {
  std::vector<FhSingularity> singularities;
  LaurentPolynomial smooth;  // real-valued, strictly positive on the circle
};

enum class SymbolKind { Laurent, PureFH, HermitianFH };

class SymbolSpec {
 public:
  static SymbolSpec laurent(std::map<int, Cplx> coeffs);
  static SymbolSpec pure_fh(Cplx delta, Cplx gamma);
  static SymbolSpec hermitian_fh(std::vector<FhSingularity> singularities,
                                 LaurentPolynomial smooth = {{{0, 1.0}}});

  SymbolKind kind() const;
  const LaurentPolynomial& laurent_part() const;
  const PureFisherHartwig& fh() const;
  const HermitianFisherHartwig& hfh() const;

  // Structural Hermitian property: real-valued on the circle.
  // Laurent: a_{-k} = conj(a_k); PureFH: delta = gamma real; HermitianFH: always.
  bool is_hermitian() const;

 private:
  explicit SymbolSpec(std::variant<LaurentPolynomial, PureFisherHartwig,
                                   HermitianFisherHartwig> v);
  void validate() const;
  std::variant<LaurentPolynomial, PureFisherHartwig, HermitianFisherHartwig> v_;
};

// Single coefficient of (1-1/t)^delta (1-t)^gamma:
// (-1)^k Gamma(1+delta+gamma) / (Gamma(delta+k+1) Gamma(gamma-k+1)),
// exactly 0 when either denominator argument is a nonpositive integer.
Cplx pure_fh_coefficient(Cplx delta, Cplx gamma, int k);

// Fourier coefficients a_k for k_min <= k <= k_max. The Hermitian-FH variant
// builds each singular factor's sequence by recurrence, modulates by
// conj(t_j)^k and combines everything by truncated convolution over a buffer
// eight times the requested range, so prefer this bulk form over per-k calls.
std::vector<Cplx> fourier_coefficients(const SymbolSpec& s, int k_min, int k_max);
Cplx fourier_coefficient(const SymbolSpec& s, int k);

struct LogCoefficients {
  int half_order = 0;
  std::vector<Cplx> c;  // index k + half_order, k in [-half_order, half_order]
  Cplx at(int k) const;
};

// Fourier coefficients of log a up to |k| <= K. Singular Hermitian-FH factors
// contribute the analytic rule -alpha_j conj(t_j)^k / k for k >= 1 (nothing
// at k = 0); smooth parts go through an FFT of log samples. Laurent symbols
// without Hermitian structure are handled through the continuous-logarithm
// branch provided they are zero-free with winding number zero.
LogCoefficients log_coefficients(const SymbolSpec& s, int K);

// G(a) = exp((log a)_0); requires the result to be a positive real.
double geometric_mean(const SymbolSpec& s);

struct SzegoConstant {
  Cplx value;
  double last_term;  // magnitude of the K-th summand, truncation indicator
};

// E(a) = exp sum_{k>=1} k (log a)_{-k} (log a)_k, truncated at K.
SzegoConstant szego_constant(const SymbolSpec& s, int K = 256);

// First m coefficients of 1/a_+ where a_+ = exp(sum_{k>=1} (log a)_k z^k),
// via the power-series exponential recurrence. Element 0 is always 1.
std::vector<Cplx> analytic_inverse_coeffs(const SymbolSpec& s, int m);

// Grid size used for log-sample FFTs: CORNERDET_FFT_GRID when set, else 4096,
// raised to the next power of two that resolves the requested order.
int fft_grid_size(int min_needed);

}  // namespace cornerdet

#endif
