#include "cornerdet/gamma.hpp"

#include <cmath>

#include "cornerdet/errors.hpp"

namespace cornerdet {

namespace {

// Lanczos coefficients for g = 607/128, N = 15 (Godfrey's set). Relative
// error of the rational part is below 1e-15 on Re z >= 1/2.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczos[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

constexpr double kHalfLog2Pi = 0.91893853320467274178032973640562;  // log(2*pi)/2

Cplx lanczos_log_gamma(Cplx z) {
  // Valid for Re z >= 1/2.
  Cplx sum = kLanczos[0];
  for (int k = 1; k < 15; ++k) sum += kLanczos[k] / (z - 1.0 + double(k));
  Cplx t = z + (kLanczosG - 0.5);
  return kHalfLog2Pi + (z - 0.5) * std::log(t) - t + std::log(sum);
}

}  // namespace

Cplx log_gamma(Cplx z) {
  if (is_nonpositive_integer(z))
    throw PoleError("log_gamma: pole at nonpositive integer");
  if (z.real() >= 0.5) return lanczos_log_gamma(z);
  // Reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z).
  // sin(pi z) overflows for large |Im z|; split off the exponential part
  // there to stay finite.
  Cplx rest = lanczos_log_gamma(1.0 - z);
  double im = z.imag();
  if (std::abs(im) < 30.0) {
    return std::log(kPi) - std::log(std::sin(kPi * z)) - rest;
  }
  // sin(pi z) = (exp(i pi z) - exp(-i pi z)) / 2i; keep the dominant factor
  // in log form: log sin(pi z) = |pi Im z| + log((1 - e^{-2|..|}) * phase/2i).
  Cplx ipz = Cplx(0.0, 1.0) * kPi * z;
  Cplx lead = im > 0 ? -ipz : ipz;
  Cplx small = std::exp(im > 0 ? 2.0 * ipz : -2.0 * ipz);
  Cplx log_sin = lead + std::log((1.0 - small) / Cplx(0.0, im > 0 ? -2.0 : 2.0));
  return std::log(kPi) - log_sin - rest;
}

Cplx gamma_ratio(Cplx num, Cplx den) {
  if (is_nonpositive_integer(den)) {
    if (is_nonpositive_integer(num))
      throw PoleError("gamma_ratio: poles in both arguments");
    return 0.0;
  }
  Cplx r = std::exp(log_gamma(num) - log_gamma(den));
  if (!std::isfinite(r.real()) || !std::isfinite(r.imag()))
    throw NumericError("gamma_ratio: non-finite result");
  return r;
}

}  // namespace cornerdet
