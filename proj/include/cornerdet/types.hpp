#ifndef CORNERDET_TYPES_HPP
#define CORNERDET_TYPES_HPP

#include <complex>

namespace cornerdet {

using Cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

// True when z sits (to tolerance) on a nonpositive integer of the real axis.
inline bool is_nonpositive_integer(Cplx z, double tol = 1e-12) {
  if (std::abs(z.imag()) > tol) return false;
  double r = std::round(z.real());
  return r <= 0.0 && std::abs(z.real() - r) <= tol * std::max(1.0, std::abs(z.real()));
}

inline bool is_real(Cplx z, double tol = 1e-12) {
  return std::abs(z.imag()) <= tol * std::max(1.0, std::abs(z.real()));
}

}  // namespace cornerdet

#endif
