#ifndef CORNERDET_GAMMA_HPP
#define CORNERDET_GAMMA_HPP

#include "cornerdet/types.hpp"

namespace cornerdet {

// Principal branch of log Gamma(z), Lanczos approximation with reflection
// for Re z < 1/2. Throws PoleError at nonpositive integers.
Cplx log_gamma(Cplx z);

// Gamma(num) / Gamma(den) evaluated via log differences; throws NumericError
// when the result is non-finite and PoleError when num is a pole (a pole in
// den gives an exact zero).
Cplx gamma_ratio(Cplx num, Cplx den);

}  // namespace cornerdet

#endif
