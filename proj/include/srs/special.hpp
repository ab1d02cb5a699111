#pragma once

#include <complex>

namespace srs {

// log Gamma(z) for Re z > 0 or z off the non-positive real axis; imaginary part is a
// continuous branch of arg Gamma(z) along vertical lines.
std::complex<double> log_gamma(std::complex<double> z);

}  // namespace srs
