#pragma once

#include <cmath>
#include <complex>

#include "srs/core_model.hpp"

namespace srs::test {

// l = -1/2, omega = 1/2: |E| = 1, the arc crosses the real axis at -2
inline const SpectralConstants& worked()
{
    static const SpectralConstants c = derive_spectral_constants(PhysicalParams::make(-0.5, 0.5));
    return c;
}

inline double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace srs::test
