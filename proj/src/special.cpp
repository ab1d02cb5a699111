#include "srs/special.hpp"

#include <cmath>

#include "srs/errors.hpp"

namespace srs {

std::complex<double> log_gamma(std::complex<double> z)
{
    using C = std::complex<double>;
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
        throw SingularityError("log_gamma pole");
    // shift right, then Stirling series
    C shift = 0.0;
    while (z.real() < 12.0) {
        shift += std::log(z);
        z += 1.0;
    }
    const C zi = 1.0 / z, zi2 = zi * zi;
    const C series = zi * (1.0 / 12.0 +
                            zi2 * (-1.0 / 360.0 +
                                   zi2 * (1.0 / 1260.0 +
                                          zi2 * (-1.0 / 1680.0 + zi2 * (1.0 / 1188.0 + zi2 * (-691.0 / 360360.0))))));
    return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * 3.14159265358979323846) + series - shift;
}

}  // namespace srs
