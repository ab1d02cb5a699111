#pragma once

#include <stdexcept>
#include <string>

namespace srs {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// bad parameters (l outside (-1,0), omega <= 0, beta outside (0,1), ...)
struct DomainError : Error { using Error::Error; };
// evaluation on a cut or at a pole without a side flag
struct SingularityError : Error { using Error::Error; };
// point sits inside the guard band around a region border
struct BorderError : Error { using Error::Error; };
// genus-0 roots collided or torus degenerated
struct DegenerateError : Error { using Error::Error; };
struct QuadratureError : Error { using Error::Error; };
struct NoSignChangeError : Error { using Error::Error; };
struct ToleranceError : Error { using Error::Error; };
// a quantity that must be real came out with a sizeable imaginary part
struct RealityError : Error { using Error::Error; };
struct TracingError : Error { using Error::Error; };
struct ThetaZeroError : Error { using Error::Error; };
struct ConservationError : Error { using Error::Error; };
struct BudgetError : Error { using Error::Error; };

}  // namespace srs
