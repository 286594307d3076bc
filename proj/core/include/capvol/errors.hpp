#pragma once

#include <stdexcept>
#include <string>

namespace capvol {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularMatrix : Error {
    using Error::Error;
};
struct NoConvergence : Error {
    using Error::Error;
};
struct UnstableSystem : Error {
    using Error::Error;
};
struct NotControllable : Error {
    using Error::Error;
};
struct IllConditioned : Error {
    using Error::Error;
};
struct ComplexSpectrum : Error {
    using Error::Error;
};
struct NotHurwitzStable : Error {
    using Error::Error;
};
struct PreconditionViolated : Error {
    using Error::Error;
};
struct BudgetExceeded : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};

} // namespace capvol
