#ifndef LILRS_ERRORS_HPP
#define LILRS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lilrs {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// galois
struct ZeroConjugator : Error {
    ZeroConjugator() : Error("conjugation by zero is undefined") {}
};
struct TooManyClasses : Error {
    using Error::Error;
};

// linalg
struct BadBasis : Error {
    using Error::Error;
};
struct AmbientMismatch : Error {
    using Error::Error;
};
struct BadDim : Error {
    using Error::Error;
};

// code
struct ParamMismatch : Error {
    using Error::Error;
};

// channel
struct SpecInvalid : Error {
    using Error::Error;
};
struct ShapeMismatch : Error {
    using Error::Error;
};
struct Infeasible : Error {
    using Error::Error;
};

// harness
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace lilrs

#endif
