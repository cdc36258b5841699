#pragma once

#include <stdexcept>

namespace spincav {

// Error taxonomy; mirrored one-to-one by the C API status codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidParamsError : Error { using Error::Error; };  // parameter invariant violated
struct ConfigError : Error { using Error::Error; };         // config document malformed
struct IoError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };         // math outside model assumptions
struct SingularSystemError : Error { using Error::Error; };
struct ConvergenceError : Error { using Error::Error; };
struct UnstableSystemError : Error { using Error::Error; };
struct NoRootError : Error { using Error::Error; };
struct NumericError : Error { using Error::Error; };

}  // namespace spincav
