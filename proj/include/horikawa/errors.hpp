#pragma once

#include <stdexcept>
#include <string>

namespace horikawa {

// Base for every domain-level failure. The CLI maps these to exit code 3.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error { using Error::Error; };
struct VariableMismatch : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct NotHomogeneous : Error { using Error::Error; };
struct NotInU : Error { using Error::Error; };
struct NotRegular : Error { using Error::Error; };
struct NotSigmaGeneric : Error { using Error::Error; };
struct NotTransformable : Error { using Error::Error; };
struct NonIsolated : Error { using Error::Error; };
struct UnknownName : Error { using Error::Error; };
struct SurfaceMismatch : Error { using Error::Error; };
struct NotNormalizable : Error { using Error::Error; };
struct DegreeZero : Error { using Error::Error; };

} // namespace horikawa
