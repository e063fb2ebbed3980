#pragma once

#include <stdexcept>
#include <string>

namespace psl {

// Stable error categories; the CLI maps these to process exit codes.
enum class ErrorCode : int {
    InvalidParameter = 2,
    DuplicatePoints  = 3,
    ZeroWeight       = 4,
    UnsupportedDim   = 5,
    NotAFace         = 6,
    NonSymmetric     = 7,
    ParseError       = 8,
    ZeroLabel        = 9,
    MixedDimensions  = 10,
    DegenerateScale  = 11,
    ClosureViolation = 12,
    DuplicateSimplex = 13,
    NoData           = 14,
    IoError          = 15,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::InvalidParameter: return "InvalidParameter";
        case ErrorCode::DuplicatePoints:  return "DuplicatePoints";
        case ErrorCode::ZeroWeight:       return "ZeroWeight";
        case ErrorCode::UnsupportedDim:   return "UnsupportedDim";
        case ErrorCode::NotAFace:         return "NotAFace";
        case ErrorCode::NonSymmetric:     return "NonSymmetric";
        case ErrorCode::ParseError:       return "ParseError";
        case ErrorCode::ZeroLabel:        return "ZeroLabel";
        case ErrorCode::MixedDimensions:  return "MixedDimensions";
        case ErrorCode::DegenerateScale:  return "DegenerateScale";
        case ErrorCode::ClosureViolation: return "ClosureViolation";
        case ErrorCode::DuplicateSimplex: return "DuplicateSimplex";
        case ErrorCode::NoData:           return "NoData";
        case ErrorCode::IoError:          return "IoError";
    }
    return "Unknown";
}

}  // namespace psl
