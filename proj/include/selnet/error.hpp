#pragma once

#include <stdexcept>
#include <string>

namespace selnet {

enum class ErrorCode {
    DimensionMismatch,
    DegenerateFrame,
    DegenerateInput,
    SizeMismatch,
    TooFewPoints,
    IdenticalPoints,
    ZeroPolynomial,
    OutOfRange,
    InternalFailure,
    GeneralPositionViolation,
    Precondition,
    SpecInvalid,
    ResampleLimit,
    ParseError,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
        case ErrorCode::DegenerateFrame: return "DEGENERATE_FRAME";
        case ErrorCode::DegenerateInput: return "DEGENERATE_INPUT";
        case ErrorCode::SizeMismatch: return "SIZE_MISMATCH";
        case ErrorCode::TooFewPoints: return "TOO_FEW_POINTS";
        case ErrorCode::IdenticalPoints: return "IDENTICAL_POINTS";
        case ErrorCode::ZeroPolynomial: return "ZERO_POLYNOMIAL";
        case ErrorCode::OutOfRange: return "OUT_OF_RANGE";
        case ErrorCode::InternalFailure: return "INTERNAL_FAILURE";
        case ErrorCode::GeneralPositionViolation: return "GENERAL_POSITION_VIOLATION";
        case ErrorCode::Precondition: return "PRECONDITION";
        case ErrorCode::SpecInvalid: return "SPEC_INVALID";
        case ErrorCode::ResampleLimit: return "RESAMPLE_LIMIT";
        case ErrorCode::ParseError: return "PARSE_ERROR";
    }
    return "UNKNOWN";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace selnet
