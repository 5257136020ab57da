#pragma once

#include <stdexcept>
#include <string>

namespace cpd {

enum class ErrorCode {
    InvalidArgument,
    ParseError,
    SampleTooSmall,
    SegmentTooShort,
    SingularDesign,
    SingularCovariance,
    IntensityBelowFloor,
    NotConverged,
    IrrecoverablySingular,
    DimensionMismatch,
    IoError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::ParseError: return "parse error";
    case ErrorCode::SampleTooSmall: return "sample too small";
    case ErrorCode::SegmentTooShort: return "segment too short";
    case ErrorCode::SingularDesign: return "singular design";
    case ErrorCode::SingularCovariance: return "singular covariance";
    case ErrorCode::IntensityBelowFloor: return "intensity below floor";
    case ErrorCode::NotConverged: return "not converged";
    case ErrorCode::IrrecoverablySingular: return "irrecoverably singular";
    case ErrorCode::DimensionMismatch: return "dimension mismatch";
    case ErrorCode::IoError: return "i/o error";
    }
    return "unknown error";
}

} // namespace cpd
