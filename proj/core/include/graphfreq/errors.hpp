#ifndef GRAPHFREQ_ERRORS_HPP
#define GRAPHFREQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace graphfreq {

enum class ErrorCode {
    NonPositiveWeight,
    DuplicateEdge,
    EmptyGraph,
    Disconnected,
    InvalidVertex,
    ParameterOutOfRange,
    SizeLimit,
    ParseError,
    IoError,
    MissingValue,
    NoConvergence,
    InconsistentBoundary,
    NotDiscreteHarmonic,
    BadExponent,
    NotHarmonic,
    RangeOutOfBounds,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonPositiveWeight:   return "NonPositiveWeight";
        case ErrorCode::DuplicateEdge:       return "DuplicateEdge";
        case ErrorCode::EmptyGraph:          return "EmptyGraph";
        case ErrorCode::Disconnected:        return "Disconnected";
        case ErrorCode::InvalidVertex:       return "InvalidVertex";
        case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
        case ErrorCode::SizeLimit:           return "SizeLimit";
        case ErrorCode::ParseError:          return "ParseError";
        case ErrorCode::IoError:             return "IoError";
        case ErrorCode::MissingValue:        return "MissingValue";
        case ErrorCode::NoConvergence:       return "NoConvergence";
        case ErrorCode::InconsistentBoundary: return "InconsistentBoundary";
        case ErrorCode::NotDiscreteHarmonic: return "NotDiscreteHarmonic";
        case ErrorCode::BadExponent:         return "BadExponent";
        case ErrorCode::NotHarmonic:         return "NotHarmonic";
        case ErrorCode::RangeOutOfBounds:    return "RangeOutOfBounds";
    }
    return "UnknownError";
}

}  // namespace graphfreq

#endif
