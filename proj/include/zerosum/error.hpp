#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zerosum {

enum class ErrorCode {
    EmptyFactors,
    NonDivisibleChain,
    FactorBelowTwo,
    InvalidElement,
    GroupTooLarge,
    NotASubgroup,
    EmptySet,
    GroupMismatch,
    KneserViolation,
    NoSetpartition,
    BadN,
    LengthMismatch,
    MissingField,
    CapExceeded,
    DomainTooLarge,
    ParseError,
};

inline std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::EmptyFactors: return "EmptyFactors";
        case ErrorCode::NonDivisibleChain: return "NonDivisibleChain";
        case ErrorCode::FactorBelowTwo: return "FactorBelowTwo";
        case ErrorCode::InvalidElement: return "InvalidElement";
        case ErrorCode::GroupTooLarge: return "GroupTooLarge";
        case ErrorCode::NotASubgroup: return "NotASubgroup";
        case ErrorCode::EmptySet: return "EmptySet";
        case ErrorCode::GroupMismatch: return "GroupMismatch";
        case ErrorCode::KneserViolation: return "KneserViolation";
        case ErrorCode::NoSetpartition: return "NoSetpartition";
        case ErrorCode::BadN: return "BadN";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::MissingField: return "MissingField";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::DomainTooLarge: return "DomainTooLarge";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace zerosum
