#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sdual {

/// Malformed textual input (words, substitutions, numbers, CFs).
class parse_error : public std::invalid_argument {
public:
    parse_error(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

enum class ErrorKind {
    NotPrimitive,
    NotUnimodular,
    NotInvertible,
    DeterminantMinusOne,
    NoFixedPoint,
    MixedField,
    DivisionByZero,
    RationalInput,
    NotSturmShape,
    CoveringFailure,
    StabilizationFailure,
    NonIntervalWindow,
    NotAStrand,
    BadArgument,
};

inline const char* to_string(ErrorKind k) noexcept {
    switch (k) {
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::DeterminantMinusOne: return "DeterminantMinusOne";
    case ErrorKind::NoFixedPoint: return "NoFixedPoint";
    case ErrorKind::MixedField: return "MixedField";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::RationalInput: return "RationalInput";
    case ErrorKind::NotSturmShape: return "NotSturmShape";
    case ErrorKind::CoveringFailure: return "CoveringFailure";
    case ErrorKind::StabilizationFailure: return "StabilizationFailure";
    case ErrorKind::NonIntervalWindow: return "NonIntervalWindow";
    case ErrorKind::NotAStrand: return "NotAStrand";
    case ErrorKind::BadArgument: return "BadArgument";
    }
    return "Unknown";
}

/// A precondition of a mathematical operation does not hold for the input.
class domain_error : public std::runtime_error {
public:
    domain_error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace sdual
