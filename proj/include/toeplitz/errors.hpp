#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toeplitz {

enum class ErrorKind {
    EmptyCoding,
    AllLettersEqual,
    InvalidCoding,
    Parse,
    HorizonExceeded,
    BudgetExceeded,
    InvalidShift,
    WordNotInLanguage,
    OutOfTheoremRange,
    PrefixTooShort,
    Overflow,
    InvalidArgument,
};

inline std::string_view to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::EmptyCoding: return "EmptyCoding";
    case ErrorKind::AllLettersEqual: return "AllLettersEqual";
    case ErrorKind::InvalidCoding: return "InvalidCoding";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::HorizonExceeded: return "HorizonExceeded";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InvalidShift: return "InvalidShift";
    case ErrorKind::WordNotInLanguage: return "WordNotInLanguage";
    case ErrorKind::OutOfTheoremRange: return "OutOfTheoremRange";
    case ErrorKind::PrefixTooShort: return "PrefixTooShort";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

} // namespace toeplitz
