#ifndef PRIMPTS_ERROR_HPP
#define PRIMPTS_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace primpts {

enum class ErrorKind {
    InvalidInput,
    DivisionByZero,
    LiftObstruction,
    NotAField,
    UnsupportedModel,
    SingularModel,
    DegreeUndefined,
    Unsupported,
    NotPrincipal,
    PreconditionFailed,
    OutOfTheoremRange,
    DegeneratePresentation,
    VerificationFailure,
    SearchBudgetExhausted,
};

inline std::string_view to_string(ErrorKind k)
{
    switch (k) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::LiftObstruction: return "LiftObstruction";
    case ErrorKind::NotAField: return "NotAField";
    case ErrorKind::UnsupportedModel: return "UnsupportedModel";
    case ErrorKind::SingularModel: return "SingularModel";
    case ErrorKind::DegreeUndefined: return "DegreeUndefined";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::NotPrincipal: return "NotPrincipal";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::OutOfTheoremRange: return "OutOfTheoremRange";
    case ErrorKind::DegeneratePresentation: return "DegeneratePresentation";
    case ErrorKind::VerificationFailure: return "VerificationFailure";
    case ErrorKind::SearchBudgetExhausted: return "SearchBudgetExhausted";
    }
    return "Unknown";
}

/// Every recoverable failure in the library is reported through this type.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what)
{
    throw Error(kind, what);
}

} // namespace primpts

#endif // PRIMPTS_ERROR_HPP
