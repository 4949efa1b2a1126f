#include "ccrep/error.hpp"

namespace ccrep {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::Syntax: return "SyntaxError";
    case ErrorCode::DuplicateAction: return "DuplicateAction";
    case ErrorCode::InvalidActionName: return "InvalidActionName";
    case ErrorCode::UnknownAction: return "UnknownAction";
    case ErrorCode::ModalityMismatch: return "ModalityMismatch";
    case ErrorCode::SignatureMismatch: return "SignatureMismatch";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::OmegaInBivariantTerm: return "OmegaInBivariantTerm";
    case ErrorCode::SnfLimitExceeded: return "SnfLimitExceeded";
    }
    return "Error";
}

Error::Error(ErrorCode code, const std::string& message, std::string subject)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code), subject_(std::move(subject))
{
}

SyntaxError::SyntaxError(const std::string& message, std::size_t line, std::size_t column)
    : Error(ErrorCode::Syntax,
            message + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
      line_(line), column_(column)
{
}

} // namespace ccrep
