#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ccrep {

enum class ErrorCode {
    Syntax,
    DuplicateAction,
    InvalidActionName,
    UnknownAction,
    ModalityMismatch,
    SignatureMismatch,
    PreconditionViolated,
    OmegaInBivariantTerm,
    SnfLimitExceeded,
};

[[nodiscard]] std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library. `subject()` names the offending
// action, state or term when there is one.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, std::string subject = {});

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }
    [[nodiscard]] const std::string& subject() const noexcept { return subject_; }

private:
    ErrorCode code_;
    std::string subject_;
};

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& message, std::size_t line, std::size_t column);

    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace ccrep
