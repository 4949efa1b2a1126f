#pragma once

#include <ccrep/error.hpp>
#include <ccrep/parse.hpp>

#include <functional>
#include <optional>

#include <ostream>

namespace ccrep {

inline void PrintTo(const Term& p, std::ostream* os) { *os << p.text(); }
inline void PrintTo(const Formula& f, std::ostream* os) { *os << f.text(); }

} // namespace ccrep

namespace ccrep::testing {

inline Term T(std::string_view text, const Signature& sig) { return parse_term(text, sig); }
inline Formula F(std::string_view text, const Signature& sig) { return parse_formula(text, sig); }

// Error code raised by `f`, if any.
inline std::optional<ErrorCode> error_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return std::nullopt;
}

} // namespace ccrep::testing
