#pragma once

#include "ccrep/formula.hpp"
#include "ccrep/signature.hpp"
#include "ccrep/term.hpp"

#include <string>
#include <string_view>

namespace ccrep {

// Signature file:
//
//   # comment
//   r: a a2        covariant actions
//   l: b           contravariant actions
//   bi: c          bivariant actions (optional line)
//
// User action names may not contain '^'; that character is reserved for
// the names generated by the bivariant encodings.
[[nodiscard]] Signature parse_signature(std::string_view text);

// T ::= '0' | 'w' | ident '.' T | T '+' T | '(' T ')'
// Prefix binds tighter than '+'; '+' associates to the left.
[[nodiscard]] Term parse_term(std::string_view text, const Signature& sig);

// F ::= 'tt' | 'ff' | '<' ident '>' F | '[' ident ']' F | F '&' F | F '|' F | '(' F ')'
// Modalities bind tighter than '&', which binds tighter than '|'.
[[nodiscard]] Formula parse_formula(std::string_view text, const Signature& sig);

[[nodiscard]] inline const std::string& print_term(const Term& p) noexcept { return p.text(); }
[[nodiscard]] inline const std::string& print_formula(const Formula& f) noexcept { return f.text(); }

} // namespace ccrep
