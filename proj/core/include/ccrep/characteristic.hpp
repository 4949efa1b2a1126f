#pragma once

#include "ccrep/formula.hpp"
#include "ccrep/signature.hpp"
#include "ccrep/term.hpp"

namespace ccrep {

// Characteristic formula of p: satisfied by exactly the processes that
// cc-simulate p.
//
//   chi(w) = tt
//   chi(p) = /\{<a>chi(p') | p -a-> p', a in A^r} /\ /\{[b] \/{chi(p') | p -b-> p'} | b in A^l}
//
// Identical conjuncts are emitted once. A [b] conjunct is present for every
// b in A^l, including [b]ff when p has no b-derivative, so the result is a
// unary strong normal form.
[[nodiscard]] Formula char_formula(const Term& p, const Signature& sig);

} // namespace ccrep
