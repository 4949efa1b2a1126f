#pragma once

#include "ccrep/formula.hpp"
#include "ccrep/signature.hpp"
#include "ccrep/term.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace ccrep {

// p |= f. Requires a signature without bivariant actions (bivariant
// satisfaction is bi_satisfies). Throws SignatureMismatch when p or f do not
// fit `sig`.
[[nodiscard]] bool satisfies(const Term& p, const Formula& f, const Signature& sig);

// Indented evaluation tree, one "p |= f : verdict" line per visited node.
[[nodiscard]] std::string explain_satisfaction(const Term& p, const Formula& f, const Signature& sig);

// All terms with prefix nesting <= max_depth whose choice chains have at
// most max_width distinct summands, leaves in {0, w}. Duplicate-free, in a
// fixed order: by nesting depth, then in generation order.
[[nodiscard]] std::vector<Term> enumerate_terms(const Signature& sig, std::size_t max_depth, std::size_t max_width);

// Formulae with modal depth <= max_depth. At every modal level the
// candidates are ff, tt, the modal formulae over the previous level, and
// conjunctions and disjunctions of 2..max_width distinct non-constant
// candidates of that level. Duplicate-free, fixed order. This is a
// refutation oracle: it covers a fragment, not the whole logic.
[[nodiscard]] std::vector<Formula> enumerate_formulae(const Signature& sig, std::size_t max_depth,
                                                      std::size_t max_width);

namespace detail {

// Evaluation under any signature: <x> ranges over A^r and A^bi, [x] over
// A^l and A^bi. No signature checks.
[[nodiscard]] bool evaluate(const Term& p, const Formula& f, const Signature& sig);

} // namespace detail

} // namespace ccrep
