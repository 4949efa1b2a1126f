#pragma once

#include "oracle.hpp"

#include <ccrep/signature.hpp>
#include <ccrep/term.hpp>

#include <random>
#include <string>
#include <vector>

namespace ccrep::testing {

using Rng = std::mt19937_64;

struct TermShape {
    std::size_t depth = 3;
    std::size_t width = 2;
    bool omega = true;
};

// Random term with prefix depth <= shape.depth and at most shape.width
// summands per choice chain.
Term random_term(Rng& rng, const Signature& sig, TermShape shape);

struct FormulaShape {
    std::size_t depth = 3;
    std::size_t width = 2; // connective arity
    double constant_bias = 0.1;
};

// Random raw formula; diamonds draw from A^r and A^bi, boxes from A^l and A^bi.
RawF random_formula(Rng& rng, const Signature& sig, FormulaShape shape);

// Every other draw is a top-level disjunction, so that non-prime formulae
// with several minimal models are well represented.
RawF random_formula_mix(Rng& rng, const Signature& sig, FormulaShape shape, std::size_t draw);

// A tractable stand-in for "every term up to prefix depth 3": the full
// enumerations (3, 1) and (2, 2) plus `extra` random depth-3 width-2 terms.
std::vector<Term> depth3_terms(const Signature& sig, std::size_t extra, std::uint64_t seed);

// Signatures used throughout the suites.
Signature sig_ab();     // r: a        l: b
Signature sig_wide();   // r: a c      l: b d
Signature sig_bi();     // r: a        l: b        bi: c

} // namespace ccrep::testing
