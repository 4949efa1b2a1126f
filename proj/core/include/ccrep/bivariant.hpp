#pragma once

#include "ccrep/formula.hpp"
#include "ccrep/lts.hpp"
#include "ccrep/signature.hpp"
#include "ccrep/term.hpp"

#include <string>
#include <string_view>
#include <variant>

namespace ccrep {

// Generated names for the covariant and contravariant halves of an action.
[[nodiscard]] std::string covariant_half(std::string_view action);     // action + "^r"
[[nodiscard]] std::string contravariant_half(std::string_view action); // action + "^l"

// Split signature: (A^r + {c^r}, A^l + {c^l}, {}) for c in A^bi.
[[nodiscard]] Signature split_signature(const Signature& sig);
// Signature of the MTS-route encoding: ({d^r | d in A^r + A^bi}, {d^l | d in A}, {}).
[[nodiscard]] Signature mts_signature(const Signature& sig);
// Uniform signature: ({d^r | d in A}, {d^l | d in A}, {}).
[[nodiscard]] Signature uniform_signature(const Signature& sig);

// Simulation with the left-to-right clause over A^r + A^bi and the
// right-to-left clause over A^l + A^bi.
[[nodiscard]] bool bi_simulates(const Term& p, const Term& q, const Signature& sig);
[[nodiscard]] bool bi_equivalent(const Term& p, const Term& q, const Signature& sig);
// Satisfaction with <c> and [c] both available for c in A^bi.
[[nodiscard]] bool bi_satisfies(const Term& p, const Formula& f, const Signature& sig);

// Splitting encoding on systems: A^r and A^l edges are kept, every c-edge
// (c in A^bi) becomes a c^r-edge and a c^l-edge. Result is over
// split_signature(sig).
[[nodiscard]] Lts encode_split(const Lts& lts);
// Term version, homomorphic with c.p -> c^r.T(p) + c^l.T(p). Throws
// OmegaInBivariantTerm if p contains w.
[[nodiscard]] Term encode_split(const Term& p, const Signature& sig);

// MTS-route encoding over mts_signature(sig): a fresh sink state u; every
// d-edge yields a d^l-edge, and also a d^r-edge when d is in A^r + A^bi;
// every state gets p -a^l-> u for each a in A^r; u loops on d^l for all d.
[[nodiscard]] Lts encode_mts(const Lts& lts);

// Adds a fresh state behaving like w (looping on every contravariant action
// of the signature) and a contravariant_action-edge from every existing
// state to it. Throws PreconditionViolated if the system already has an
// edge with that label or if the label is not contravariant.
[[nodiscard]] Lts adjoin_omega_sink(const Lts& lts, std::string_view contravariant_action);

// <c>f -> <c^r>T(f), [c]f -> [c^l]T(f) for c in A^bi; identity elsewhere.
[[nodiscard]] Formula translate_formula(const Formula& f, const Signature& sig);

enum class EncodingImage { Mts, Split };

// Relabels an image of encode_mts or encode_split into uniform_signature(sig):
// a -> a^r for a in A^r and b -> b^l for b in A^l; generated names stay.
[[nodiscard]] Lts rename_to_uniform(const Lts& lts, const Signature& sig, EncodingImage which);

// True iff every state of the term's system has, for each c in A^bi, the
// same c^r-targets as c^l-targets. `sig` is the signature with A^bi; p is a
// term over split_signature(sig).
[[nodiscard]] bool is_representation(const Term& p, const Signature& sig);

struct NotRepresentable {
    Term input;
    Term candidate; // encode_split of the reconstructed term, not equivalent to input
};

using Reconstruction = std::variant<Term, NotRepresentable>;

// Finds a term over `sig` whose split encoding is cc-equivalent to p (a term
// over split_signature(sig)), or reports that the best candidate fails.
// p must be w-free, or exactly w or 0.
[[nodiscard]] Reconstruction reconstruct_bivariant(const Term& p, const Signature& sig);

} // namespace ccrep
