#pragma once

#include "ccrep/formula.hpp"
#include "ccrep/normal_form.hpp"
#include "ccrep/signature.hpp"
#include "ccrep/term.hpp"

#include <optional>
#include <vector>

namespace ccrep {

// Process whose characteristic formula is u:
//   theta(tt) = w
//   theta(u)  = sum_j a_j.theta(u_j) + sum_{b in A^l} sum_{k in K_b} b.theta(v_k)
// An empty K_b contributes no summand; the empty sum is 0.
[[nodiscard]] Term theta(const UnarySnf& u, const Signature& sig);

// Finite set M of processes with: q |= f  iff  p <=cc q for some p in M.
// Members form an antichain under <=cc.
struct RepresentationSet {
    std::vector<Term> members;
    friend bool operator==(const RepresentationSet&, const RepresentationSet&) = default;
};

// theta of every disjunct of the strong normal form of f, in disjunct order,
// without duplicates and before antichain reduction.
[[nodiscard]] std::vector<Term> representation_candidates(const Formula& f, const Signature& sig,
                                                          const SnfOptions& options = {});

// Keeps the <=cc-minimal members of `candidates`; among cc-equivalent
// members only the first one survives.
[[nodiscard]] std::vector<Term> minimal_antichain(const std::vector<Term>& candidates, const Signature& sig);

[[nodiscard]] RepresentationSet represent(const Formula& f, const Signature& sig, const SnfOptions& options = {});

// A process satisfying f, if there is one.
[[nodiscard]] std::optional<Term> consistency_witness(const Formula& f, const Signature& sig,
                                                      const SnfOptions& options = {});
[[nodiscard]] bool is_consistent(const Formula& f, const Signature& sig, const SnfOptions& options = {});

// f <= g1 | g2 implies f <= g1 or f <= g2. Decided on the candidate set M:
// prime iff M is empty or some member is simulated by every member.
[[nodiscard]] bool is_prime(const Formula& f, const Signature& sig, const SnfOptions& options = {});

// A member of represent(f) that violates g; none means f <= g.
[[nodiscard]] std::optional<Term> entailment_counterexample(const Formula& f, const Formula& g,
                                                            const Signature& sig, const SnfOptions& options = {});
[[nodiscard]] bool entails(const Formula& f, const Formula& g, const Signature& sig, const SnfOptions& options = {});
[[nodiscard]] bool equivalent(const Formula& f, const Formula& g, const Signature& sig,
                              const SnfOptions& options = {});

} // namespace ccrep
