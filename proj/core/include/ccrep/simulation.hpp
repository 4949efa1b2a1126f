#pragma once

#include "ccrep/lts.hpp"
#include "ccrep/signature.hpp"
#include "ccrep/term.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ccrep {

// Greatest covariant-contravariant simulation on the states of one system,
// as a dense n x n matrix indexed like Lts::states(). The left-to-right
// clause covers A^r and A^bi, the right-to-left clause A^l and A^bi.
class SimulationPreorder {
public:
    explicit SimulationPreorder(const Lts& lts);

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] bool holds(std::size_t p, std::size_t q) const noexcept { return bits_[p * n_ + q] != 0; }

private:
    std::size_t n_;
    std::vector<unsigned char> bits_;
};

// Finite relation between named states.
struct SimulationRelation {
    std::vector<std::pair<std::string, std::string>> pairs; // sorted

    friend bool operator==(const SimulationRelation&, const SimulationRelation&) = default;
};

// p <=cc q between two states of `lts`.
[[nodiscard]] bool simulates(const Lts& lts, std::string_view p, std::string_view q);

// One-pass check that `r` satisfies both clauses in `lts`.
[[nodiscard]] bool is_simulation(const Lts& lts, const SimulationRelation& r);

// Term-level preorder. `sig` must be free of bivariant actions (see
// bi_simulates for the general case); throws SignatureMismatch if either
// term uses an action outside `sig`.
[[nodiscard]] bool simulates(const Term& p, const Term& q, const Signature& sig);
[[nodiscard]] bool cc_equivalent(const Term& p, const Term& q, const Signature& sig);

// The greatest simulation restricted to pairs reachable from (p, q), or
// nothing when p is not simulated by q.
[[nodiscard]] std::optional<SimulationRelation> simulation_witness(const Term& p, const Term& q,
                                                                   const Signature& sig);

namespace detail {

// Same as simulates() but accepts bivariant signatures.
[[nodiscard]] bool simulates_general(const Term& p, const Term& q, const Signature& sig);

} // namespace detail

} // namespace ccrep
