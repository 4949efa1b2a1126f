#pragma once

#include "ccrep/signature.hpp"
#include "ccrep/term.hpp"

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ccrep {

struct Transition {
    std::string action;
    Term target;

    friend bool operator==(const Transition&, const Transition&) = default;
    friend auto operator<=>(const Transition& x, const Transition& y)
    {
        if (auto c = x.action <=> y.action; c != 0)
            return c;
        return x.target <=> y.target;
    }
};

// Calls f(action, target) once per derivation of the operational rules:
// w -b-> w for b in A^l, a.p -a-> p, and both choice rules.
template <typename F>
void for_each_transition(const Term& p, const Signature& sig, F&& f)
{
    switch (p.kind()) {
    case Term::Kind::Nil: return;
    case Term::Kind::Omega:
        for (const auto& b : sig.contravariant())
            f(b, p);
        return;
    case Term::Kind::Prefix: f(p.action(), p.body()); return;
    case Term::Kind::Choice:
        for_each_transition(p.left(), sig, f);
        for_each_transition(p.right(), sig, f);
        return;
    }
}

// The set of (action, derivative) pairs of `p`, sorted and duplicate-free.
[[nodiscard]] std::vector<Transition> transitions(const Term& p, const Signature& sig);

struct Edge {
    std::string source;
    std::string action;
    std::string target;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Explicit finite labelled transition system. States are named by strings
// (for systems built from terms, the canonical text of the term); the
// state list and edge list are kept sorted and duplicate-free.
class Lts {
public:
    Lts(Signature sig, std::vector<std::string> states, std::string initial, std::vector<Edge> edges);

    [[nodiscard]] const Signature& signature() const noexcept { return sig_; }
    [[nodiscard]] const std::vector<std::string>& states() const noexcept { return states_; }
    [[nodiscard]] const std::string& initial() const noexcept { return initial_; }
    [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }

    [[nodiscard]] bool has_state(std::string_view s) const;
    // Position of `s` in states(); throws PreconditionViolated if absent.
    [[nodiscard]] std::size_t index_of(std::string_view s) const;

    friend bool operator==(const Lts&, const Lts&) = default;

private:
    Signature sig_;
    std::vector<std::string> states_;
    std::string initial_;
    std::vector<Edge> edges_;
};

// Closure of {p} under transitions; structurally equal derivatives share a
// state.
[[nodiscard]] Lts build_lts(const Term& p, const Signature& sig);
// Closure of all roots; the first root is the initial state.
[[nodiscard]] Lts build_lts(std::span<const Term> roots, const Signature& sig);

// {"edges":[[s,a,t],...],"initial":s,"signature":{"bi":[..],"l":[..],"r":[..]},"states":[..]}
// Keys, states and edges are sorted, so equal systems serialize identically.
[[nodiscard]] std::string to_json(const Lts& lts, int indent = -1);
[[nodiscard]] Lts lts_from_json(std::string_view text);

// Union of two systems over the same signature, with every state of `left`
// renamed to left_tag + name and every state of `right` to right_tag + name.
[[nodiscard]] Lts disjoint_union(const Lts& left, std::string_view left_tag, const Lts& right,
                                 std::string_view right_tag);

} // namespace ccrep
