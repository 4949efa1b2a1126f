#pragma once

#include "ccrep/signature.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace ccrep {

// Finite process term: 0 | w | a.p | p + p.
//
// Terms are immutable and shared. Constructors keep every tree canonical:
// a choice is a left-associated chain whose summands are sorted by their
// printed form, so structural equality coincides with equality of `text()`.
// Duplicate summands are kept.
class Term {
public:
    enum class Kind : unsigned char { Nil, Omega, Prefix, Choice };

    Term() : Term(nil()) {}

    [[nodiscard]] static Term nil();
    [[nodiscard]] static Term omega();
    [[nodiscard]] static Term prefix(std::string action, Term body);
    [[nodiscard]] static Term choice(const Term& left, const Term& right);
    // Sum of the given summands; the empty sum is 0.
    [[nodiscard]] static Term sum(std::vector<Term> summands);

    [[nodiscard]] Kind kind() const noexcept;
    [[nodiscard]] bool is_nil() const noexcept { return kind() == Kind::Nil; }
    [[nodiscard]] bool is_omega() const noexcept { return kind() == Kind::Omega; }

    // Prefix only.
    [[nodiscard]] const std::string& action() const;
    [[nodiscard]] const Term& body() const;
    // Choice only.
    [[nodiscard]] const Term& left() const;
    [[nodiscard]] const Term& right() const;

    // Maximal non-choice subterms, in canonical order. A non-choice term is
    // its own single summand.
    [[nodiscard]] std::vector<Term> summands() const;

    // Canonical, parenthesis-minimal rendering.
    [[nodiscard]] const std::string& text() const noexcept;
    // Symbols: 1 per 0, w, '+' and each "a." prefix.
    [[nodiscard]] std::size_t size() const noexcept;
    [[nodiscard]] std::size_t prefix_depth() const noexcept;
    // Largest number of summands of any choice chain in the term.
    [[nodiscard]] std::size_t width() const noexcept;
    [[nodiscard]] bool contains_omega() const noexcept;

    // Calls f(action) for every action occurring in the term.
    void for_each_action(const std::function<void(const std::string&)>& f) const;

    friend bool operator==(const Term& x, const Term& y) noexcept
    {
        return x.node_ == y.node_ || x.text() == y.text();
    }
    friend std::strong_ordering operator<=>(const Term& x, const Term& y) noexcept
    {
        return x.text() <=> y.text();
    }

    struct Node;

private:
    explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    static Term chain(std::span<const Term> sorted);

    std::shared_ptr<const Node> node_;
};

struct Term::Node {
    Kind kind;
    std::string action;
    std::vector<Term> children; // body for Prefix, (left, right) for Choice
    std::string text;
    std::size_t size;
    std::size_t depth;
    std::size_t width;
    bool has_omega;
};

[[nodiscard]] inline std::size_t term_size(const Term& p) noexcept { return p.size(); }

// Throws SignatureMismatch if the term uses an action outside `sig`.
void require_term_over(const Term& p, const Signature& sig);

} // namespace ccrep

template <>
struct std::hash<ccrep::Term> {
    std::size_t operator()(const ccrep::Term& p) const noexcept { return std::hash<std::string>{}(p.text()); }
};
