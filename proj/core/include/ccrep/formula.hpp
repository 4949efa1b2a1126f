#pragma once

#include "ccrep/signature.hpp"

#include <compare>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace ccrep {

// Formula of the covariant-contravariant modal logic:
//   ff | tt | F & F | F | F | <a>F | [b]F
//
// Conjunction and disjunction are n-ary. Their constructors flatten nested
// occurrences of the same connective and sort the operands by printed form;
// zero operands give tt (resp. ff) and a single operand is returned as is.
// Duplicate operands are kept.
class Formula {
public:
    enum class Kind : unsigned char { Bot, Top, And, Or, Diamond, Box };

    Formula() : Formula(top()) {}

    [[nodiscard]] static Formula bot();
    [[nodiscard]] static Formula top();
    [[nodiscard]] static Formula conj(std::vector<Formula> operands);
    [[nodiscard]] static Formula disj(std::vector<Formula> operands);
    [[nodiscard]] static Formula diamond(std::string action, Formula body);
    [[nodiscard]] static Formula box(std::string action, Formula body);

    [[nodiscard]] Kind kind() const noexcept;
    [[nodiscard]] bool is_bot() const noexcept { return kind() == Kind::Bot; }
    [[nodiscard]] bool is_top() const noexcept { return kind() == Kind::Top; }
    [[nodiscard]] bool is_modal() const noexcept { return kind() == Kind::Diamond || kind() == Kind::Box; }

    // Diamond / Box only.
    [[nodiscard]] const std::string& action() const;
    [[nodiscard]] const Formula& body() const;
    // And / Or operands; empty for every other kind.
    [[nodiscard]] std::span<const Formula> operands() const noexcept;

    [[nodiscard]] const std::string& text() const noexcept;
    [[nodiscard]] std::size_t modal_depth() const noexcept;
    [[nodiscard]] std::size_t size() const noexcept;

    friend bool operator==(const Formula& x, const Formula& y) noexcept
    {
        return x.node_ == y.node_ || x.text() == y.text();
    }
    friend std::strong_ordering operator<=>(const Formula& x, const Formula& y) noexcept
    {
        return x.text() <=> y.text();
    }

    struct Node;

private:
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    static Formula nary(Kind kind, std::vector<Formula> operands);

    std::shared_ptr<const Node> node_;
};

struct Formula::Node {
    Kind kind;
    std::string action;
    std::vector<Formula> children;
    std::string text;
    std::size_t depth;
    std::size_t size;
};

[[nodiscard]] inline std::size_t modal_depth(const Formula& f) noexcept { return f.modal_depth(); }

// Throws SignatureMismatch if a modality names an action outside `sig`, or
// uses <.> on a purely contravariant / [.] on a purely covariant action.
void require_formula_over(const Formula& f, const Signature& sig);

} // namespace ccrep

template <>
struct std::hash<ccrep::Formula> {
    std::size_t operator()(const ccrep::Formula& f) const noexcept { return std::hash<std::string>{}(f.text()); }
};
