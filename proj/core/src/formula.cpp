#include "ccrep/formula.hpp"

#include "ccrep/error.hpp"

#include <algorithm>

namespace ccrep {

namespace {

bool needs_parens_as_modal_body(const Formula& f)
{
    return f.kind() == Formula::Kind::And || f.kind() == Formula::Kind::Or;
}

} // namespace

Formula Formula::bot()
{
    static const Formula f{std::make_shared<const Node>(Node{Kind::Bot, {}, {}, "ff", 0, 1})};
    return f;
}

Formula Formula::top()
{
    static const Formula f{std::make_shared<const Node>(Node{Kind::Top, {}, {}, "tt", 0, 1})};
    return f;
}

Formula Formula::conj(std::vector<Formula> operands) { return nary(Kind::And, std::move(operands)); }

Formula Formula::disj(std::vector<Formula> operands) { return nary(Kind::Or, std::move(operands)); }

Formula Formula::nary(Kind kind, std::vector<Formula> operands)
{
    std::vector<Formula> flat;
    flat.reserve(operands.size());
    for (auto& f : operands) {
        if (f.kind() == kind)
            flat.insert(flat.end(), f.operands().begin(), f.operands().end());
        else
            flat.push_back(std::move(f));
    }
    if (flat.empty())
        return kind == Kind::And ? top() : bot();
    if (flat.size() == 1)
        return flat.front();
    std::sort(flat.begin(), flat.end());

    const char* sep = kind == Kind::And ? " & " : " | ";
    std::string text;
    std::size_t depth = 0;
    std::size_t size = flat.size() - 1;
    for (std::size_t i = 0; i < flat.size(); ++i) {
        const Formula& f = flat[i];
        if (i > 0)
            text += sep;
        // '&' binds tighter than '|', so only a disjunction under a
        // conjunction needs brackets.
        if (kind == Kind::And && f.kind() == Kind::Or)
            text += "(" + f.text() + ")";
        else
            text += f.text();
        depth = std::max(depth, f.modal_depth());
        size += f.size();
    }
    return Formula{std::make_shared<const Node>(Node{kind, {}, std::move(flat), std::move(text), depth, size})};
}

Formula Formula::diamond(std::string action, Formula body)
{
    std::string text = "<" + action + ">";
    text += needs_parens_as_modal_body(body) ? "(" + body.text() + ")" : body.text();
    const std::size_t depth = 1 + body.modal_depth();
    const std::size_t size = 1 + body.size();
    return Formula{std::make_shared<const Node>(
        Node{Kind::Diamond, std::move(action), {std::move(body)}, std::move(text), depth, size})};
}

Formula Formula::box(std::string action, Formula body)
{
    std::string text = "[" + action + "]";
    text += needs_parens_as_modal_body(body) ? "(" + body.text() + ")" : body.text();
    const std::size_t depth = 1 + body.modal_depth();
    const std::size_t size = 1 + body.size();
    return Formula{std::make_shared<const Node>(
        Node{Kind::Box, std::move(action), {std::move(body)}, std::move(text), depth, size})};
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }

const std::string& Formula::action() const
{
    if (!is_modal())
        throw std::logic_error("Formula::action on a non-modal formula");
    return node_->action;
}

const Formula& Formula::body() const
{
    if (!is_modal())
        throw std::logic_error("Formula::body on a non-modal formula");
    return node_->children[0];
}

std::span<const Formula> Formula::operands() const noexcept
{
    if (kind() == Kind::And || kind() == Kind::Or)
        return node_->children;
    return {};
}

const std::string& Formula::text() const noexcept { return node_->text; }
std::size_t Formula::modal_depth() const noexcept { return node_->depth; }
std::size_t Formula::size() const noexcept { return node_->size; }

void require_formula_over(const Formula& f, const Signature& sig)
{
    switch (f.kind()) {
    case Formula::Kind::Bot:
    case Formula::Kind::Top: return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
        for (const auto& g : f.operands())
            require_formula_over(g, sig);
        return;
    case Formula::Kind::Diamond:
    case Formula::Kind::Box: {
        const auto& a = f.action();
        if (!sig.contains(a))
            throw Error(ErrorCode::SignatureMismatch, "action '" + a + "' is not in the signature", a);
        const bool ok = f.kind() == Formula::Kind::Diamond ? sig.is_forward(a) : sig.is_backward(a);
        if (!ok)
            throw Error(ErrorCode::SignatureMismatch,
                        "modality of '" + f.text() + "' does not match the variance of '" + a + "'", a);
        require_formula_over(f.body(), sig);
        return;
    }
    }
}

} // namespace ccrep
