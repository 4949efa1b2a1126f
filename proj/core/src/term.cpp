#include "ccrep/term.hpp"

#include "ccrep/error.hpp"

#include <algorithm>
#include <cassert>

namespace ccrep {

namespace {

void collect_summands(const Term& p, std::vector<Term>& out)
{
    if (p.kind() == Term::Kind::Choice) {
        collect_summands(p.left(), out);
        collect_summands(p.right(), out);
    } else {
        out.push_back(p);
    }
}

} // namespace

Term Term::nil()
{
    static const Term zero{std::make_shared<const Node>(Node{Kind::Nil, {}, {}, "0", 1, 0, 1, false})};
    return zero;
}

Term Term::omega()
{
    static const Term w{std::make_shared<const Node>(Node{Kind::Omega, {}, {}, "w", 1, 0, 1, true})};
    return w;
}

Term Term::prefix(std::string action, Term body)
{
    std::string text = action + ".";
    if (body.kind() == Kind::Choice)
        text += "(" + body.text() + ")";
    else
        text += body.text();
    const std::size_t size = 1 + body.size();
    const std::size_t depth = 1 + body.prefix_depth();
    const std::size_t width = body.width();
    const bool has_omega = body.contains_omega();
    return Term{std::make_shared<const Node>(
        Node{Kind::Prefix, std::move(action), {std::move(body)}, std::move(text), size, depth, width, has_omega})};
}

Term Term::choice(const Term& left, const Term& right)
{
    std::vector<Term> parts;
    collect_summands(left, parts);
    collect_summands(right, parts);
    std::sort(parts.begin(), parts.end());
    return chain(parts);
}

Term Term::sum(std::vector<Term> summands)
{
    std::vector<Term> parts;
    for (const auto& s : summands)
        collect_summands(s, parts);
    if (parts.empty())
        return nil();
    std::sort(parts.begin(), parts.end());
    return chain(parts);
}

Term Term::chain(std::span<const Term> sorted)
{
    assert(!sorted.empty());
    Term acc = sorted.front();
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        const Term& next = sorted[i];
        std::string text = acc.text() + " + " + next.text();
        const std::size_t size = acc.size() + next.size() + 1;
        const std::size_t depth = std::max(acc.prefix_depth(), next.prefix_depth());
        const std::size_t width = std::max({i + 1, acc.width(), next.width()});
        const bool has_omega = acc.contains_omega() || next.contains_omega();
        acc = Term{std::make_shared<const Node>(
            Node{Kind::Choice, {}, {acc, next}, std::move(text), size, depth, width, has_omega})};
    }
    return acc;
}

Term::Kind Term::kind() const noexcept { return node_->kind; }

const std::string& Term::action() const
{
    if (kind() != Kind::Prefix)
        throw std::logic_error("Term::action on a non-prefix term");
    return node_->action;
}

const Term& Term::body() const
{
    if (kind() != Kind::Prefix)
        throw std::logic_error("Term::body on a non-prefix term");
    return node_->children[0];
}

const Term& Term::left() const
{
    if (kind() != Kind::Choice)
        throw std::logic_error("Term::left on a non-choice term");
    return node_->children[0];
}

const Term& Term::right() const
{
    if (kind() != Kind::Choice)
        throw std::logic_error("Term::right on a non-choice term");
    return node_->children[1];
}

std::vector<Term> Term::summands() const
{
    std::vector<Term> out;
    collect_summands(*this, out);
    return out;
}

const std::string& Term::text() const noexcept { return node_->text; }
std::size_t Term::size() const noexcept { return node_->size; }
std::size_t Term::prefix_depth() const noexcept { return node_->depth; }
std::size_t Term::width() const noexcept { return node_->width; }
bool Term::contains_omega() const noexcept { return node_->has_omega; }

void Term::for_each_action(const std::function<void(const std::string&)>& f) const
{
    switch (kind()) {
    case Kind::Nil:
    case Kind::Omega: return;
    case Kind::Prefix:
        f(action());
        body().for_each_action(f);
        return;
    case Kind::Choice:
        left().for_each_action(f);
        right().for_each_action(f);
        return;
    }
}

void require_term_over(const Term& p, const Signature& sig)
{
    p.for_each_action([&](const std::string& a) {
        if (!sig.contains(a))
            throw Error(ErrorCode::SignatureMismatch,
                        "action '" + a + "' of term '" + p.text() + "' is not in the signature", a);
    });
}

} // namespace ccrep
