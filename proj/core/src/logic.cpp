#include "ccrep/logic.hpp"

#include "ccrep/error.hpp"
#include "ccrep/lts.hpp"

#include <unordered_set>

namespace ccrep {

namespace {

// Existential / universal search over the x-derivatives of p without
// materializing the transition set.
template <typename Pred>
bool any_successor(const Term& p, const std::string& x, const Signature& sig, Pred pred)
{
    switch (p.kind()) {
    case Term::Kind::Nil: return false;
    case Term::Kind::Omega: return sig.contravariant().contains(x) && pred(p);
    case Term::Kind::Prefix: return p.action() == x && pred(p.body());
    case Term::Kind::Choice: return any_successor(p.left(), x, sig, pred) || any_successor(p.right(), x, sig, pred);
    }
    return false;
}

void explain(const Term& p, const Formula& f, const Signature& sig, std::size_t indent, std::string& out)
{
    const bool verdict = detail::evaluate(p, f, sig);
    out.append(indent * 2, ' ');
    out += p.text() + " |= " + f.text() + " : " + (verdict ? "true" : "false") + "\n";
    switch (f.kind()) {
    case Formula::Kind::Bot:
    case Formula::Kind::Top: return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
        for (const auto& g : f.operands())
            explain(p, g, sig, indent + 1, out);
        return;
    case Formula::Kind::Diamond:
    case Formula::Kind::Box:
        for (const auto& t : transitions(p, sig))
            if (t.action == f.action())
                explain(t.target, f.body(), sig, indent + 1, out);
        return;
    }
}

void require_bivariant_free(const Signature& sig)
{
    if (sig.has_bivariant())
        throw Error(ErrorCode::PreconditionViolated,
                    "satisfies needs a signature without bivariant actions; use bi_satisfies");
}

// Appends every combination of 2..width distinct elements of pool[from..]
// to `out`, built with `make`.
template <typename T, typename Make>
void combinations(const std::vector<T>& pool, std::size_t width, Make make, std::vector<T>& out)
{
    std::vector<std::size_t> idx;
    auto rec = [&](auto& self, std::size_t start) -> void {
        if (idx.size() >= 2) {
            std::vector<T> pick;
            pick.reserve(idx.size());
            for (std::size_t i : idx)
                pick.push_back(pool[i]);
            out.push_back(make(std::move(pick)));
        }
        if (idx.size() == width)
            return;
        for (std::size_t i = start; i < pool.size(); ++i) {
            idx.push_back(i);
            self(self, i + 1);
            idx.pop_back();
        }
    };
    rec(rec, 0);
}

template <typename T>
void append_new(const std::vector<T>& items, std::unordered_set<std::string>& seen, std::vector<T>& out)
{
    for (const auto& x : items)
        if (seen.insert(x.text()).second)
            out.push_back(x);
}

} // namespace

bool detail::evaluate(const Term& p, const Formula& f, const Signature& sig)
{
    switch (f.kind()) {
    case Formula::Kind::Bot: return false;
    case Formula::Kind::Top: return true;
    case Formula::Kind::And:
        for (const auto& g : f.operands())
            if (!evaluate(p, g, sig))
                return false;
        return true;
    case Formula::Kind::Or:
        for (const auto& g : f.operands())
            if (evaluate(p, g, sig))
                return true;
        return false;
    case Formula::Kind::Diamond:
        return any_successor(p, f.action(), sig, [&](const Term& t) { return evaluate(t, f.body(), sig); });
    case Formula::Kind::Box:
        return !any_successor(p, f.action(), sig, [&](const Term& t) { return !evaluate(t, f.body(), sig); });
    }
    return false;
}

bool satisfies(const Term& p, const Formula& f, const Signature& sig)
{
    require_bivariant_free(sig);
    require_term_over(p, sig);
    require_formula_over(f, sig);
    return detail::evaluate(p, f, sig);
}

std::string explain_satisfaction(const Term& p, const Formula& f, const Signature& sig)
{
    require_term_over(p, sig);
    require_formula_over(f, sig);
    std::string out;
    explain(p, f, sig, 0, out);
    return out;
}

std::vector<Term> enumerate_terms(const Signature& sig, std::size_t max_depth, std::size_t max_width)
{
    const auto actions = sig.actions();
    std::vector<Term> result;
    std::unordered_set<std::string> seen;
    std::vector<Term> level; // all terms of nesting <= d
    for (std::size_t d = 0; d <= max_depth; ++d) {
        std::vector<Term> summands{Term::nil(), Term::omega()};
        if (d > 0)
            for (const auto& a : actions)
                for (const auto& t : level)
                    summands.push_back(Term::prefix(a, t));
        std::vector<Term> next;
        if (max_width >= 1)
            next = summands;
        combinations(summands, max_width, [](std::vector<Term> pick) { return Term::sum(std::move(pick)); }, next);
        append_new(next, seen, result);
        level = std::move(next);
    }
    return result;
}

std::vector<Formula> enumerate_formulae(const Signature& sig, std::size_t max_depth, std::size_t max_width)
{
    std::vector<Formula> result;
    std::unordered_set<std::string> seen;
    std::vector<Formula> level;
    for (std::size_t d = 0; d <= max_depth; ++d) {
        std::vector<Formula> base{Formula::bot(), Formula::top()};
        std::vector<Formula> modal;
        if (d > 0) {
            for (const auto& a : sig.actions()) {
                for (const auto& g : level) {
                    if (sig.is_forward(a))
                        modal.push_back(Formula::diamond(a, g));
                    if (sig.is_backward(a))
                        modal.push_back(Formula::box(a, g));
                }
            }
        }
        std::vector<Formula> next = base;
        next.insert(next.end(), modal.begin(), modal.end());
        combinations(modal, max_width, [](std::vector<Formula> pick) { return Formula::conj(std::move(pick)); }, next);
        combinations(modal, max_width, [](std::vector<Formula> pick) { return Formula::disj(std::move(pick)); }, next);
        append_new(next, seen, result);
        level = std::move(next);
    }
    return result;
}

} // namespace ccrep
