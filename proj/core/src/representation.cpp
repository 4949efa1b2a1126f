#include "ccrep/representation.hpp"

#include "ccrep/error.hpp"
#include "ccrep/lts.hpp"
#include "ccrep/logic.hpp"
#include "ccrep/simulation.hpp"

#include <algorithm>
#include <unordered_set>

namespace ccrep {

Term theta(const UnarySnf& u, const Signature& sig)
{
    if (u.is_top())
        return Term::omega();
    std::vector<Term> summands;
    for (const auto& [a, v] : u.diamonds()) {
        if (!sig.covariant().contains(a))
            throw Error(ErrorCode::SignatureMismatch, "diamond action '" + a + "' is not covariant", a);
        summands.push_back(Term::prefix(a, theta(v, sig)));
    }
    for (const auto& [b, options] : u.boxes()) {
        if (!sig.contravariant().contains(b))
            throw Error(ErrorCode::SignatureMismatch, "box action '" + b + "' is not contravariant", b);
        for (const auto& v : options)
            summands.push_back(Term::prefix(b, theta(v, sig)));
    }
    return Term::sum(std::move(summands));
}

std::vector<Term> representation_candidates(const Formula& f, const Signature& sig, const SnfOptions& options)
{
    const StrongNormalForm snf = to_strong_normal_form(f, sig, options);
    std::vector<Term> out;
    std::unordered_set<std::string> seen;
    for (const auto& u : snf.disjuncts) {
        Term p = theta(u, sig);
        if (seen.insert(p.text()).second)
            out.push_back(std::move(p));
    }
    return out;
}

std::vector<Term> minimal_antichain(const std::vector<Term>& candidates, const Signature& sig)
{
    if (candidates.size() <= 1)
        return candidates;
    const Lts lts = build_lts(candidates, sig);
    const SimulationPreorder pre(lts);
    std::vector<std::size_t> idx;
    for (const auto& p : candidates)
        idx.push_back(lts.index_of(p.text()));

    std::vector<Term> kept;
    for (std::size_t j = 0; j < candidates.size(); ++j) {
        bool dominated = false;
        for (std::size_t i = 0; i < candidates.size() && !dominated; ++i) {
            if (i == j || !pre.holds(idx[i], idx[j]))
                continue;
            const bool strictly_below = !pre.holds(idx[j], idx[i]);
            dominated = strictly_below || i < j;
        }
        if (!dominated)
            kept.push_back(candidates[j]);
    }
    return kept;
}

RepresentationSet represent(const Formula& f, const Signature& sig, const SnfOptions& options)
{
    return {minimal_antichain(representation_candidates(f, sig, options), sig)};
}

std::optional<Term> consistency_witness(const Formula& f, const Signature& sig, const SnfOptions& options)
{
    auto members = represent(f, sig, options).members;
    if (members.empty())
        return std::nullopt;
    return members.front();
}

bool is_consistent(const Formula& f, const Signature& sig, const SnfOptions& options)
{
    return !to_strong_normal_form(f, sig, options).disjuncts.empty();
}

bool is_prime(const Formula& f, const Signature& sig, const SnfOptions& options)
{
    const auto candidates = representation_candidates(f, sig, options);
    if (candidates.size() <= 1)
        return true;
    const Lts lts = build_lts(candidates, sig);
    const SimulationPreorder pre(lts);
    std::vector<std::size_t> idx;
    for (const auto& p : candidates)
        idx.push_back(lts.index_of(p.text()));
    return std::any_of(idx.begin(), idx.end(), [&](std::size_t i) {
        return std::all_of(idx.begin(), idx.end(), [&](std::size_t j) { return pre.holds(i, j); });
    });
}

std::optional<Term> entailment_counterexample(const Formula& f, const Formula& g, const Signature& sig,
                                              const SnfOptions& options)
{
    require_formula_over(g, sig);
    for (const auto& p : represent(f, sig, options).members)
        if (!satisfies(p, g, sig))
            return p;
    return std::nullopt;
}

bool entails(const Formula& f, const Formula& g, const Signature& sig, const SnfOptions& options)
{
    return !entailment_counterexample(f, g, sig, options).has_value();
}

bool equivalent(const Formula& f, const Formula& g, const Signature& sig, const SnfOptions& options)
{
    return entails(f, g, sig, options) && entails(g, f, sig, options);
}

} // namespace ccrep
