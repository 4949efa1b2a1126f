#include "ccrep/bivariant.hpp"

#include "ccrep/error.hpp"
#include "ccrep/logic.hpp"
#include "ccrep/simulation.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ccrep {

std::string covariant_half(std::string_view action) { return std::string(action) + "^r"; }
std::string contravariant_half(std::string_view action) { return std::string(action) + "^l"; }

namespace {

void require_fresh(const Signature& sig, const std::string& generated)
{
    if (sig.contains(generated))
        throw Error(ErrorCode::InvalidActionName,
                    "generated action '" + generated + "' collides with a declared action", generated);
}

std::string fresh_state(const Lts& lts)
{
    std::string u = "u";
    while (lts.has_state(u))
        u += "'";
    return u;
}

} // namespace

Signature split_signature(const Signature& sig)
{
    ActionSet cov = sig.covariant();
    ActionSet contra = sig.contravariant();
    for (const auto& c : sig.bivariant()) {
        const std::string r = covariant_half(c);
        const std::string l = contravariant_half(c);
        require_fresh(sig, r);
        require_fresh(sig, l);
        cov.insert(r);
        contra.insert(l);
    }
    return Signature(std::move(cov), std::move(contra));
}

Signature mts_signature(const Signature& sig)
{
    ActionSet cov;
    ActionSet contra;
    for (const auto& d : sig.covariant()) {
        cov.insert(covariant_half(d));
        contra.insert(contravariant_half(d));
    }
    for (const auto& d : sig.bivariant()) {
        cov.insert(covariant_half(d));
        contra.insert(contravariant_half(d));
    }
    for (const auto& d : sig.contravariant())
        contra.insert(contravariant_half(d));
    return Signature(std::move(cov), std::move(contra));
}

Signature uniform_signature(const Signature& sig)
{
    ActionSet cov;
    ActionSet contra;
    for (const auto& d : sig.actions()) {
        cov.insert(covariant_half(d));
        contra.insert(contravariant_half(d));
    }
    return Signature(std::move(cov), std::move(contra));
}

bool bi_simulates(const Term& p, const Term& q, const Signature& sig)
{
    return detail::simulates_general(p, q, sig);
}

bool bi_equivalent(const Term& p, const Term& q, const Signature& sig)
{
    return bi_simulates(p, q, sig) && bi_simulates(q, p, sig);
}

bool bi_satisfies(const Term& p, const Formula& f, const Signature& sig)
{
    require_term_over(p, sig);
    require_formula_over(f, sig);
    return detail::evaluate(p, f, sig);
}

Lts encode_split(const Lts& lts)
{
    const Signature& sig = lts.signature();
    std::vector<Edge> edges;
    for (const auto& e : lts.edges()) {
        if (sig.bivariant().contains(e.action)) {
            edges.push_back({e.source, covariant_half(e.action), e.target});
            edges.push_back({e.source, contravariant_half(e.action), e.target});
        } else {
            edges.push_back(e);
        }
    }
    return Lts(split_signature(sig), lts.states(), lts.initial(), std::move(edges));
}

Term encode_split(const Term& p, const Signature& sig)
{
    require_term_over(p, sig);
    switch (p.kind()) {
    case Term::Kind::Nil: return p;
    case Term::Kind::Omega:
        throw Error(ErrorCode::OmegaInBivariantTerm, "the splitting encoding is not defined on terms containing w");
    case Term::Kind::Prefix: {
        Term body = encode_split(p.body(), sig);
        if (sig.bivariant().contains(p.action()))
            return Term::choice(Term::prefix(covariant_half(p.action()), body),
                                Term::prefix(contravariant_half(p.action()), body));
        return Term::prefix(p.action(), std::move(body));
    }
    case Term::Kind::Choice: return Term::choice(encode_split(p.left(), sig), encode_split(p.right(), sig));
    }
    return p;
}

Lts encode_mts(const Lts& lts)
{
    const Signature& sig = lts.signature();
    const std::string u = fresh_state(lts);
    std::vector<Edge> edges;
    for (const auto& e : lts.edges()) {
        edges.push_back({e.source, contravariant_half(e.action), e.target});
        if (sig.is_forward(e.action))
            edges.push_back({e.source, covariant_half(e.action), e.target});
    }
    for (const auto& p : lts.states())
        for (const auto& a : sig.covariant())
            edges.push_back({p, contravariant_half(a), u});
    for (const auto& d : sig.actions())
        edges.push_back({u, contravariant_half(d), u});
    std::vector<std::string> states = lts.states();
    states.push_back(u);
    return Lts(mts_signature(sig), std::move(states), lts.initial(), std::move(edges));
}

Lts adjoin_omega_sink(const Lts& lts, std::string_view contravariant_action)
{
    const Signature& sig = lts.signature();
    const std::string label(contravariant_action);
    if (!sig.contravariant().contains(label))
        throw Error(ErrorCode::PreconditionViolated, "'" + label + "' is not a contravariant action", label);
    if (std::any_of(lts.edges().begin(), lts.edges().end(), [&](const Edge& e) { return e.action == label; }))
        throw Error(ErrorCode::PreconditionViolated, "the system already has a '" + label + "' transition", label);
    const std::string u = fresh_state(lts);
    std::vector<Edge> edges = lts.edges();
    for (const auto& p : lts.states())
        edges.push_back({p, label, u});
    for (const auto& b : sig.contravariant())
        edges.push_back({u, b, u});
    std::vector<std::string> states = lts.states();
    states.push_back(u);
    return Lts(sig, std::move(states), lts.initial(), std::move(edges));
}

Formula translate_formula(const Formula& f, const Signature& sig)
{
    switch (f.kind()) {
    case Formula::Kind::Bot:
    case Formula::Kind::Top: return f;
    case Formula::Kind::And:
    case Formula::Kind::Or: {
        std::vector<Formula> parts;
        for (const auto& g : f.operands())
            parts.push_back(translate_formula(g, sig));
        return f.kind() == Formula::Kind::And ? Formula::conj(std::move(parts)) : Formula::disj(std::move(parts));
    }
    case Formula::Kind::Diamond:
    case Formula::Kind::Box: {
        const auto& a = f.action();
        const bool diamond = f.kind() == Formula::Kind::Diamond;
        if (!sig.contains(a) || (diamond ? !sig.is_forward(a) : !sig.is_backward(a)))
            throw Error(ErrorCode::SignatureMismatch, "modality '" + f.text() + "' does not fit the signature", a);
        Formula body = translate_formula(f.body(), sig);
        if (!sig.bivariant().contains(a))
            return diamond ? Formula::diamond(a, std::move(body)) : Formula::box(a, std::move(body));
        return diamond ? Formula::diamond(covariant_half(a), std::move(body))
                       : Formula::box(contravariant_half(a), std::move(body));
    }
    }
    return f;
}

Lts rename_to_uniform(const Lts& lts, const Signature& sig, EncodingImage which)
{
    const Signature expected = which == EncodingImage::Mts ? mts_signature(sig) : split_signature(sig);
    if (!(lts.signature() == expected))
        throw Error(ErrorCode::SignatureMismatch, "system is not over the signature of the named encoding");
    std::vector<Edge> edges = lts.edges();
    if (which == EncodingImage::Split) {
        for (auto& e : edges) {
            if (sig.covariant().contains(e.action))
                e.action = covariant_half(e.action);
            else if (sig.contravariant().contains(e.action))
                e.action = contravariant_half(e.action);
        }
    }
    return Lts(uniform_signature(sig), lts.states(), lts.initial(), std::move(edges));
}

bool is_representation(const Term& p, const Signature& sig)
{
    const Signature split = split_signature(sig);
    const Lts lts = build_lts(p, split);
    // (state, bivariant action) -> targets, for each half.
    std::map<std::pair<std::string, std::string>, std::set<std::string>> cov;
    std::map<std::pair<std::string, std::string>, std::set<std::string>> contra;
    for (const auto& c : sig.bivariant()) {
        const std::string r = covariant_half(c);
        const std::string l = contravariant_half(c);
        for (const auto& e : lts.edges()) {
            if (e.action == r)
                cov[{e.source, c}].insert(e.target);
            else if (e.action == l)
                contra[{e.source, c}].insert(e.target);
        }
    }
    return cov == contra;
}

namespace {

class Rebuilder {
public:
    explicit Rebuilder(const Signature& sig) : sig_(sig), split_(split_signature(sig)) {}

    const Signature& split() const { return split_; }

    // p is a w-free term over the split signature; the result is over sig.
    Term operator()(const Term& p)
    {
        std::map<std::string, std::vector<Term>> by_action;
        for (const auto& s : p.summands()) {
            if (s.is_omega())
                throw Error(ErrorCode::OmegaInBivariantTerm, "reconstruction needs a w-free term", p.text());
            if (s.kind() == Term::Kind::Prefix)
                by_action[s.action()].push_back(s.body());
        }
        // Dominated summands do not change the equivalence class: keep the
        // greatest derivatives of covariant actions, the least of
        // contravariant ones.
        for (auto& [x, bodies] : by_action)
            bodies = extremal(bodies, split_.covariant().contains(x));

        std::vector<Term> summands;
        for (const auto& [x, bodies] : by_action) {
            if (!sig_.contains(x))
                continue;
            for (const auto& body : bodies)
                summands.push_back(Term::prefix(x, (*this)(body)));
        }
        // Pair up the halves of each bivariant action: every surviving c^r
        // derivative gets a c^l partner and vice versa.
        for (const auto& c : sig_.bivariant()) {
            std::vector<Term> bodies;
            for (const auto& half : {covariant_half(c), contravariant_half(c)})
                if (auto it = by_action.find(half); it != by_action.end())
                    bodies.insert(bodies.end(), it->second.begin(), it->second.end());
            for (const auto& body : distinct_classes(bodies))
                summands.push_back(Term::prefix(c, (*this)(body)));
        }
        return Term::sum(std::move(summands));
    }

private:
    // Members not strictly dominated (above, for `keep_greatest`, else
    // below) by another member; one representative per equivalence class,
    // the canonically first.
    std::vector<Term> extremal(std::vector<Term> bodies, bool keep_greatest) const
    {
        std::sort(bodies.begin(), bodies.end());
        bodies.erase(std::unique(bodies.begin(), bodies.end()), bodies.end());
        if (bodies.size() <= 1)
            return bodies;
        const Lts lts = build_lts(bodies, split_);
        const SimulationPreorder pre(lts);
        std::vector<std::size_t> idx;
        for (const auto& b : bodies)
            idx.push_back(lts.index_of(b.text()));
        auto below = [&](std::size_t i, std::size_t j) {
            return keep_greatest ? pre.holds(idx[i], idx[j]) : pre.holds(idx[j], idx[i]);
        };
        std::vector<Term> kept;
        for (std::size_t j = 0; j < bodies.size(); ++j) {
            bool beaten = false;
            for (std::size_t i = 0; i < bodies.size() && !beaten; ++i)
                if (i != j && below(j, i))
                    beaten = !below(i, j) || i < j;
            if (!beaten)
                kept.push_back(bodies[j]);
        }
        return kept;
    }

    std::vector<Term> distinct_classes(std::vector<Term> bodies) const
    {
        std::sort(bodies.begin(), bodies.end());
        bodies.erase(std::unique(bodies.begin(), bodies.end()), bodies.end());
        if (bodies.size() <= 1)
            return bodies;
        const Lts lts = build_lts(bodies, split_);
        const SimulationPreorder pre(lts);
        std::vector<Term> kept;
        std::vector<std::size_t> kept_idx;
        for (const auto& b : bodies) {
            const std::size_t j = lts.index_of(b.text());
            const bool dup = std::any_of(kept_idx.begin(), kept_idx.end(),
                                         [&](std::size_t i) { return pre.holds(i, j) && pre.holds(j, i); });
            if (!dup) {
                kept.push_back(b);
                kept_idx.push_back(j);
            }
        }
        return kept;
    }

    const Signature& sig_;
    Signature split_;
};

} // namespace

Reconstruction reconstruct_bivariant(const Term& p, const Signature& sig)
{
    Rebuilder rebuild(sig);
    require_term_over(p, rebuild.split());
    if (p.is_omega() || p.is_nil())
        return p;
    if (p.contains_omega())
        throw Error(ErrorCode::OmegaInBivariantTerm, "reconstruction needs a w-free term", p.text());
    Term t = rebuild(p);
    Term image = encode_split(t, sig);
    if (cc_equivalent(p, image, rebuild.split()))
        return t;
    return NotRepresentable{p, image};
}

} // namespace ccrep
