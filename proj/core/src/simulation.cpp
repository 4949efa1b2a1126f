#include "ccrep/simulation.hpp"

#include "ccrep/error.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <set>

namespace ccrep {

namespace {

// Adjacency in index form, with actions numbered and tagged by the clauses
// that constrain them.
struct Graph {
    struct Arc {
        std::size_t action;
        std::size_t target;
    };
    std::vector<std::vector<Arc>> out;
    std::vector<std::vector<std::size_t>> in; // predecessor states, any action
    std::vector<bool> forward;
    std::vector<bool> backward;
    std::size_t action_count = 0;

    explicit Graph(const Lts& lts)
    {
        const auto& sig = lts.signature();
        const auto actions = sig.actions();
        action_count = actions.size();
        for (const auto& a : actions) {
            forward.push_back(sig.is_forward(a));
            backward.push_back(sig.is_backward(a));
        }
        const std::size_t n = lts.states().size();
        out.resize(n);
        in.resize(n);
        for (const auto& e : lts.edges()) {
            const auto a = static_cast<std::size_t>(
                std::lower_bound(actions.begin(), actions.end(), e.action) - actions.begin());
            const std::size_t s = lts.index_of(e.source);
            const std::size_t t = lts.index_of(e.target);
            out[s].push_back({a, t});
            in[t].push_back(s);
        }
        for (auto& preds : in) {
            std::sort(preds.begin(), preds.end());
            preds.erase(std::unique(preds.begin(), preds.end()), preds.end());
        }
    }
};

// Does some x-successor of `from` stand in relation `rel(succ)`?
template <typename Rel>
bool has_matching(const Graph& g, std::size_t from, std::size_t action, Rel rel)
{
    for (const auto& arc : g.out[from])
        if (arc.action == action && rel(arc.target))
            return true;
    return false;
}

template <typename Rel>
bool pair_ok(const Graph& g, std::size_t p, std::size_t q, Rel related)
{
    for (const auto& arc : g.out[p]) {
        if (!g.forward[arc.action])
            continue;
        if (!has_matching(g, q, arc.action, [&](std::size_t q2) { return related(arc.target, q2); }))
            return false;
    }
    for (const auto& arc : g.out[q]) {
        if (!g.backward[arc.action])
            continue;
        if (!has_matching(g, p, arc.action, [&](std::size_t p2) { return related(p2, arc.target); }))
            return false;
    }
    return true;
}

} // namespace

SimulationPreorder::SimulationPreorder(const Lts& lts) : n_(lts.states().size()), bits_(n_ * n_, 1)
{
    const Graph g(lts);
    auto related = [this](std::size_t p, std::size_t q) { return bits_[p * n_ + q] != 0; };

    // Iterated deletion: a pair is re-examined only when one of the pairs
    // of its successors has been removed.
    std::deque<std::pair<std::size_t, std::size_t>> work;
    std::vector<unsigned char> queued(n_ * n_, 1);
    for (std::size_t p = 0; p < n_; ++p)
        for (std::size_t q = 0; q < n_; ++q)
            work.emplace_back(p, q);
    while (!work.empty()) {
        const auto [p, q] = work.front();
        work.pop_front();
        queued[p * n_ + q] = 0;
        if (!related(p, q) || pair_ok(g, p, q, related))
            continue;
        bits_[p * n_ + q] = 0;
        for (std::size_t pp : g.in[p])
            for (std::size_t qq : g.in[q])
                if (related(pp, qq) && !queued[pp * n_ + qq]) {
                    queued[pp * n_ + qq] = 1;
                    work.emplace_back(pp, qq);
                }
    }
}

bool simulates(const Lts& lts, std::string_view p, std::string_view q)
{
    const std::size_t i = lts.index_of(p);
    const std::size_t j = lts.index_of(q);
    return SimulationPreorder(lts).holds(i, j);
}

bool is_simulation(const Lts& lts, const SimulationRelation& r)
{
    const Graph g(lts);
    std::set<std::pair<std::size_t, std::size_t>> rel;
    for (const auto& [p, q] : r.pairs)
        rel.emplace(lts.index_of(p), lts.index_of(q));
    auto related = [&](std::size_t p, std::size_t q) { return rel.contains({p, q}); };
    return std::all_of(rel.begin(), rel.end(), [&](const auto& pq) { return pair_ok(g, pq.first, pq.second, related); });
}

namespace {

void require_bivariant_free(const Signature& sig, const char* op)
{
    if (sig.has_bivariant())
        throw Error(ErrorCode::PreconditionViolated,
                    std::string(op) + " needs a signature without bivariant actions");
}

} // namespace

bool detail::simulates_general(const Term& p, const Term& q, const Signature& sig)
{
    if (p == q) {
        require_term_over(p, sig);
        return true;
    }
    const std::array<Term, 2> roots{p, q};
    const Lts lts = build_lts(roots, sig);
    return SimulationPreorder(lts).holds(lts.index_of(p.text()), lts.index_of(q.text()));
}

bool simulates(const Term& p, const Term& q, const Signature& sig)
{
    require_bivariant_free(sig, "simulates");
    return detail::simulates_general(p, q, sig);
}

bool cc_equivalent(const Term& p, const Term& q, const Signature& sig)
{
    require_bivariant_free(sig, "cc_equivalent");
    if (p == q) {
        require_term_over(p, sig);
        return true;
    }
    const std::array<Term, 2> roots{p, q};
    const Lts lts = build_lts(roots, sig);
    const SimulationPreorder pre(lts);
    const std::size_t i = lts.index_of(p.text());
    const std::size_t j = lts.index_of(q.text());
    return pre.holds(i, j) && pre.holds(j, i);
}

std::optional<SimulationRelation> simulation_witness(const Term& p, const Term& q, const Signature& sig)
{
    require_bivariant_free(sig, "simulation_witness");
    const std::array<Term, 2> roots{p, q};
    const Lts lts = build_lts(roots, sig);
    const SimulationPreorder pre(lts);
    const std::size_t start_p = lts.index_of(p.text());
    const std::size_t start_q = lts.index_of(q.text());
    if (!pre.holds(start_p, start_q))
        return std::nullopt;

    // Pairs of same-action successors that remain related.
    const Graph g(lts);
    std::set<std::pair<std::size_t, std::size_t>> seen{{start_p, start_q}};
    std::deque<std::pair<std::size_t, std::size_t>> work{{start_p, start_q}};
    while (!work.empty()) {
        const auto [x, y] = work.front();
        work.pop_front();
        for (const auto& ax : g.out[x])
            for (const auto& ay : g.out[y])
                if (ax.action == ay.action && pre.holds(ax.target, ay.target) &&
                    seen.emplace(ax.target, ay.target).second)
                    work.emplace_back(ax.target, ay.target);
    }
    SimulationRelation r;
    for (const auto& [x, y] : seen)
        r.pairs.emplace_back(lts.states()[x], lts.states()[y]);
    std::sort(r.pairs.begin(), r.pairs.end());
    return r;
}

} // namespace ccrep
