#include "ccrep/lts.hpp"

#include "ccrep/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace ccrep {

std::vector<Transition> transitions(const Term& p, const Signature& sig)
{
    std::vector<Transition> out;
    for_each_transition(p, sig, [&](const std::string& a, const Term& t) { out.push_back({a, t}); });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Lts::Lts(Signature sig, std::vector<std::string> states, std::string initial, std::vector<Edge> edges)
    : sig_(std::move(sig)), states_(std::move(states)), initial_(std::move(initial)), edges_(std::move(edges))
{
    std::sort(states_.begin(), states_.end());
    states_.erase(std::unique(states_.begin(), states_.end()), states_.end());
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    if (!has_state(initial_))
        throw Error(ErrorCode::PreconditionViolated, "initial state '" + initial_ + "' is not a state", initial_);
    for (const auto& e : edges_) {
        if (!has_state(e.source))
            throw Error(ErrorCode::PreconditionViolated, "edge source '" + e.source + "' is not a state", e.source);
        if (!has_state(e.target))
            throw Error(ErrorCode::PreconditionViolated, "edge target '" + e.target + "' is not a state", e.target);
        if (!sig_.contains(e.action))
            throw Error(ErrorCode::SignatureMismatch, "edge label '" + e.action + "' is not in the signature",
                        e.action);
    }
}

bool Lts::has_state(std::string_view s) const { return std::binary_search(states_.begin(), states_.end(), s); }

std::size_t Lts::index_of(std::string_view s) const
{
    auto it = std::lower_bound(states_.begin(), states_.end(), s);
    if (it == states_.end() || *it != s)
        throw Error(ErrorCode::PreconditionViolated, "no state named '" + std::string(s) + "'", std::string(s));
    return static_cast<std::size_t>(it - states_.begin());
}

Lts build_lts(const Term& p, const Signature& sig) { return build_lts(std::span<const Term>(&p, 1), sig); }

Lts build_lts(std::span<const Term> roots, const Signature& sig)
{
    if (roots.empty())
        throw Error(ErrorCode::PreconditionViolated, "build_lts needs at least one root");
    for (const auto& r : roots)
        require_term_over(r, sig);

    std::unordered_set<std::string> seen;
    std::deque<Term> work;
    std::vector<std::string> states;
    std::vector<Edge> edges;
    for (const auto& r : roots)
        if (seen.insert(r.text()).second)
            work.push_back(r);
    while (!work.empty()) {
        Term s = std::move(work.front());
        work.pop_front();
        states.push_back(s.text());
        for_each_transition(s, sig, [&](const std::string& a, const Term& t) {
            edges.push_back({s.text(), a, t.text()});
            if (seen.insert(t.text()).second)
                work.push_back(t);
        });
    }
    return Lts(sig, std::move(states), roots.front().text(), std::move(edges));
}

namespace {

nlohmann::json action_array(const ActionSet& set) { return nlohmann::json(std::vector<std::string>(set.begin(), set.end())); }

ActionSet action_set(const nlohmann::json& j)
{
    ActionSet out;
    for (const auto& a : j)
        out.insert(a.get<std::string>());
    return out;
}

} // namespace

std::string to_json(const Lts& lts, int indent)
{
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : lts.edges())
        edges.push_back({e.source, e.action, e.target});
    nlohmann::json doc;
    doc["states"] = lts.states();
    doc["initial"] = lts.initial();
    doc["edges"] = std::move(edges);
    doc["signature"] = {{"r", action_array(lts.signature().covariant())},
                        {"l", action_array(lts.signature().contravariant())},
                        {"bi", action_array(lts.signature().bivariant())}};
    return doc.dump(indent);
}

Lts lts_from_json(std::string_view text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::Syntax, std::string("malformed LTS document: ") + e.what());
    }
    try {
        const auto& sig = doc.at("signature");
        Signature signature(action_set(sig.at("r")), action_set(sig.at("l")),
                            sig.contains("bi") ? action_set(sig.at("bi")) : ActionSet{});
        std::vector<Edge> edges;
        for (const auto& e : doc.at("edges")) {
            if (!e.is_array() || e.size() != 3)
                throw Error(ErrorCode::Syntax, "an edge must be a [source, action, target] triple");
            edges.push_back({e[0].get<std::string>(), e[1].get<std::string>(), e[2].get<std::string>()});
        }
        return Lts(std::move(signature), doc.at("states").get<std::vector<std::string>>(),
                   doc.at("initial").get<std::string>(), std::move(edges));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::Syntax, std::string("malformed LTS document: ") + e.what());
    }
}

Lts disjoint_union(const Lts& left, std::string_view left_tag, const Lts& right, std::string_view right_tag)
{
    if (!(left.signature() == right.signature()))
        throw Error(ErrorCode::SignatureMismatch, "cannot join systems over different signatures");
    std::vector<std::string> states;
    std::vector<Edge> edges;
    auto add = [&](const Lts& x, std::string_view tag) {
        const std::string t(tag);
        for (const auto& s : x.states())
            states.push_back(t + s);
        for (const auto& e : x.edges())
            edges.push_back({t + e.source, e.action, t + e.target});
    };
    add(left, left_tag);
    add(right, right_tag);
    if (std::unordered_set<std::string>(states.begin(), states.end()).size() != states.size())
        throw Error(ErrorCode::PreconditionViolated, "state tags do not separate the two systems");
    return Lts(left.signature(), std::move(states), std::string(left_tag) + left.initial(), std::move(edges));
}

} // namespace ccrep
