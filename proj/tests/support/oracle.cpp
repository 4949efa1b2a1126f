#include "oracle.hpp"

#include <algorithm>
#include <set>

namespace ccrep::testing {

namespace {

void collect(const Term& p, const Signature& sig, std::vector<std::pair<std::string, Term>>& out)
{
    switch (p.kind()) {
    case Term::Kind::Nil:
        return;
    case Term::Kind::Omega:
        for (const auto& b : sig.contravariant())
            out.emplace_back(b, p);
        return;
    case Term::Kind::Prefix:
        out.emplace_back(p.action(), p.body());
        return;
    case Term::Kind::Choice:
        collect(p.left(), sig, out);
        collect(p.right(), sig, out);
        return;
    }
}

bool forward(const Signature& sig, const std::string& a)
{
    return sig.covariant().count(a) > 0 || sig.bivariant().count(a) > 0;
}

bool backward(const Signature& sig, const std::string& a)
{
    return sig.contravariant().count(a) > 0 || sig.bivariant().count(a) > 0;
}

struct Search {
    const Signature& sig;
    std::set<std::pair<std::string, std::string>> assumed;
    std::set<std::pair<std::string, std::string>> refuted;

    bool run(const Term& p, const Term& q)
    {
        const auto key = std::make_pair(p.text(), q.text());
        if (assumed.count(key) > 0)
            return true;
        if (refuted.count(key) > 0)
            return false;
        assumed.insert(key);
        const auto pm = moves(p, sig);
        const auto qm = moves(q, sig);
        bool ok = true;
        for (const auto& [a, p1] : pm) {
            if (!forward(sig, a))
                continue;
            bool matched = false;
            for (const auto& [a2, q1] : qm)
                if (a2 == a && run(p1, q1)) {
                    matched = true;
                    break;
                }
            if (!matched) {
                ok = false;
                break;
            }
        }
        if (ok)
            for (const auto& [b, q1] : qm) {
                if (!backward(sig, b))
                    continue;
                bool matched = false;
                for (const auto& [b2, p1] : pm)
                    if (b2 == b && run(p1, q1)) {
                        matched = true;
                        break;
                    }
                if (!matched) {
                    ok = false;
                    break;
                }
            }
        assumed.erase(key);
        // Only refutations are cached: they never depend on optimistic assumptions.
        if (!ok)
            refuted.insert(key);
        return ok;
    }
};

RawF make(Raw::Kind k, std::string a = {}, RawF l = nullptr, RawF r = nullptr)
{
    auto n = std::make_shared<Raw>();
    n->kind = k;
    n->action = std::move(a);
    n->l = std::move(l);
    n->r = std::move(r);
    return n;
}

} // namespace

std::vector<std::pair<std::string, Term>> moves(const Term& p, const Signature& sig)
{
    std::vector<std::pair<std::string, Term>> out;
    collect(p, sig, out);
    return out;
}

bool ref_simulates(const Term& p, const Term& q, const Signature& sig)
{
    Search s{sig, {}, {}};
    return s.run(p, q);
}

bool ref_equivalent(const Term& p, const Term& q, const Signature& sig)
{
    return ref_simulates(p, q, sig) && ref_simulates(q, p, sig);
}

RawF rbot() { return make(Raw::Kind::Bot); }
RawF rtop() { return make(Raw::Kind::Top); }
RawF rand_(RawF l, RawF r) { return make(Raw::Kind::And, {}, std::move(l), std::move(r)); }
RawF ror(RawF l, RawF r) { return make(Raw::Kind::Or, {}, std::move(l), std::move(r)); }
RawF rdia(std::string a, RawF body) { return make(Raw::Kind::Dia, std::move(a), std::move(body)); }
RawF rbox(std::string b, RawF body) { return make(Raw::Kind::Box, std::move(b), std::move(body)); }

bool ref_satisfies(const Term& p, const RawF& f, const Signature& sig)
{
    switch (f->kind) {
    case Raw::Kind::Bot:
        return false;
    case Raw::Kind::Top:
        return true;
    case Raw::Kind::And:
        return ref_satisfies(p, f->l, sig) && ref_satisfies(p, f->r, sig);
    case Raw::Kind::Or:
        return ref_satisfies(p, f->l, sig) || ref_satisfies(p, f->r, sig);
    case Raw::Kind::Dia:
        for (const auto& [a, p1] : moves(p, sig))
            if (a == f->action && ref_satisfies(p1, f->l, sig))
                return true;
        return false;
    case Raw::Kind::Box:
        for (const auto& [b, p1] : moves(p, sig))
            if (b == f->action && !ref_satisfies(p1, f->l, sig))
                return false;
        return true;
    }
    return false;
}

std::size_t raw_depth(const RawF& f)
{
    switch (f->kind) {
    case Raw::Kind::And:
    case Raw::Kind::Or:
        return std::max(raw_depth(f->l), raw_depth(f->r));
    case Raw::Kind::Dia:
    case Raw::Kind::Box:
        return 1 + raw_depth(f->l);
    default:
        return 0;
    }
}

Formula to_formula(const RawF& f)
{
    switch (f->kind) {
    case Raw::Kind::Bot:
        return Formula::bot();
    case Raw::Kind::Top:
        return Formula::top();
    case Raw::Kind::And:
        return Formula::conj({to_formula(f->l), to_formula(f->r)});
    case Raw::Kind::Or:
        return Formula::disj({to_formula(f->l), to_formula(f->r)});
    case Raw::Kind::Dia:
        return Formula::diamond(f->action, to_formula(f->l));
    case Raw::Kind::Box:
        return Formula::box(f->action, to_formula(f->l));
    }
    return Formula::top();
}

std::string raw_text(const RawF& f)
{
    switch (f->kind) {
    case Raw::Kind::Bot:
        return "ff";
    case Raw::Kind::Top:
        return "tt";
    case Raw::Kind::And:
        return "(" + raw_text(f->l) + " & " + raw_text(f->r) + ")";
    case Raw::Kind::Or:
        return "(" + raw_text(f->l) + " | " + raw_text(f->r) + ")";
    case Raw::Kind::Dia:
        return "<" + f->action + ">" + raw_text(f->l);
    case Raw::Kind::Box:
        return "[" + f->action + "]" + raw_text(f->l);
    }
    return {};
}

std::vector<Term> omega_free_terms(const Signature& sig, std::size_t depth, std::size_t width)
{
    std::vector<Term> level{Term::nil()};
    const auto actions = sig.actions();
    for (std::size_t d = 1; d <= depth; ++d) {
        std::vector<Term> summands{Term::nil()};
        for (const auto& a : actions)
            for (const auto& t : level)
                summands.push_back(Term::prefix(a, t));
        std::set<Term> next;
        // choose 1..width distinct summands by index combinations
        std::vector<std::size_t> idx;
        const auto rec = [&](auto&& self, std::size_t from) -> void {
            if (!idx.empty()) {
                std::vector<Term> parts;
                for (auto i : idx)
                    parts.push_back(summands[i]);
                next.insert(Term::sum(parts));
            }
            if (idx.size() == width)
                return;
            for (std::size_t i = from; i < summands.size(); ++i) {
                idx.push_back(i);
                self(self, i + 1);
                idx.pop_back();
            }
        };
        rec(rec, 0);
        level.assign(next.begin(), next.end());
    }
    return level;
}

} // namespace ccrep::testing
