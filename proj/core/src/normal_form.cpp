#include "ccrep/normal_form.hpp"

#include "ccrep/error.hpp"

#include <algorithm>
#include <unordered_map>

namespace ccrep {

namespace {

template <typename T>
void sort_unique(std::vector<T>& xs)
{
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

} // namespace

UnarySnf::UnarySnf(std::vector<Diamond> diamonds, Boxes boxes)
{
    std::sort(diamonds.begin(), diamonds.end(),
              [](const Diamond& x, const Diamond& y) { return std::tie(x.first, x.second) < std::tie(y.first, y.second); });
    diamonds.erase(std::unique(diamonds.begin(), diamonds.end()), diamonds.end());
    for (auto& [b, options] : boxes)
        sort_unique(options);

    std::vector<Formula> conjuncts;
    for (const auto& [a, u] : diamonds)
        conjuncts.push_back(Formula::diamond(a, u.formula()));
    for (const auto& [b, options] : boxes) {
        std::vector<Formula> alts;
        for (const auto& v : options)
            alts.push_back(v.formula());
        conjuncts.push_back(Formula::box(b, Formula::disj(std::move(alts))));
    }
    Formula f = Formula::conj(std::move(conjuncts));
    node_ = std::make_shared<const Node>(Node{false, std::move(diamonds), std::move(boxes), std::move(f)});
}

UnarySnf UnarySnf::top()
{
    static const UnarySnf t{std::make_shared<const Node>(Node{true, {}, {}, Formula::top()})};
    return t;
}

bool UnarySnf::is_top() const noexcept { return node_->top; }
const std::vector<UnarySnf::Diamond>& UnarySnf::diamonds() const noexcept { return node_->diamonds; }
const UnarySnf::Boxes& UnarySnf::boxes() const noexcept { return node_->boxes; }
const Formula& UnarySnf::formula() const noexcept { return node_->formula; }

Formula StrongNormalForm::formula() const
{
    std::vector<Formula> alts;
    alts.reserve(disjuncts.size());
    for (const auto& u : disjuncts)
        alts.push_back(u.formula());
    return Formula::disj(std::move(alts));
}

// ---------------------------------------------------------------------------
// simplify

namespace {

Formula simplify_and(std::vector<Formula> parts);
Formula simplify_or(std::vector<Formula> parts);

Formula simplify_diamond(const std::string& a, const Formula& body)
{
    if (body.is_bot())
        return Formula::bot();
    if (body.kind() == Formula::Kind::Or) {
        std::vector<Formula> alts;
        for (const auto& g : body.operands())
            alts.push_back(Formula::diamond(a, g));
        return simplify_or(std::move(alts));
    }
    return Formula::diamond(a, body);
}

Formula simplify_box(const std::string& b, const Formula& body)
{
    if (body.is_top())
        return Formula::top();
    return Formula::box(b, body);
}

// Operands are already simplified.
Formula simplify_and(std::vector<Formula> parts)
{
    std::vector<Formula> flat;
    for (auto& f : parts) {
        if (f.kind() == Formula::Kind::And)
            flat.insert(flat.end(), f.operands().begin(), f.operands().end());
        else
            flat.push_back(std::move(f));
    }
    std::vector<Formula> kept;
    std::map<std::string, std::vector<Formula>> boxes;
    for (auto& f : flat) {
        if (f.is_bot())
            return Formula::bot();
        if (f.is_top())
            continue;
        if (f.kind() == Formula::Kind::Box)
            boxes[f.action()].push_back(f.body());
        else
            kept.push_back(std::move(f));
    }
    for (auto& [b, bodies] : boxes) {
        sort_unique(bodies);
        Formula body = bodies.size() == 1 ? bodies.front() : simplify_and(std::move(bodies));
        Formula merged = simplify_box(b, body);
        if (merged.is_top())
            continue;
        kept.push_back(std::move(merged));
    }
    sort_unique(kept);
    return Formula::conj(std::move(kept));
}

Formula simplify_or(std::vector<Formula> parts)
{
    std::vector<Formula> flat;
    for (auto& f : parts) {
        if (f.kind() == Formula::Kind::Or)
            flat.insert(flat.end(), f.operands().begin(), f.operands().end());
        else
            flat.push_back(std::move(f));
    }
    std::vector<Formula> kept;
    for (auto& f : flat) {
        if (f.is_top())
            return Formula::top();
        if (!f.is_bot())
            kept.push_back(std::move(f));
    }
    sort_unique(kept);
    return Formula::disj(std::move(kept));
}

} // namespace

Formula simplify(const Formula& f)
{
    switch (f.kind()) {
    case Formula::Kind::Bot:
    case Formula::Kind::Top: return f;
    case Formula::Kind::And:
    case Formula::Kind::Or: {
        std::vector<Formula> parts;
        for (const auto& g : f.operands())
            parts.push_back(simplify(g));
        return f.kind() == Formula::Kind::And ? simplify_and(std::move(parts)) : simplify_or(std::move(parts));
    }
    case Formula::Kind::Diamond: return simplify_diamond(f.action(), simplify(f.body()));
    case Formula::Kind::Box: return simplify_box(f.action(), simplify(f.body()));
    }
    return f;
}

// ---------------------------------------------------------------------------
// strong normal form

namespace {

using Disjuncts = std::vector<UnarySnf>;

class Normalizer {
public:
    Normalizer(const Signature& sig, const SnfOptions& options) : sig_(sig), options_(options) {}

    std::size_t completed_boxes = 0;

    Disjuncts operator()(const Formula& f)
    {
        if (auto it = memo_.find(f.text()); it != memo_.end())
            return it->second;
        Disjuncts result = compute(f);
        memo_.emplace(f.text(), result);
        return result;
    }

private:
    Disjuncts compute(const Formula& f)
    {
        switch (f.kind()) {
        case Formula::Kind::Bot: return {};
        case Formula::Kind::Top: return {UnarySnf::top()};
        case Formula::Kind::Or: {
            Disjuncts all;
            for (const auto& g : f.operands()) {
                Disjuncts part = (*this)(g);
                all.insert(all.end(), part.begin(), part.end());
                check_limit(all.size());
            }
            return canonical(std::move(all));
        }
        case Formula::Kind::And: {
            Disjuncts acc{UnarySnf::top()};
            for (const auto& g : f.operands()) {
                const Disjuncts part = (*this)(g);
                Disjuncts next;
                for (const auto& x : acc)
                    for (const auto& y : part) {
                        next.push_back(conjoin(x, y));
                        check_limit(next.size());
                    }
                acc = canonical(std::move(next));
                if (acc.empty())
                    break;
            }
            return acc;
        }
        case Formula::Kind::Diamond: {
            // <a>(u1 | ... | un) = <a>u1 | ... | <a>un, each completed with [b]tt.
            Disjuncts out;
            for (const auto& u : (*this)(f.body())) {
                out.push_back(record({{f.action(), u}}, trivial_boxes()));
                completed_boxes += sig_.contravariant().size();
            }
            return canonical(std::move(out));
        }
        case Formula::Kind::Box: {
            UnarySnf::Boxes boxes = trivial_boxes();
            boxes[f.action()] = canonical((*this)(f.body()));
            completed_boxes += sig_.contravariant().size() - 1;
            return {record({}, std::move(boxes))};
        }
        }
        return {};
    }

    UnarySnf::Boxes trivial_boxes() const
    {
        UnarySnf::Boxes boxes;
        for (const auto& b : sig_.contravariant())
            boxes[b] = {UnarySnf::top()};
        return boxes;
    }

    static bool is_trivial(const Disjuncts& options) { return options.size() == 1 && options.front().is_top(); }

    // A record without diamonds whose boxes are all [b]tt is tt.
    static UnarySnf record(std::vector<UnarySnf::Diamond> diamonds, UnarySnf::Boxes boxes)
    {
        if (diamonds.empty() &&
            std::all_of(boxes.begin(), boxes.end(), [](const auto& kv) { return is_trivial(kv.second); }))
            return UnarySnf::top();
        return UnarySnf(std::move(diamonds), std::move(boxes));
    }

    UnarySnf conjoin(const UnarySnf& x, const UnarySnf& y)
    {
        if (x.is_top())
            return y;
        if (y.is_top())
            return x;
        std::vector<UnarySnf::Diamond> diamonds = x.diamonds();
        diamonds.insert(diamonds.end(), y.diamonds().begin(), y.diamonds().end());
        UnarySnf::Boxes boxes;
        for (const auto& b : sig_.contravariant()) {
            const Disjuncts& kx = x.boxes().at(b);
            const Disjuncts& ky = y.boxes().at(b);
            if (is_trivial(kx)) {
                boxes[b] = ky;
            } else if (is_trivial(ky)) {
                boxes[b] = kx;
            } else {
                // [b](\/X) & [b](\/Y) = [b] \/{x & y}
                Disjuncts merged;
                for (const auto& u : kx)
                    for (const auto& v : ky) {
                        merged.push_back(conjoin(u, v));
                        check_limit(merged.size());
                    }
                boxes[b] = canonical(std::move(merged));
            }
        }
        return record(std::move(diamonds), std::move(boxes));
    }

    // Sorted, duplicate-free; tt absorbs the other disjuncts.
    static Disjuncts canonical(Disjuncts ds)
    {
        if (std::any_of(ds.begin(), ds.end(), [](const UnarySnf& u) { return u.is_top(); }))
            return {UnarySnf::top()};
        sort_unique(ds);
        return ds;
    }

    void check_limit(std::size_t n) const
    {
        if (options_.max_disjuncts != 0 && n > options_.max_disjuncts)
            throw Error(ErrorCode::SnfLimitExceeded,
                        "normal form exceeds " + std::to_string(options_.max_disjuncts) + " disjuncts");
    }

    const Signature& sig_;
    const SnfOptions& options_;
    std::unordered_map<std::string, Disjuncts> memo_;
};

} // namespace

StrongNormalForm to_strong_normal_form(const Formula& f, const Signature& sig, const SnfOptions& options,
                                       SnfStats* stats)
{
    if (sig.has_bivariant())
        throw Error(ErrorCode::PreconditionViolated,
                    "to_strong_normal_form needs a signature without bivariant actions");
    require_formula_over(f, sig);
    Normalizer normalize(sig, options);
    StrongNormalForm snf{normalize(f)};
    if (stats != nullptr) {
        stats->disjuncts = snf.disjuncts.size();
        stats->modal_depth = snf.formula().modal_depth();
        stats->completed_boxes = normalize.completed_boxes;
    }
    return snf;
}

std::optional<UnarySnf> as_unary_snf(const Formula& f, const Signature& sig)
{
    if (f.is_top())
        return UnarySnf::top();

    std::vector<Formula> conjuncts;
    if (f.kind() == Formula::Kind::And)
        conjuncts.assign(f.operands().begin(), f.operands().end());
    else if (f.is_modal())
        conjuncts.push_back(f);
    else
        return std::nullopt;

    std::vector<UnarySnf::Diamond> diamonds;
    UnarySnf::Boxes boxes;
    for (const auto& c : conjuncts) {
        if (c.kind() == Formula::Kind::Diamond) {
            if (!sig.covariant().contains(c.action()))
                return std::nullopt;
            auto u = as_unary_snf(c.body(), sig);
            if (!u)
                return std::nullopt;
            diamonds.emplace_back(c.action(), std::move(*u));
        } else if (c.kind() == Formula::Kind::Box) {
            if (!sig.contravariant().contains(c.action()) || boxes.contains(c.action()))
                return std::nullopt;
            std::vector<UnarySnf> options;
            const Formula& body = c.body();
            if (body.kind() == Formula::Kind::Or) {
                for (const auto& g : body.operands()) {
                    auto u = as_unary_snf(g, sig);
                    if (!u)
                        return std::nullopt;
                    options.push_back(std::move(*u));
                }
            } else if (!body.is_bot()) {
                auto u = as_unary_snf(body, sig);
                if (!u)
                    return std::nullopt;
                options.push_back(std::move(*u));
            }
            boxes.emplace(c.action(), std::move(options));
        } else {
            return std::nullopt;
        }
    }
    if (boxes.size() != sig.contravariant().size())
        return std::nullopt;
    return UnarySnf(std::move(diamonds), std::move(boxes));
}

bool is_unary_snf(const Formula& f, const Signature& sig) { return as_unary_snf(f, sig).has_value(); }

} // namespace ccrep
