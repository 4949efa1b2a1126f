#include "ccrep/characteristic.hpp"

#include "ccrep/error.hpp"
#include "ccrep/lts.hpp"

#include <algorithm>
#include <unordered_map>

namespace ccrep {

namespace {

class Builder {
public:
    explicit Builder(const Signature& sig) : sig_(sig) {}

    Formula operator()(const Term& p)
    {
        if (p.is_omega())
            return Formula::top();
        if (auto it = memo_.find(p.text()); it != memo_.end())
            return it->second;

        const auto moves = transitions(p, sig_);
        std::vector<Formula> conjuncts;
        for (const auto& t : moves)
            if (sig_.covariant().contains(t.action))
                conjuncts.push_back(Formula::diamond(t.action, (*this)(t.target)));
        for (const auto& b : sig_.contravariant()) {
            std::vector<Formula> options;
            for (const auto& t : moves)
                if (t.action == b)
                    options.push_back((*this)(t.target));
            dedupe(options);
            conjuncts.push_back(Formula::box(b, Formula::disj(std::move(options))));
        }
        dedupe(conjuncts);
        Formula chi = Formula::conj(std::move(conjuncts));
        memo_.emplace(p.text(), chi);
        return chi;
    }

private:
    static void dedupe(std::vector<Formula>& fs)
    {
        std::sort(fs.begin(), fs.end());
        fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
    }

    const Signature& sig_;
    std::unordered_map<std::string, Formula> memo_;
};

} // namespace

Formula char_formula(const Term& p, const Signature& sig)
{
    if (sig.has_bivariant())
        throw Error(ErrorCode::PreconditionViolated, "char_formula needs a signature without bivariant actions");
    require_term_over(p, sig);
    return Builder(sig)(p);
}

} // namespace ccrep
