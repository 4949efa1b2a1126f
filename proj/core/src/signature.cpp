#include "ccrep/signature.hpp"

#include "ccrep/error.hpp"

#include <algorithm>

namespace ccrep {

namespace {

bool is_action_char(char c) noexcept
{
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
           c == '^';
}

} // namespace

bool is_reserved_word(std::string_view word) noexcept
{
    return word == "0" || word == "w" || word == "tt" || word == "ff";
}

void validate_action_name(std::string_view name)
{
    if (name.empty() || !std::all_of(name.begin(), name.end(), is_action_char))
        throw Error(ErrorCode::InvalidActionName, "'" + std::string(name) + "' is not an action name",
                    std::string(name));
    if (is_reserved_word(name))
        throw Error(ErrorCode::InvalidActionName, "'" + std::string(name) + "' is a reserved word",
                    std::string(name));
}

Signature::Signature(ActionSet covariant, ActionSet contravariant, ActionSet bivariant)
    : covariant_(std::move(covariant)), contravariant_(std::move(contravariant)),
      bivariant_(std::move(bivariant))
{
    for (const ActionSet* set : {&covariant_, &contravariant_, &bivariant_})
        for (const auto& a : *set)
            validate_action_name(a);
    auto clash = [](const ActionSet& x, const ActionSet& y) {
        for (const auto& a : x)
            if (y.contains(a))
                throw Error(ErrorCode::DuplicateAction, "action '" + a + "' occurs in two classes", a);
    };
    clash(covariant_, contravariant_);
    clash(covariant_, bivariant_);
    clash(contravariant_, bivariant_);
}

std::optional<Variance> Signature::variance(std::string_view action) const
{
    if (covariant_.contains(action))
        return Variance::Covariant;
    if (contravariant_.contains(action))
        return Variance::Contravariant;
    if (bivariant_.contains(action))
        return Variance::Bivariant;
    return std::nullopt;
}

bool Signature::is_forward(std::string_view action) const
{
    return covariant_.contains(action) || bivariant_.contains(action);
}

bool Signature::is_backward(std::string_view action) const
{
    return contravariant_.contains(action) || bivariant_.contains(action);
}

std::vector<std::string> Signature::actions() const
{
    std::vector<std::string> all;
    all.insert(all.end(), covariant_.begin(), covariant_.end());
    all.insert(all.end(), contravariant_.begin(), contravariant_.end());
    all.insert(all.end(), bivariant_.begin(), bivariant_.end());
    std::sort(all.begin(), all.end());
    return all;
}

} // namespace ccrep
