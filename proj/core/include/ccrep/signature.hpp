#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ccrep {

enum class Variance { Covariant, Contravariant, Bivariant };

using ActionSet = std::set<std::string, std::less<>>;

// Partition of a finite action alphabet into covariant (A^r), contravariant
// (A^l) and bivariant (A^bi) actions. The three classes are disjoint.
class Signature {
public:
    Signature() = default;
    Signature(ActionSet covariant, ActionSet contravariant, ActionSet bivariant = {});

    [[nodiscard]] const ActionSet& covariant() const noexcept { return covariant_; }
    [[nodiscard]] const ActionSet& contravariant() const noexcept { return contravariant_; }
    [[nodiscard]] const ActionSet& bivariant() const noexcept { return bivariant_; }

    [[nodiscard]] std::optional<Variance> variance(std::string_view action) const;
    [[nodiscard]] bool contains(std::string_view action) const { return variance(action).has_value(); }
    [[nodiscard]] bool has_bivariant() const noexcept { return !bivariant_.empty(); }

    // Actions constrained by the left-to-right clause: A^r and A^bi.
    [[nodiscard]] bool is_forward(std::string_view action) const;
    // Actions constrained by the right-to-left clause: A^l and A^bi.
    [[nodiscard]] bool is_backward(std::string_view action) const;

    // All actions, sorted.
    [[nodiscard]] std::vector<std::string> actions() const;

    friend bool operator==(const Signature&, const Signature&) = default;

private:
    ActionSet covariant_;
    ActionSet contravariant_;
    ActionSet bivariant_;
};

// Throws InvalidActionName unless `name` is a nonempty word over
// [A-Za-z0-9_^] that is not one of the reserved tokens 0, w, tt, ff.
void validate_action_name(std::string_view name);

[[nodiscard]] bool is_reserved_word(std::string_view word) noexcept;

} // namespace ccrep
