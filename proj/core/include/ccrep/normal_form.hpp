#pragma once

#include "ccrep/formula.hpp"
#include "ccrep/signature.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ccrep {

// Unary strong normal form: either tt, or
//
//   /\_j <a_j>u_j  /\  /\_{b in A^l} [b] \/_{k in K_b} v_k
//
// with every u_j, v_k again unary strong normal forms. The box map is total
// over A^l when built by the normalizer; an empty K_b stands for [b]ff and
// K_b = {tt} for [b]tt. Diamonds and each K_b are sorted and duplicate-free.
class UnarySnf {
public:
    using Diamond = std::pair<std::string, UnarySnf>;
    using Boxes = std::map<std::string, std::vector<UnarySnf>, std::less<>>;

    UnarySnf() : UnarySnf(top()) {}
    UnarySnf(std::vector<Diamond> diamonds, Boxes boxes);

    [[nodiscard]] static UnarySnf top();

    [[nodiscard]] bool is_top() const noexcept;
    [[nodiscard]] const std::vector<Diamond>& diamonds() const noexcept;
    [[nodiscard]] const Boxes& boxes() const noexcept;

    // The formula this normal form denotes.
    [[nodiscard]] const Formula& formula() const noexcept;

    friend bool operator==(const UnarySnf& x, const UnarySnf& y) noexcept { return x.formula() == y.formula(); }
    friend std::strong_ordering operator<=>(const UnarySnf& x, const UnarySnf& y) noexcept
    {
        return x.formula() <=> y.formula();
    }

    struct Node;

private:
    explicit UnarySnf(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

struct UnarySnf::Node {
    bool top;
    std::vector<Diamond> diamonds;
    Boxes boxes;
    Formula formula;
};

// Finite disjunction of unary strong normal forms; no disjuncts means ff.
struct StrongNormalForm {
    std::vector<UnarySnf> disjuncts; // sorted, duplicate-free

    [[nodiscard]] Formula formula() const;
    friend bool operator==(const StrongNormalForm&, const StrongNormalForm&) = default;
};

struct SnfOptions {
    // Abort with SnfLimitExceeded once any intermediate disjunct set grows
    // beyond this many members. Zero means unlimited.
    std::size_t max_disjuncts = 0;
};

struct SnfStats {
    std::size_t disjuncts = 0;
    std::size_t modal_depth = 0;
    // Number of [b]tt conjuncts inserted to make box maps total.
    std::size_t completed_boxes = 0;
};

// Rewrites f with the unit and annihilator laws, [b]tt -> tt,
// [b]x & [b]y -> [b](x & y), <a>(x | y) -> <a>x | <a>y, <a>ff -> ff, and
// flattening / deduplication of & and |, until no rule applies.
[[nodiscard]] Formula simplify(const Formula& f);

// Equivalent strong normal form of no larger modal depth. Requires a
// signature without bivariant actions.
[[nodiscard]] StrongNormalForm to_strong_normal_form(const Formula& f, const Signature& sig,
                                                     const SnfOptions& options = {}, SnfStats* stats = nullptr);

// Reads f as a unary strong normal form: tt, or a conjunction of <a>u
// (a in A^r) and exactly one [b]body per b in A^l, where body is ff, a
// unary form, or a disjunction of unary forms.
[[nodiscard]] std::optional<UnarySnf> as_unary_snf(const Formula& f, const Signature& sig);
[[nodiscard]] bool is_unary_snf(const Formula& f, const Signature& sig);

} // namespace ccrep
