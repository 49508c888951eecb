#pragma once

#include <concepts>
#include <memory>
#include <string>

#include "scopebind/indices.hpp"

namespace scopebind {

/// Anything that knows how many variables it binds. The count depends only on
/// the pattern's shape, never on the scope it appears in.
template <class P>
concept Sized = requires(const P& p) {
    { p.size() } -> std::same_as<SizeWitness>;
};

/// Binds a fixed number of variables at once. The first value supplied at
/// instantiation becomes index 0.
class NVars {
public:
    constexpr explicit NVars(std::uint32_t count) : count_{count} {}
    [[nodiscard]] constexpr SizeWitness size() const { return count_; }
    friend constexpr bool operator==(NVars, NVars) = default;

private:
    SizeWitness count_;
};

/// Nested tuple pattern: a single variable, or a pair of sub-patterns.
///
/// Variable numbering follows pattern matching: for pair(p1, p2) the variables
/// of p2 occupy the low indices and those of p1 sit above them.
class TuplePat {
public:
    static TuplePat var();
    static TuplePat pair(TuplePat left, TuplePat right);

    [[nodiscard]] SizeWitness size() const { return node_->size; }
    [[nodiscard]] bool is_var() const { return node_->left == nullptr; }
    [[nodiscard]] TuplePat left() const { return TuplePat(node_->left); }
    [[nodiscard]] TuplePat right() const { return TuplePat(node_->right); }

    friend bool operator==(const TuplePat& a, const TuplePat& b);

    [[nodiscard]] std::string show() const;

private:
    struct Node {
        std::shared_ptr<const Node> left;
        std::shared_ptr<const Node> right;
        SizeWitness size;
    };
    explicit TuplePat(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

static_assert(Sized<NVars>);
static_assert(Sized<TuplePat>);

}  // namespace scopebind
