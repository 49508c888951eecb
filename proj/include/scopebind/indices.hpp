#pragma once

// Scope sizes and bounded de Bruijn indices.
//
// A ScopeIndex counts the variables in scope; a BoundedIndex is an index that
// is strictly smaller than its bound. Bounds are carried at runtime and checked
// on construction, so an out-of-scope index can never be built.

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace scopebind {

/// Raised whenever a scope obligation is violated (index out of bounds,
/// mismatched environment domains, ill-scoped term construction, ...).
class ScopeError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class ScopeIndex {
public:
    constexpr ScopeIndex() = default;
    constexpr explicit ScopeIndex(std::uint32_t value) : value_(value) {}

    [[nodiscard]] constexpr std::uint32_t value() const { return value_; }
    [[nodiscard]] constexpr ScopeIndex succ() const { return ScopeIndex(value_ + 1); }

    friend constexpr ScopeIndex operator+(ScopeIndex a, ScopeIndex b) {
        return ScopeIndex(a.value_ + b.value_);
    }
    friend constexpr ScopeIndex operator+(ScopeIndex a, std::uint32_t k) {
        return ScopeIndex(a.value_ + k);
    }
    friend constexpr auto operator<=>(ScopeIndex, ScopeIndex) = default;

    friend std::ostream& operator<<(std::ostream& os, ScopeIndex s) { return os << s.value_; }

private:
    std::uint32_t value_ = 0;
};

/// Runtime stand-in for a pattern's variable count.
struct SizeWitness {
    std::uint32_t value = 0;

    [[nodiscard]] constexpr ScopeIndex as_scope() const { return ScopeIndex(value); }
    friend constexpr auto operator<=>(SizeWitness, SizeWitness) = default;
};

class BoundedIndex {
public:
    /// Throws ScopeError unless index < bound.
    static BoundedIndex make(std::uint32_t index, ScopeIndex bound) {
        if (index >= bound.value()) {
            throw ScopeError("index " + std::to_string(index) + " is not below bound " +
                             std::to_string(bound.value()));
        }
        return BoundedIndex(index, bound);
    }

    [[nodiscard]] constexpr std::uint32_t index() const { return index_; }
    [[nodiscard]] constexpr ScopeIndex bound() const { return bound_; }

    friend constexpr bool operator==(BoundedIndex, BoundedIndex) = default;

    friend std::ostream& operator<<(std::ostream& os, BoundedIndex i) {
        return os << i.index_ << '/' << i.bound_;
    }

private:
    constexpr BoundedIndex(std::uint32_t index, ScopeIndex bound) : index_(index), bound_(bound) {}

    std::uint32_t index_;
    ScopeIndex bound_;
};

/// Index 0 in a non-empty scope. Scope 0 has no indices at all.
inline BoundedIndex idx_zero(ScopeIndex bound) {
    if (bound.value() == 0) throw ScopeError("no index exists in the empty scope");
    return BoundedIndex::make(0, bound);
}

inline BoundedIndex idx_succ(BoundedIndex i) {
    return BoundedIndex::make(i.index() + 1, i.bound().succ());
}

/// Same index, viewed in a scope larger by `by`.
inline BoundedIndex idx_weaken(BoundedIndex i, std::uint32_t by) {
    return BoundedIndex::make(i.index(), i.bound() + by);
}

}  // namespace scopebind
