#pragma once

// Handle types shared by every module: terms, environments and suspensions.
// All three are cheap-to-copy references to immutable, shared nodes.

#include <cstdint>
#include <memory>

#include "scopebind/indices.hpp"
#include "scopebind/lazy.hpp"

namespace scopebind {

class Binder1;
class NVars;
class TuplePat;
template <class Pattern>
class PatBinder;

namespace detail {
struct TermNode;
struct EnvNode;
}  // namespace detail

enum class TermKind : std::uint8_t { Var, Lam, App, Bool, Pair, Split, LetPair };

/// Untyped lambda-calculus term in a fixed scope. Every node records the scope
/// it lives in; constructors reject ill-scoped combinations.
class Term {
public:
    Term() = default;

    static Term var(BoundedIndex i);
    static Term var(std::uint32_t index, ScopeIndex scope) {
        return var(BoundedIndex::make(index, scope));
    }
    static Term lam(Binder1 body);
    static Term app(Term fun, Term arg);
    static Term boolean(bool value, ScopeIndex scope);
    static Term pair(Term first, Term second);
    static Term split(Term scrutinee, PatBinder<NVars> body);
    static Term let_pair(Term scrutinee, PatBinder<TuplePat> body);

    [[nodiscard]] bool valid() const { return node_ != nullptr; }
    [[nodiscard]] TermKind kind() const;
    [[nodiscard]] ScopeIndex scope() const;

    [[nodiscard]] BoundedIndex var_index() const;
    [[nodiscard]] const Binder1& lam_binder() const;
    [[nodiscard]] const Term& fun() const;
    [[nodiscard]] const Term& arg() const;
    [[nodiscard]] bool bool_value() const;
    [[nodiscard]] const Term& first() const;
    [[nodiscard]] const Term& second() const;
    [[nodiscard]] const Term& scrutinee() const;
    [[nodiscard]] const PatBinder<NVars>& split_binder() const;
    [[nodiscard]] const PatBinder<TuplePat>& let_binder() const;

    [[nodiscard]] bool is(TermKind k) const { return kind() == k; }
    [[nodiscard]] bool same_node(const Term& other) const { return node_ == other.node_; }

private:
    explicit Term(std::shared_ptr<const detail::TermNode> node) : node_(std::move(node)) {}
    std::shared_ptr<const detail::TermNode> node_;
};

/// A deferred term whose scope is known ahead of time; the scope is checked
/// again when the computation is forced.
class Suspension {
public:
    Suspension() = default;
    static Suspension ready(Term t);
    static Suspension deferred(ScopeIndex scope, std::function<Term()> thunk) {
        return Suspension(Lazy<Term>::deferred(std::move(thunk)), scope);
    }

    const Term& force() const;
    [[nodiscard]] ScopeIndex scope() const { return scope_; }
    [[nodiscard]] bool is_forced() const { return cell_.is_forced(); }

private:
    Suspension(Lazy<Term> cell, ScopeIndex scope) : cell_(std::move(cell)), scope_(scope) {}
    Lazy<Term> cell_;
    ScopeIndex scope_;
};

enum class EnvRepr : std::uint8_t { Functional, LazyDefunc, StrictDefunc };

/// Parallel substitution from scope `domain` to scope `codomain`.
class Env {
public:
    Env() = default;

    [[nodiscard]] ScopeIndex domain() const;
    [[nodiscard]] ScopeIndex codomain() const;
    [[nodiscard]] EnvRepr repr() const;
    /// Syntactic identity test (Inc 0, or the tagged functional identity).
    [[nodiscard]] bool is_identity() const;

    [[nodiscard]] const detail::EnvNode* node() const { return node_.get(); }
    [[nodiscard]] bool same_node(const Env& other) const { return node_ == other.node_; }

    explicit Env(std::shared_ptr<const detail::EnvNode> node) : node_(std::move(node)) {}

private:
    std::shared_ptr<const detail::EnvNode> node_;
};

}  // namespace scopebind
