#pragma once

// Binders that carry a suspended environment.
//
// A binder pairs a body with a delayed substitution. Substituting into a
// binder only composes environments; the body is untouched until someone
// asks for it with unbind or instantiate.

#include <concepts>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scopebind/core.hpp"
#include "scopebind/environment.hpp"
#include "scopebind/patterns.hpp"

namespace scopebind {

/// Single-variable binder: `body` lives in scope `suspended.domain + 1`, and
/// the binder as a whole lives in `suspended.codomain`.
class Binder1 {
public:
    Binder1(Env suspended, Term body);

    [[nodiscard]] const Env& suspended() const { return suspended_; }
    [[nodiscard]] const Term& body() const { return body_; }
    /// Scope the binder itself lives in.
    [[nodiscard]] ScopeIndex scope() const { return suspended_.codomain(); }

private:
    Env suspended_;
    Term body_;
};

Binder1 bind1(Term body, ScopeIndex scope);
/// The body with the suspended environment pushed in, in scope `scope() + 1`.
Term unbind(const Binder1& b);
Binder1 apply_binder(const Env& e, const Binder1& b);
Term instantiate1(const Binder1& b, Term arg);
Term instantiate1(const Binder1& b, Suspension arg);

/// Hands the extended environment and the raw body to `k` without applying
/// anything. Environment-passing evaluators are built on this.
template <class K>
decltype(auto) instantiate_with(const Binder1& b, Suspension arg, K&& k) {
    return std::forward<K>(k)(env_cons(std::move(arg), b.suspended()), b.body());
}

/// Multi-variable binder; the pattern decides how many variables.
template <class Pattern>
class PatBinder {
    static_assert(Sized<Pattern>);

public:
    PatBinder(Pattern pattern, Env suspended, Term body)
        : pattern_(std::move(pattern)), suspended_(std::move(suspended)), body_(std::move(body)) {
        if (body_.scope() != suspended_.domain() + pattern_.size().as_scope()) {
            throw ScopeError("pattern binder body is in scope " + std::to_string(body_.scope().value()) +
                             ", expected " +
                             std::to_string(suspended_.domain().value() + pattern_.size().value));
        }
    }

    [[nodiscard]] const Pattern& pattern() const { return pattern_; }
    [[nodiscard]] const Env& suspended() const { return suspended_; }
    [[nodiscard]] const Term& body() const { return body_; }
    [[nodiscard]] ScopeIndex scope() const { return suspended_.codomain(); }
    [[nodiscard]] SizeWitness size() const { return pattern_.size(); }

private:
    Pattern pattern_;
    Env suspended_;
    Term body_;
};

template <Sized P>
PatBinder<P> bind_pat(P pattern, Term body, ScopeIndex scope) {
    return PatBinder<P>(std::move(pattern), env_id(scope), std::move(body));
}

template <Sized P>
Term unbind_pat(const PatBinder<P>& b) {
    return apply_opt(env_up_by(b.suspended(), b.size().value), b.body());
}

template <Sized P>
PatBinder<P> apply_binder(const Env& e, const PatBinder<P>& b) {
    return PatBinder<P>(b.pattern(), env_comp(b.suspended(), e), b.body());
}

namespace detail {
template <Sized P>
Env pattern_env(const PatBinder<P>& b, const Env& args) {
    if (args.domain().value() != b.size().value) {
        throw ScopeError("pattern binds " + std::to_string(b.size().value) + " variables but " +
                         std::to_string(args.domain().value()) + " values were supplied");
    }
    return env_append(args, b.suspended(), b.size());
}
}  // namespace detail

/// `args` maps each pattern variable to its value; its domain must equal the
/// pattern size and its codomain the binder's scope.
template <Sized P>
Term instantiate_pat(const PatBinder<P>& b, const Env& args) {
    return apply(detail::pattern_env(b, args), b.body());
}

template <Sized P, class K>
decltype(auto) instantiate_pat_with(const PatBinder<P>& b, const Env& args, K&& k) {
    return std::forward<K>(k)(detail::pattern_env(b, args), b.body());
}

// ---------------------------------------------------------------------------
// Telescopes

/// An element of a telescope: binds size() variables and may mention the
/// variables of scope().
template <class E>
concept TeleEntry = requires(const E& e) {
    { e.size() } -> std::same_as<SizeWitness>;
    { e.scope() } -> std::same_as<ScopeIndex>;
};

/// Sequence of entries where entry k lives in the scope extended by every
/// variable bound by entries 0..k-1.
template <TeleEntry E>
class Telescope {
public:
    Telescope() = default;

    [[nodiscard]] bool empty() const { return head_ == nullptr; }
    [[nodiscard]] SizeWitness total_size() const { return head_ ? head_->total : SizeWitness{0}; }
    /// Scope of the first entry; an empty telescope fits any scope.
    [[nodiscard]] std::optional<ScopeIndex> scope() const {
        if (!head_) return std::nullopt;
        return head_->entry.scope();
    }
    [[nodiscard]] const E& front() const { return head_->entry; }
    [[nodiscard]] Telescope rest() const { return Telescope(head_->rest); }

    template <TeleEntry F>
    friend Telescope<F> tele_cons(F entry, Telescope<F> rest);

private:
    struct Cell {
        E entry;
        std::shared_ptr<const Cell> rest;
        SizeWitness total;
    };
    explicit Telescope(std::shared_ptr<const Cell> c) : head_(std::move(c)) {}
    std::shared_ptr<const Cell> head_;
};

template <TeleEntry E>
Telescope<E> tele_nil() {
    return Telescope<E>();
}

template <TeleEntry E>
Telescope<E> tele_cons(E entry, Telescope<E> rest) {
    const ScopeIndex inner = entry.scope() + entry.size().as_scope();
    if (auto s = rest.scope(); s && *s != inner) {
        throw ScopeError("telescope entry binds into scope " + std::to_string(inner.value()) +
                         " but the rest of the telescope lives in scope " + std::to_string(s->value()));
    }
    const SizeWitness total{rest.total_size().value + entry.size().value};
    using Cell = typename Telescope<E>::Cell;
    return Telescope<E>(std::make_shared<const Cell>(Cell{std::move(entry), std::move(rest.head_), total}));
}

/// Left-to-right traversal; `visit(acc, entry, offset)` receives the number of
/// variables bound by the entries before this one.
template <TeleEntry E, class Acc, class F>
Acc tele_fold(const Telescope<E>& t, Acc init, F&& visit) {
    Acc acc = std::move(init);
    std::optional<ScopeIndex> base = t.scope();
    std::uint32_t offset = 0;
    for (Telescope<E> cur = t; !cur.empty(); cur = cur.rest()) {
        const E& e = cur.front();
        if (e.scope() != *base + offset) throw ScopeError("telescope entry out of scope");
        acc = visit(std::move(acc), e, SizeWitness{offset});
        offset += e.size().value;
    }
    if (offset != t.total_size().value) throw ScopeError("telescope size bookkeeping is inconsistent");
    return acc;
}

/// Minimal telescope entry: some names, all sharing one annotation term.
struct Decl {
    std::vector<std::string> names;
    Term annotation;

    [[nodiscard]] SizeWitness size() const { return SizeWitness{static_cast<std::uint32_t>(names.size())}; }
    [[nodiscard]] ScopeIndex scope() const { return annotation.scope(); }
};

static_assert(TeleEntry<Decl>);

}  // namespace scopebind
