#pragma once

// First-class delayed parallel substitutions.
//
// An Env maps every index of its domain scope to a term in its codomain scope.
// Three interchangeable representations exist:
//
//   Functional    closures; composition is plain function composition and
//                 nothing is ever simplified or cached beyond cons heads.
//   LazyDefunc    first-order constructors Inc(k) / Cons / Comp with smart
//                 composition; the tail of a distributed composition is
//                 computed on demand.
//   StrictDefunc  same constructors and rewrites, but the spine is built
//                 eagerly.
//
// In every representation the substituted values themselves are suspensions
// and are only computed when looked up.
//
// Nullary constructors (nil, id, shift) take the representation explicitly or
// from the thread's current default; every other operation inherits it from
// its arguments.

#include <cstdint>
#include <optional>
#include <string_view>

#include "scopebind/core.hpp"

namespace scopebind {

[[nodiscard]] EnvRepr default_env_repr();

/// Sets the thread's default representation for the lifetime of the guard.
class ScopedEnvRepr {
public:
    explicit ScopedEnvRepr(EnvRepr repr);
    ~ScopedEnvRepr();
    ScopedEnvRepr(const ScopedEnvRepr&) = delete;
    ScopedEnvRepr& operator=(const ScopedEnvRepr&) = delete;

private:
    EnvRepr saved_;
};

[[nodiscard]] std::string_view to_string(EnvRepr repr);
[[nodiscard]] std::optional<EnvRepr> parse_env_repr(std::string_view name);

/// Empty environment (domain 0) into `codomain`.
Env env_nil(ScopeIndex codomain, EnvRepr repr = default_env_repr());
Env env_cons(Term head, Env tail);
Env env_cons(Suspension head, Env tail);
Env env_id(ScopeIndex scope, EnvRepr repr = default_env_repr());
/// Maps i to Var (i+1); domain `scope`, codomain `scope + 1`.
Env env_shift(ScopeIndex scope, EnvRepr repr = default_env_repr());
/// Maps i to Var (i+k); domain `scope`, codomain `scope + k`.
Env env_shift_by(ScopeIndex scope, std::uint32_t k, EnvRepr repr = default_env_repr());
/// Sequential composition: look up in `first`, then apply `second`.
Env env_comp(const Env& first, const Env& second);
/// Lifts `e` under one binder: 0 stays put, everything else is shifted.
Env env_up(const Env& e);
/// env_up applied k times.
Env env_up_by(const Env& e, std::uint32_t k);
/// Indices below `low_size` come from `low`, the rest from `high`.
Env env_append(const Env& low, const Env& high, SizeWitness low_size);

Term env_lookup(const Env& e, BoundedIndex i);
inline Term env_lookup(const Env& e, std::uint32_t i) {
    return env_lookup(e, BoundedIndex::make(i, e.domain()));
}

/// Applies the substitution to a term. Binders are never traversed: the
/// environment is composed into their suspended environment instead.
Term apply(const Env& e, const Term& t);

/// Like apply, but returns `t` unchanged in constant time when `e` is
/// syntactically the identity.
Term apply_opt(const Env& e, const Term& t);

namespace stats {
/// Term nodes visited by apply on this thread.
std::uint64_t& apply_node_visits();
}  // namespace stats

}  // namespace scopebind
