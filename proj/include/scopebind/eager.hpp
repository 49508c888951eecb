#pragma once

// Eager capture-avoiding substitution.
//
// Pushes a substitution all the way through a term, lifting it under every
// binder it meets and shifting every substituted value it carries across a
// binder. This is the slow, obviously-correct algorithm: the substitution
// evaluator is built on it and the tests use it as a referee for the delayed
// operations. Terms produced here always carry identity binder environments.

#include <cstdint>
#include <functional>
#include <memory>

#include "scopebind/binders.hpp"
#include "scopebind/core.hpp"

namespace scopebind::eager {

/// A substitution as a plain function from indices of `domain` to terms in
/// `codomain`. Nothing is cached.
struct Subst {
    ScopeIndex domain;
    ScopeIndex codomain;
    std::shared_ptr<const std::function<Term(std::uint32_t)>> fn;

    static Subst make(ScopeIndex domain, ScopeIndex codomain, std::function<Term(std::uint32_t)> f) {
        return {domain, codomain, std::make_shared<const std::function<Term(std::uint32_t)>>(std::move(f))};
    }
    [[nodiscard]] Term at(std::uint32_t i) const { return (*fn)(i); }
};

Subst identity(ScopeIndex scope);
Subst shift(ScopeIndex scope);
/// Index 0 maps to `head`, i+1 to tail(i).
Subst cons(Term head, Subst tail);
/// Reads an Env pointwise.
Subst from_env(const Env& e);
/// 0 stays put; every other value is shifted by a full traversal.
Subst up(Subst r);
Subst up_by(Subst r, std::uint32_t k);
/// Sequential composition, applying `second` to each result of `first`.
Subst comp(Subst first, Subst second);

Term apply(const Subst& r, const Term& t);

/// Body of a Lam binder with its suspended environment pushed in eagerly.
Term open(const Binder1& b);
Term open(const PatBinder<NVars>& b);
Term open(const PatBinder<TuplePat>& b);
/// Substitutes `arg` for the bound variable.
Term instantiate(const Binder1& b, const Term& arg);

}  // namespace scopebind::eager
