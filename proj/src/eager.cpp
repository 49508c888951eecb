#include "scopebind/eager.hpp"

#include <string>

#include "scopebind/binders.hpp"
#include "scopebind/environment.hpp"

namespace scopebind::eager {

Subst identity(ScopeIndex scope) {
    return Subst::make(scope, scope, [scope](std::uint32_t i) { return Term::var(i, scope); });
}

Subst shift(ScopeIndex scope) {
    const ScopeIndex to = scope.succ();
    return Subst::make(scope, to, [to](std::uint32_t i) { return Term::var(i + 1, to); });
}

Subst cons(Term head, Subst tail) {
    if (head.scope() != tail.codomain) throw ScopeError("eager cons: head and tail scopes differ");
    const ScopeIndex domain = tail.domain.succ();
    const ScopeIndex codomain = tail.codomain;
    return Subst::make(domain, codomain, [head = std::move(head), tail = std::move(tail)](std::uint32_t i) {
                return i == 0 ? head : tail.at(i - 1);
            });
}

Subst from_env(const Env& e) {
    return Subst::make(e.domain(), e.codomain(), [e](std::uint32_t i) { return env_lookup(e, i); });
}

Subst up(Subst r) {
    const ScopeIndex domain = r.domain.succ();
    const ScopeIndex codomain = r.codomain.succ();
    Subst sh = shift(r.codomain);
    return Subst::make(domain, codomain, [r = std::move(r), sh = std::move(sh), codomain](std::uint32_t i) {
                if (i == 0) return Term::var(0, codomain);
                return apply(sh, r.at(i - 1));
            });
}

Subst up_by(Subst r, std::uint32_t k) {
    for (std::uint32_t i = 0; i < k; ++i) r = up(std::move(r));
    return r;
}

Subst comp(Subst first, Subst second) {
    if (first.codomain != second.domain) throw ScopeError("eager composition: scopes do not line up");
    const ScopeIndex domain = first.domain;
    const ScopeIndex codomain = second.codomain;
    return Subst::make(domain, codomain, [first = std::move(first), second = std::move(second)](std::uint32_t i) {
                return apply(second, first.at(i));
            });
}

namespace {

template <class B>
Term open_pat(const B& b) {
    const std::uint32_t k = b.size().value;
    if (b.suspended().is_identity()) return b.body();
    return apply(up_by(from_env(b.suspended()), k), b.body());
}

}  // namespace

Term open(const PatBinder<NVars>& b) { return open_pat(b); }
Term open(const PatBinder<TuplePat>& b) { return open_pat(b); }

Term open(const Binder1& b) {
    if (b.suspended().is_identity()) return b.body();
    return apply(up(from_env(b.suspended())), b.body());
}

Term apply(const Subst& r, const Term& t) {
    if (t.scope() != r.domain) {
        throw ScopeError("eager substitution from scope " + std::to_string(r.domain.value()) +
                         " applied to a term in scope " + std::to_string(t.scope().value()));
    }
    switch (t.kind()) {
        case TermKind::Var: {
            Term v = r.at(t.var_index().index());
            if (v.scope() != r.codomain) throw ScopeError("eager substitution produced a term in the wrong scope");
            return v;
        }
        case TermKind::Lam: return Term::lam(bind1(apply(up(r), open(t.lam_binder())), r.codomain));
        case TermKind::App: return Term::app(apply(r, t.fun()), apply(r, t.arg()));
        case TermKind::Bool: return Term::boolean(t.bool_value(), r.codomain);
        case TermKind::Pair: return Term::pair(apply(r, t.first()), apply(r, t.second()));
        case TermKind::Split: {
            const auto& b = t.split_binder();
            return Term::split(apply(r, t.scrutinee()),
                               bind_pat(b.pattern(), apply(up_by(r, 2), open_pat(b)), r.codomain));
        }
        case TermKind::LetPair: {
            const auto& b = t.let_binder();
            return Term::let_pair(apply(r, t.scrutinee()),
                                  bind_pat(b.pattern(), apply(up_by(r, b.size().value), open_pat(b)), r.codomain));
        }
    }
    throw ScopeError("unknown term kind");
}

Term instantiate(const Binder1& b, const Term& arg) {
    if (arg.scope() != b.scope()) throw ScopeError("eager instantiate: argument in the wrong scope");
    if (b.suspended().is_identity()) return apply(cons(arg, identity(b.scope())), b.body());
    return apply(cons(arg, from_env(b.suspended())), b.body());
}

}  // namespace scopebind::eager
