#include "scopebind/environment.hpp"

#include <string>

#include "scopebind/detail/nodes.hpp"
#include "scopebind/syntax.hpp"

namespace scopebind {

using detail::CompNode;
using detail::ConsNode;
using detail::EnvKind;
using detail::EnvNode;
using detail::FnNode;
using detail::IncNode;

namespace {

thread_local EnvRepr current_repr = EnvRepr::LazyDefunc;

const EnvNode& node_of(const Env& e) {
    if (e.node() == nullptr) throw ScopeError("null environment");
    return *e.node();
}

const IncNode* as_inc(const Env& e) {
    const EnvNode& n = node_of(e);
    return n.kind == EnvKind::Inc ? static_cast<const IncNode*>(&n) : nullptr;
}

const ConsNode* as_cons(const Env& e) {
    const EnvNode& n = node_of(e);
    return n.kind == EnvKind::Cons ? static_cast<const ConsNode*>(&n) : nullptr;
}

const CompNode* as_comp(const Env& e) {
    const EnvNode& n = node_of(e);
    return n.kind == EnvKind::Comp ? static_cast<const CompNode*>(&n) : nullptr;
}

Env make_inc(ScopeIndex domain, std::uint32_t amount, EnvRepr repr) {
    return Env(std::make_shared<const IncNode>(
        IncNode{{EnvKind::Inc, repr, domain, domain + amount}, amount}));
}

Env make_cons(Suspension head, Lazy<Env> tail, ScopeIndex domain, ScopeIndex codomain, EnvRepr repr) {
    return Env(std::make_shared<const ConsNode>(
        ConsNode{{EnvKind::Cons, repr, domain, codomain}, std::move(head), std::move(tail)}));
}

Env make_fn(ScopeIndex domain, ScopeIndex codomain, std::function<Term(std::uint32_t)> fn, bool identity = false) {
    return Env(std::make_shared<const FnNode>(
        FnNode{{EnvKind::Fn, EnvRepr::Functional, domain, codomain}, std::move(fn), identity}));
}

Lazy<Env> spine(EnvRepr repr, std::function<Env()> make) {
    if (repr == EnvRepr::LazyDefunc) return Lazy<Env>::deferred(std::move(make));
    return Lazy<Env>::ready(make());
}

void require_chain(const Env& first, const Env& second) {
    if (first.codomain() != second.domain()) {
        throw ScopeError("cannot compose an environment into scope " + std::to_string(first.codomain().value()) +
                         " with one from scope " + std::to_string(second.domain().value()));
    }
}

// Smart composition for the defunctionalized representations.
Env defunc_comp(const Env& s, const Env& t) {
    const EnvRepr repr = s.repr();
    if (s.domain().value() == 0) return make_inc(ScopeIndex(0), t.codomain().value(), repr);

    const IncNode* si = as_inc(s);
    if (si && si->amount == 0) return t;
    const IncNode* ti = as_inc(t);
    if (ti && ti->amount == 0) return s;
    if (si && ti) return make_inc(s.domain(), si->amount + ti->amount, repr);

    if (si) {
        if (const ConsNode* tc = as_cons(t)) {
            return defunc_comp(make_inc(s.domain(), si->amount - 1, repr), tc->tail.force());
        }
    }
    if (const CompNode* sc = as_comp(s)) {
        return defunc_comp(sc->first, defunc_comp(sc->second, t));
    }
    if (const ConsNode* cons = as_cons(s)) {
        Suspension v = cons->head;
        Suspension head = Suspension::deferred(t.codomain(), [v, t] { return apply(t, v.force()); });
        Lazy<Env> rest = cons->tail;
        return make_cons(std::move(head), spine(repr, [rest, t] { return defunc_comp(rest.force(), t); }),
                         s.domain(), t.codomain(), repr);
    }
    return Env(std::make_shared<const CompNode>(
        CompNode{{EnvKind::Comp, repr, s.domain(), t.codomain()}, s, t}));
}

Env defunc_append(const Env& low, const Env& high, std::uint32_t k) {
    if (k == 0) return high;
    const EnvRepr repr = low.repr();
    Suspension head;
    Lazy<Env> low_tail;
    if (const ConsNode* c = as_cons(low)) {
        head = c->head;
        low_tail = c->tail;
    } else {
        head = Suspension::deferred(low.codomain(), [low] { return env_lookup(low, 0); });
        low_tail = Lazy<Env>::ready(env_comp(make_inc(ScopeIndex(k - 1), 1, repr), low));
    }
    return make_cons(std::move(head),
                     spine(repr, [low_tail, high, k] { return defunc_append(low_tail.force(), high, k - 1); }),
                     ScopeIndex(k) + high.domain(), high.codomain(), repr);
}

}  // namespace

// ---------------------------------------------------------------------------

std::uint64_t& stats::suspension_forces() {
    thread_local std::uint64_t n = 0;
    return n;
}

std::uint64_t& stats::apply_node_visits() {
    thread_local std::uint64_t n = 0;
    return n;
}

EnvRepr default_env_repr() { return current_repr; }

ScopedEnvRepr::ScopedEnvRepr(EnvRepr repr) : saved_(current_repr) { current_repr = repr; }
ScopedEnvRepr::~ScopedEnvRepr() { current_repr = saved_; }

std::string_view to_string(EnvRepr repr) {
    switch (repr) {
        case EnvRepr::Functional: return "functional";
        case EnvRepr::LazyDefunc: return "lazy";
        case EnvRepr::StrictDefunc: return "strict";
    }
    return "?";
}

std::optional<EnvRepr> parse_env_repr(std::string_view name) {
    if (name == "functional") return EnvRepr::Functional;
    if (name == "lazy") return EnvRepr::LazyDefunc;
    if (name == "strict") return EnvRepr::StrictDefunc;
    return std::nullopt;
}

ScopeIndex Env::domain() const { return node_of(*this).domain; }
ScopeIndex Env::codomain() const { return node_of(*this).codomain; }
EnvRepr Env::repr() const { return node_of(*this).repr; }

bool Env::is_identity() const {
    const EnvNode& n = node_of(*this);
    switch (n.kind) {
        case EnvKind::Inc: return static_cast<const IncNode&>(n).amount == 0;
        case EnvKind::Fn: return static_cast<const FnNode&>(n).identity;
        default: return false;
    }
}

// ---------------------------------------------------------------------------

Env env_nil(ScopeIndex codomain, EnvRepr repr) {
    if (repr == EnvRepr::Functional) {
        return make_fn(
            ScopeIndex(0), codomain,
            [](std::uint32_t) -> Term { throw ScopeError("lookup in the empty environment"); },
            codomain.value() == 0);
    }
    return make_inc(ScopeIndex(0), codomain.value(), repr);
}

Env env_cons(Term head, Env tail) { return env_cons(Suspension::ready(std::move(head)), std::move(tail)); }

Env env_cons(Suspension head, Env tail) {
    if (head.scope() != tail.codomain()) {
        throw ScopeError("cons head is in scope " + std::to_string(head.scope().value()) +
                         " but the environment maps into scope " + std::to_string(tail.codomain().value()));
    }
    const ScopeIndex domain = tail.domain().succ();
    const ScopeIndex codomain = tail.codomain();
    if (tail.repr() == EnvRepr::Functional) {
        return make_fn(domain, codomain, [head = std::move(head), tail = std::move(tail)](std::uint32_t i) {
            return i == 0 ? head.force() : env_lookup(tail, i - 1);
        });
    }
    const EnvRepr repr = tail.repr();
    return make_cons(std::move(head), Lazy<Env>::ready(std::move(tail)), domain, codomain, repr);
}

Env env_id(ScopeIndex scope, EnvRepr repr) { return env_shift_by(scope, 0, repr); }

Env env_shift(ScopeIndex scope, EnvRepr repr) { return env_shift_by(scope, 1, repr); }

Env env_shift_by(ScopeIndex scope, std::uint32_t k, EnvRepr repr) {
    if (repr == EnvRepr::Functional) {
        const ScopeIndex target = scope + k;
        return make_fn(
            scope, target, [k, target](std::uint32_t i) { return Term::var(i + k, target); }, k == 0);
    }
    return make_inc(scope, k, repr);
}

Env env_comp(const Env& first, const Env& second) {
    require_chain(first, second);
    if (first.repr() == EnvRepr::Functional || second.repr() == EnvRepr::Functional) {
        return make_fn(first.domain(), second.codomain(),
                       [first, second](std::uint32_t i) { return apply(second, env_lookup(first, i)); });
    }
    return defunc_comp(first, second);
}

Env env_up(const Env& e) {
    const EnvRepr repr = e.repr();
    if (e.is_identity()) return env_id(e.domain().succ(), repr);
    const ScopeIndex codomain = e.codomain().succ();
    Suspension zero = Suspension::ready(Term::var(0, codomain));
    if (repr == EnvRepr::Functional) return env_cons(std::move(zero), env_comp(e, env_shift(e.codomain(), repr)));
    return make_cons(std::move(zero), spine(repr, [e, repr] { return env_comp(e, env_shift(e.codomain(), repr)); }),
                     e.domain().succ(), codomain, repr);
}

Env env_up_by(const Env& e, std::uint32_t k) {
    Env r = e;
    for (std::uint32_t i = 0; i < k; ++i) r = env_up(r);
    return r;
}

Env env_append(const Env& low, const Env& high, SizeWitness low_size) {
    if (low_size.value != low.domain().value()) {
        throw ScopeError("size witness " + std::to_string(low_size.value) + " does not match environment domain " +
                         std::to_string(low.domain().value()));
    }
    if (low.codomain() != high.codomain()) throw ScopeError("appended environments map into different scopes");
    const std::uint32_t k = low_size.value;
    if (low.repr() == EnvRepr::Functional || high.repr() == EnvRepr::Functional) {
        return make_fn(ScopeIndex(k) + high.domain(), high.codomain(), [low, high, k](std::uint32_t i) {
            return i < k ? env_lookup(low, i) : env_lookup(high, i - k);
        });
    }
    return defunc_append(low, high, k);
}

Term env_lookup(const Env& e, BoundedIndex i) {
    if (i.bound() != e.domain()) {
        throw ScopeError("index bounded by " + std::to_string(i.bound().value()) +
                         " used on an environment with domain " + std::to_string(e.domain().value()));
    }
    const EnvNode* n = &node_of(e);
    std::uint32_t k = i.index();
    for (;;) {
        switch (n->kind) {
            case EnvKind::Inc: {
                const auto& inc = static_cast<const IncNode&>(*n);
                return Term::var(k + inc.amount, inc.codomain);
            }
            case EnvKind::Cons: {
                const auto& c = static_cast<const ConsNode&>(*n);
                if (k == 0) return c.head.force();
                --k;
                n = c.tail.force().node();
                continue;
            }
            case EnvKind::Comp: {
                const auto& c = static_cast<const CompNode&>(*n);
                return apply(c.second, env_lookup(c.first, BoundedIndex::make(k, c.first.domain())));
            }
            case EnvKind::Fn: return static_cast<const FnNode&>(*n).fn(k);
        }
    }
}

Term apply(const Env& e, const Term& t) { return subst_term(e, t); }

Term apply_opt(const Env& e, const Term& t) {
    if (e.is_identity()) {
        if (t.scope() != e.domain()) throw ScopeError("identity environment applied to a term from another scope");
        return t;
    }
    return apply(e, t);
}

}  // namespace scopebind
