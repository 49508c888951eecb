#pragma once

// Hand-rolled random generators for the property suites: terms over every
// constructor (including binders that carry non-trivial suspended
// environments) and environment expressions that can be built under any
// representation or handed to the eager substitution as a referee.

#include <cstdint>
#include <memory>
#include <random>
#include <sstream>
#include <string>

#include "scopebind/binders.hpp"
#include "scopebind/core.hpp"
#include "scopebind/eager.hpp"
#include "scopebind/environment.hpp"
#include "scopebind/syntax.hpp"

namespace scopebind::testgen {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform in [0, n).
    std::uint32_t below(std::uint32_t n) { return std::uniform_int_distribution<std::uint32_t>(0, n - 1)(eng_); }
    /// Uniform in [lo, hi].
    std::uint32_t between(std::uint32_t lo, std::uint32_t hi) {
        return std::uniform_int_distribution<std::uint32_t>(lo, hi)(eng_);
    }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(eng_); }
    std::uint64_t next() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

struct TermOptions {
    bool booleans = true;
    bool pairs = true;
    bool patterns = true;
    /// Allow subterms of the form apply(env, t), which leave composed
    /// environments suspended in binders.
    bool suspended = true;
};

inline TuplePat random_pattern(Rng& rng, int depth) {
    if (depth <= 0 || rng.coin(0.4)) return TuplePat::var();
    return TuplePat::pair(random_pattern(rng, depth - 1), random_pattern(rng, depth - 1));
}

struct EnvExpr;
using EnvExprPtr = std::shared_ptr<const EnvExpr>;

/// Syntax of an environment, so one random environment can be built several
/// ways.
struct EnvExpr {
    enum class Kind { Nil, Id, ShiftBy, Cons, Comp, Up, Append };
    Kind kind;
    ScopeIndex domain;
    ScopeIndex codomain;
    std::uint32_t k = 0;
    Term head;
    EnvExprPtr a;
    EnvExprPtr b;
};

Term random_term(Rng& rng, ScopeIndex scope, int size, const TermOptions& opt = {}, int env_depth = 2);
EnvExprPtr random_env(Rng& rng, ScopeIndex domain, ScopeIndex codomain, int depth, int env_depth = 1);
Env build(const EnvExpr& e, EnvRepr repr);

inline EnvExprPtr make_env(EnvExpr e) { return std::make_shared<const EnvExpr>(std::move(e)); }

inline EnvExprPtr random_env(Rng& rng, ScopeIndex domain, ScopeIndex codomain, int depth, int env_depth) {
    using K = EnvExpr::Kind;
    const std::uint32_t m = domain.value();
    const std::uint32_t n = codomain.value();
    auto base = [&]() -> EnvExprPtr {
        if (m == 0) return make_env({K::Nil, domain, codomain});
        if (n >= m && rng.coin(0.6)) {
            if (n == m) return make_env({K::Id, domain, codomain});
            return make_env({K::ShiftBy, domain, codomain, n - m});
        }
        Term h = random_term(rng, codomain, 2, {}, env_depth - 1);
        return make_env({K::Cons, domain, codomain, 0, h, random_env(rng, ScopeIndex(m - 1), codomain, 0, env_depth)});
    };
    if (depth <= 0) return base();
    switch (rng.below(5)) {
        case 0: return base();
        case 1: {
            if (m == 0) return base();
            Term h = random_term(rng, codomain, 3, {}, env_depth - 1);
            return make_env(
                {K::Cons, domain, codomain, 0, h, random_env(rng, ScopeIndex(m - 1), codomain, depth - 1, env_depth)});
        }
        case 2: {
            const ScopeIndex mid(rng.between(0, 5));
            return make_env({K::Comp, domain, codomain, 0, Term(), random_env(rng, domain, mid, depth - 1, env_depth),
                             random_env(rng, mid, codomain, depth - 1, env_depth)});
        }
        case 3: {
            if (m == 0 || n == 0) return base();
            return make_env({K::Up, domain, codomain, 0, Term(),
                             random_env(rng, ScopeIndex(m - 1), ScopeIndex(n - 1), depth - 1, env_depth)});
        }
        default: {
            const std::uint32_t lo = rng.between(0, m);
            return make_env({K::Append, domain, codomain, 0, Term(),
                             random_env(rng, ScopeIndex(lo), codomain, depth - 1, env_depth),
                             random_env(rng, ScopeIndex(m - lo), codomain, depth - 1, env_depth)});
        }
    }
}

inline Env build(const EnvExpr& e, EnvRepr repr) {
    using K = EnvExpr::Kind;
    switch (e.kind) {
        case K::Nil: return env_nil(e.codomain, repr);
        case K::Id: return env_id(e.domain, repr);
        case K::ShiftBy: return e.k == 1 ? env_shift(e.domain, repr) : env_shift_by(e.domain, e.k, repr);
        case K::Cons: return env_cons(e.head, build(*e.a, repr));
        case K::Comp: return env_comp(build(*e.a, repr), build(*e.b, repr));
        case K::Up: return env_up(build(*e.a, repr));
        case K::Append: return env_append(build(*e.a, repr), build(*e.b, repr), SizeWitness{e.a->domain.value()});
    }
    throw std::logic_error("unknown environment expression");
}

/// The same environment as a plain eager substitution.
inline eager::Subst oracle(const EnvExpr& e) {
    using K = EnvExpr::Kind;
    switch (e.kind) {
        case K::Nil:
            return eager::Subst::make(e.domain, e.codomain,
                                      [](std::uint32_t) -> Term { throw ScopeError("lookup in empty substitution"); });
        case K::Id: return eager::identity(e.domain);
        case K::ShiftBy: {
            const std::uint32_t k = e.k;
            const ScopeIndex cod = e.codomain;
            return eager::Subst::make(e.domain, cod, [k, cod](std::uint32_t i) { return Term::var(i + k, cod); });
        }
        case K::Cons: return eager::cons(e.head, oracle(*e.a));
        case K::Comp: return eager::comp(oracle(*e.a), oracle(*e.b));
        case K::Up: return eager::up(oracle(*e.a));
        case K::Append: {
            const eager::Subst lo = oracle(*e.a);
            const eager::Subst hi = oracle(*e.b);
            const std::uint32_t split = e.a->domain.value();
            return eager::Subst::make(e.domain, e.codomain,
                                      [lo, hi, split](std::uint32_t i) { return i < split ? lo.at(i) : hi.at(i - split); });
        }
    }
    throw std::logic_error("unknown environment expression");
}

inline std::string describe(const EnvExpr& e) {
    using K = EnvExpr::Kind;
    std::ostringstream os;
    switch (e.kind) {
        case K::Nil: os << "nil"; break;
        case K::Id: os << "id"; break;
        case K::ShiftBy: os << "shift" << e.k; break;
        case K::Cons: os << "(" << show_indices(e.head) << " : " << describe(*e.a) << ")"; break;
        case K::Comp: os << "(" << describe(*e.a) << " >> " << describe(*e.b) << ")"; break;
        case K::Up: os << "up(" << describe(*e.a) << ")"; break;
        case K::Append: os << "(" << describe(*e.a) << " ++ " << describe(*e.b) << ")"; break;
    }
    os << "[" << e.domain << "->" << e.codomain << "]";
    return os.str();
}

inline Term random_leaf(Rng& rng, ScopeIndex scope, const TermOptions& opt) {
    if (scope.value() > 0 && (!opt.booleans || rng.coin(0.75))) return Term::var(rng.below(scope.value()), scope);
    if (opt.booleans) return Term::boolean(rng.coin(), scope);
    return Term::lam(bind1(Term::var(0, scope.succ()), scope));
}

inline Term random_term(Rng& rng, ScopeIndex scope, int size, const TermOptions& opt, int env_depth) {
    if (size <= 0) return random_leaf(rng, scope, opt);
    // Weights: leaf, lam, app, pair, split, let-pair, suspended substitution.
    const std::uint32_t w[] = {1, 3, 3, opt.pairs ? 1u : 0u, opt.patterns ? 1u : 0u, opt.patterns ? 1u : 0u,
                               (opt.suspended && env_depth > 0) ? 2u : 0u};
    std::uint32_t total = 0;
    for (auto x : w) total += x;
    std::uint32_t pick = rng.below(total);
    int choice = 0;
    while (pick >= w[choice]) pick -= w[choice++];
    const int rest = size - 1;
    switch (choice) {
        case 0: return random_leaf(rng, scope, opt);
        case 1: return Term::lam(bind1(random_term(rng, scope.succ(), rest, opt, env_depth), scope));
        case 2: {
            const int l = static_cast<int>(rng.between(0, static_cast<std::uint32_t>(rest)));
            return Term::app(random_term(rng, scope, l, opt, env_depth), random_term(rng, scope, rest - l, opt, env_depth));
        }
        case 3: {
            const int l = static_cast<int>(rng.between(0, static_cast<std::uint32_t>(rest)));
            return Term::pair(random_term(rng, scope, l, opt, env_depth),
                              random_term(rng, scope, rest - l, opt, env_depth));
        }
        case 4: {
            const int l = static_cast<int>(rng.between(0, static_cast<std::uint32_t>(rest)));
            Term s = random_term(rng, scope, l, opt, env_depth);
            return Term::split(s, bind_pat(NVars(2), random_term(rng, scope + 2u, rest - l, opt, env_depth), scope));
        }
        case 5: {
            const int l = static_cast<int>(rng.between(0, static_cast<std::uint32_t>(rest)));
            Term s = random_term(rng, scope, l, opt, env_depth);
            const TuplePat p = random_pattern(rng, 2);
            return Term::let_pair(
                s, bind_pat(p, random_term(rng, scope + p.size().value, rest - l, opt, env_depth), scope));
        }
        default: {
            const ScopeIndex inner(rng.between(0, 3));
            const Term t = random_term(rng, inner, rest, opt, env_depth - 1);
            return apply(build(*random_env(rng, inner, scope, 1, env_depth - 1), default_env_repr()), t);
        }
    }
}

/// A value shaped like `p`, with random leaves.
inline Term value_for(Rng& rng, const TuplePat& p, ScopeIndex scope) {
    if (p.is_var()) return random_term(rng, scope, 2);
    return Term::pair(value_for(rng, p.left(), scope), value_for(rng, p.right(), scope));
}

/// Random binder in `scope`; about half of them carry a non-identity
/// suspended environment.
inline Binder1 random_binder(Rng& rng, ScopeIndex scope, int size) {
    if (rng.coin()) return bind1(random_term(rng, scope.succ(), size), scope);
    const ScopeIndex inner(rng.between(0, 4));
    const Term lam = Term::lam(bind1(random_term(rng, inner.succ(), size), inner));
    return apply(build(*random_env(rng, inner, scope, 2), default_env_repr()), lam).lam_binder();
}

}  // namespace scopebind::testgen
