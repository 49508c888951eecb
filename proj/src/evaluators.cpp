#include "scopebind/evaluators.hpp"

#include <pthread.h>

#include <exception>
#include <string>
#include <utility>

#include "scopebind/eager.hpp"
#include "scopebind/syntax.hpp"

namespace scopebind {

std::string_view to_string(Strategy s) {
    switch (s) {
        case Strategy::EvalV: return "evalv";
        case Strategy::SubstV: return "substv";
        case Strategy::BindV: return "bindv";
        case Strategy::EnvV: return "envv";
    }
    return "?";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
    if (name == "evalv") return Strategy::EvalV;
    if (name == "substv") return Strategy::SubstV;
    if (name == "bindv") return Strategy::BindV;
    if (name == "envv") return Strategy::EnvV;
    return std::nullopt;
}

namespace {

bool is_selector(const Term& t) { return t.is(TermKind::App) && t.fun().is(TermKind::Bool); }

// Values that can never become a function, pair or selector by further
// substitution; finding one in an elimination position is an error.
bool is_value_shape(const Term& t) {
    return t.is(TermKind::Lam) || t.is(TermKind::Bool) || t.is(TermKind::Pair) || is_selector(t);
}

void check_head(const Term& head, const char* what) {
    if (is_value_shape(head) || head.scope().value() == 0) throw EvalError(what);
}

// Pattern matching for the evaluators: a nested pair pattern evaluates the
// component it needs with `reduce`; variables receive `component(term)`.
// Returns false when a component is stuck; throws on a shape mismatch.
template <class Reduce, class Component>
bool match_term(const TuplePat& p, const Term& v, Reduce& reduce, Component& component,
                std::vector<Suspension>& out) {
    if (p.is_var()) {
        out.push_back(Suspension::ready(v));
        return true;
    }
    if (!v.is(TermKind::Pair)) {
        if (is_value_shape(v)) throw EvalError("let-pair pattern does not match the value");
        return false;
    }
    auto sub = [&](const TuplePat& q, const Term& c) {
        if (q.is_var()) {
            out.push_back(component(c));
            return true;
        }
        return match_term(q, reduce(c), reduce, component, out);
    };
    return sub(p.right(), v.second()) && sub(p.left(), v.first());
}

Env args_env(const std::vector<Suspension>& args, ScopeIndex scope, EnvRepr repr) {
    Env a = env_nil(scope, repr);
    for (std::size_t i = args.size(); i-- > 0;) a = env_cons(args[i], a);
    return a;
}

// ---------------------------------------------------------------------------
// SubstV / BindV

class SubstMachine {
public:
    SubstMachine(EvalStrategy s, Budget b) : s_(s), budget_(std::move(b)) {}

    Term eval(Term t) const {
        for (;;) {
            switch (t.kind()) {
                case TermKind::Var:
                case TermKind::Lam:
                case TermKind::Bool:
                case TermKind::Pair: return t;
                case TermKind::App: {
                    Term f = eval(t.fun());
                    if (f.is(TermKind::Lam)) {
                        budget_.tick();
                        t = instantiate(f.lam_binder(), lazy_eval(t.arg()));
                        continue;
                    }
                    if (f.is(TermKind::Bool)) return Term::app(f, t.arg());
                    if (is_selector(f)) {
                        budget_.tick();
                        t = f.fun().bool_value() ? f.arg() : t.arg();
                        continue;
                    }
                    check_head(f, "application of a non-function");
                    return Term::app(f, t.arg());
                }
                case TermKind::Split: {
                    Term v = eval(t.scrutinee());
                    if (v.is(TermKind::Pair)) {
                        budget_.tick();
                        t = instantiate_pat(t.split_binder(), {lazy_eval(v.first()), lazy_eval(v.second())});
                        continue;
                    }
                    check_head(v, "split of a non-pair");
                    return Term::split(v, t.split_binder());
                }
                case TermKind::LetPair: {
                    Term v = eval(t.scrutinee());
                    std::vector<Suspension> args;
                    auto reduce = [this](const Term& c) { return eval(c); };
                    auto component = [this](const Term& c) { return lazy_eval(c); };
                    if (match_term(t.let_binder().pattern(), v, reduce, component, args)) {
                        budget_.tick();
                        t = instantiate_pat(t.let_binder(), args);
                        continue;
                    }
                    check_head(v, "let-pair of a non-pair");
                    return Term::let_pair(v, t.let_binder());
                }
            }
        }
    }

    Term whnf(Term t) const {
        for (;;) {
            switch (t.kind()) {
                case TermKind::Var:
                case TermKind::Lam:
                case TermKind::Bool:
                case TermKind::Pair: return t;
                case TermKind::App: {
                    Term f = whnf(t.fun());
                    if (f.is(TermKind::Lam)) {
                        budget_.tick();
                        t = instantiate(f.lam_binder(), lazy_whnf(t.arg()));
                        continue;
                    }
                    if (is_selector(f)) {
                        budget_.tick();
                        t = f.fun().bool_value() ? f.arg() : t.arg();
                        continue;
                    }
                    if (!f.is(TermKind::Bool) && is_value_shape(f)) throw EvalError("application of a non-function");
                    return Term::app(f, t.arg());
                }
                case TermKind::Split: {
                    Term v = whnf(t.scrutinee());
                    if (v.is(TermKind::Pair)) {
                        budget_.tick();
                        t = instantiate_pat(t.split_binder(), {lazy_whnf(v.first()), lazy_whnf(v.second())});
                        continue;
                    }
                    if (is_value_shape(v)) throw EvalError("split of a non-pair");
                    return Term::split(v, t.split_binder());
                }
                case TermKind::LetPair: {
                    Term v = whnf(t.scrutinee());
                    std::vector<Suspension> args;
                    if (match_whnf(t.let_binder().pattern(), v, args)) {
                        budget_.tick();
                        t = instantiate_pat(t.let_binder(), args);
                        continue;
                    }
                    return Term::let_pair(v, t.let_binder());
                }
            }
        }
    }

    Term nf(Term t) const {
        for (;;) {
            switch (t.kind()) {
                case TermKind::Var:
                case TermKind::Bool: return t;
                case TermKind::Lam: return Term::lam(bind1(nf(open(t.lam_binder())), t.scope()));
                case TermKind::Pair: return Term::pair(nf(t.first()), nf(t.second()));
                case TermKind::App: {
                    Term f = whnf(t.fun());
                    if (f.is(TermKind::Lam)) {
                        budget_.tick();
                        t = instantiate(f.lam_binder(), lazy_whnf(t.arg()));
                        continue;
                    }
                    if (is_selector(f)) {
                        budget_.tick();
                        t = f.fun().bool_value() ? f.arg() : t.arg();
                        continue;
                    }
                    if (!f.is(TermKind::Bool) && is_value_shape(f)) throw EvalError("application of a non-function");
                    return Term::app(nf(f), nf(t.arg()));
                }
                case TermKind::Split: {
                    Term v = whnf(t.scrutinee());
                    if (v.is(TermKind::Pair)) {
                        budget_.tick();
                        t = instantiate_pat(t.split_binder(), {lazy_whnf(v.first()), lazy_whnf(v.second())});
                        continue;
                    }
                    if (is_value_shape(v)) throw EvalError("split of a non-pair");
                    return Term::split(nf(v), bind_pat(NVars(2), nf(open(t.split_binder())), t.scope()));
                }
                case TermKind::LetPair: {
                    Term v = whnf(t.scrutinee());
                    std::vector<Suspension> args;
                    if (match_whnf(t.let_binder().pattern(), v, args)) {
                        budget_.tick();
                        t = instantiate_pat(t.let_binder(), args);
                        continue;
                    }
                    const auto& b = t.let_binder();
                    return Term::let_pair(nf(v), bind_pat(b.pattern(), nf(open(b)), t.scope()));
                }
            }
        }
    }

private:
    [[nodiscard]] bool eager() const { return s_.strategy == Strategy::SubstV; }

    [[nodiscard]] Suspension lazy_eval(const Term& a) const {
        if (eager()) return Suspension::ready(a);
        SubstMachine m = *this;
        return Suspension::deferred(a.scope(), [m, a] { return m.eval(a); });
    }

    [[nodiscard]] Suspension lazy_whnf(const Term& a) const {
        if (eager() || !s_.prereduce_arg) return Suspension::ready(a);
        SubstMachine m = *this;
        return Suspension::deferred(a.scope(), [m, a] { return m.whnf(a); });
    }

    bool match_whnf(const TuplePat& p, const Term& v, std::vector<Suspension>& out) const {
        auto reduce = [this](const Term& c) { return whnf(c); };
        auto component = [this](const Term& c) { return lazy_whnf(c); };
        return match_term(p, v, reduce, component, out);
    }

    [[nodiscard]] Term instantiate(const Binder1& b, Suspension arg) const {
        if (eager()) return eager::instantiate(b, arg.force());
        return instantiate1(b, std::move(arg));
    }

    template <class P>
    [[nodiscard]] Term instantiate_pat(const PatBinder<P>& b, const std::vector<Suspension>& args) const {
        if (eager()) {
            eager::Subst r = b.suspended().is_identity() ? eager::identity(b.scope()) : eager::from_env(b.suspended());
            for (std::size_t i = args.size(); i-- > 0;) r = eager::cons(args[i].force(), std::move(r));
            return eager::apply(r, b.body());
        }
        return scopebind::instantiate_pat(b, args_env(args, b.scope(), b.suspended().repr()));
    }

    [[nodiscard]] Term open(const Binder1& b) const { return eager() ? eager::open(b) : unbind(b); }

    template <class P>
    [[nodiscard]] Term open(const PatBinder<P>& b) const {
        return eager() ? eager::open(b) : unbind_pat(b);
    }

    EvalStrategy s_;
    Budget budget_;
};

// ---------------------------------------------------------------------------
// EnvV

class EnvMachine {
public:
    EnvMachine(bool prereduce, Budget b) : prereduce_(prereduce), budget_(std::move(b)) {}

    Term eval(Env r, Term t) const {
        for (;;) {
            check(r, t);
            switch (t.kind()) {
                case TermKind::Var: return env_lookup(r, t.var_index());
                case TermKind::Lam: return Term::lam(apply_binder(r, t.lam_binder()));
                case TermKind::Bool: return Term::boolean(t.bool_value(), r.codomain());
                case TermKind::Pair: return apply(r, t);
                case TermKind::App: {
                    Term f = eval(r, t.fun());
                    if (f.is(TermKind::Lam)) {
                        budget_.tick();
                        const Binder1& b = f.lam_binder();
                        Env next = env_cons(deferred_eval(r, t.arg()), b.suspended());
                        t = b.body();
                        r = std::move(next);
                        continue;
                    }
                    if (f.is(TermKind::Bool)) return Term::app(f, apply(r, t.arg()));
                    if (is_selector(f)) {
                        budget_.tick();
                        if (f.fun().bool_value()) {
                            r = env_id(r.codomain(), r.repr());
                            t = f.arg();
                        } else {
                            t = t.arg();
                        }
                        continue;
                    }
                    check_head(f, "application of a non-function");
                    return Term::app(f, apply(r, t.arg()));
                }
                case TermKind::Split: {
                    Term v = eval(r, t.scrutinee());
                    if (v.is(TermKind::Pair)) {
                        budget_.tick();
                        Env id = env_id(r.codomain(), r.repr());
                        std::vector<Suspension> args{deferred_eval(id, v.first()), deferred_eval(id, v.second())};
                        std::tie(r, t) = enter(r, t.split_binder(), args);
                        continue;
                    }
                    check_head(v, "split of a non-pair");
                    return Term::split(v, apply_binder(r, t.split_binder()));
                }
                case TermKind::LetPair: {
                    Term v = eval(r, t.scrutinee());
                    Env id = env_id(r.codomain(), r.repr());
                    std::vector<Suspension> args;
                    auto reduce = [this, &id](const Term& c) { return eval(id, c); };
                    auto component = [this, &id](const Term& c) { return deferred_eval(id, c); };
                    if (match_term(t.let_binder().pattern(), v, reduce, component, args)) {
                        budget_.tick();
                        std::tie(r, t) = enter(r, t.let_binder(), args);
                        continue;
                    }
                    check_head(v, "let-pair of a non-pair");
                    return Term::let_pair(v, apply_binder(r, t.let_binder()));
                }
            }
        }
    }

    Term whnf(Env r, Term t) const {
        for (;;) {
            check(r, t);
            switch (t.kind()) {
                case TermKind::Var: {
                    Term u = env_lookup(r, t.var_index());
                    if (r.is_identity()) return u;
                    r = env_id(r.codomain(), r.repr());
                    t = std::move(u);
                    continue;
                }
                case TermKind::Lam: return Term::lam(apply_binder(r, t.lam_binder()));
                case TermKind::Bool: return Term::boolean(t.bool_value(), r.codomain());
                case TermKind::Pair: return apply_opt(r, t);
                case TermKind::App: {
                    Term f = whnf(r, t.fun());
                    if (f.is(TermKind::Lam)) {
                        budget_.tick();
                        const Binder1& b = f.lam_binder();
                        Env next = env_cons(arg(r, t.arg()), b.suspended());
                        t = b.body();
                        r = std::move(next);
                        continue;
                    }
                    if (is_selector(f)) {
                        budget_.tick();
                        if (f.fun().bool_value()) {
                            r = env_id(r.codomain(), r.repr());
                            t = f.arg();
                        } else {
                            t = t.arg();
                        }
                        continue;
                    }
                    if (!f.is(TermKind::Bool) && is_value_shape(f)) throw EvalError("application of a non-function");
                    return Term::app(f, apply_opt(r, t.arg()));
                }
                case TermKind::Split: {
                    Term v = whnf(r, t.scrutinee());
                    if (v.is(TermKind::Pair)) {
                        budget_.tick();
                        Env id = env_id(r.codomain(), r.repr());
                        std::vector<Suspension> args{arg(id, v.first()), arg(id, v.second())};
                        std::tie(r, t) = enter(r, t.split_binder(), args);
                        continue;
                    }
                    if (is_value_shape(v)) throw EvalError("split of a non-pair");
                    return Term::split(v, apply_binder(r, t.split_binder()));
                }
                case TermKind::LetPair: {
                    Term v = whnf(r, t.scrutinee());
                    std::vector<Suspension> args;
                    if (match_whnf(r, t.let_binder().pattern(), v, args)) {
                        budget_.tick();
                        std::tie(r, t) = enter(r, t.let_binder(), args);
                        continue;
                    }
                    return Term::let_pair(v, apply_binder(r, t.let_binder()));
                }
            }
        }
    }

    Term nf(Env r, Term t) const {
        for (;;) {
            check(r, t);
            switch (t.kind()) {
                case TermKind::Var: {
                    Term u = env_lookup(r, t.var_index());
                    if (r.is_identity()) return u;
                    r = env_id(r.codomain(), r.repr());
                    t = std::move(u);
                    continue;
                }
                case TermKind::Lam: {
                    const Binder1& b = t.lam_binder();
                    return Term::lam(bind1(nf(env_up(env_comp(b.suspended(), r)), b.body()), r.codomain()));
                }
                case TermKind::Bool: return Term::boolean(t.bool_value(), r.codomain());
                case TermKind::Pair: return Term::pair(nf(r, t.first()), nf(r, t.second()));
                case TermKind::App: {
                    Term f = whnf(r, t.fun());
                    if (f.is(TermKind::Lam)) {
                        budget_.tick();
                        const Binder1& b = f.lam_binder();
                        Env next = env_cons(arg(r, t.arg()), b.suspended());
                        t = b.body();
                        r = std::move(next);
                        continue;
                    }
                    if (is_selector(f)) {
                        budget_.tick();
                        if (f.fun().bool_value()) {
                            r = env_id(r.codomain(), r.repr());
                            t = f.arg();
                        } else {
                            t = t.arg();
                        }
                        continue;
                    }
                    if (!f.is(TermKind::Bool) && is_value_shape(f)) throw EvalError("application of a non-function");
                    Env id = env_id(r.codomain(), r.repr());
                    return Term::app(nf(id, f), nf(r, t.arg()));
                }
                case TermKind::Split: {
                    Term v = whnf(r, t.scrutinee());
                    if (v.is(TermKind::Pair)) {
                        budget_.tick();
                        Env id = env_id(r.codomain(), r.repr());
                        std::vector<Suspension> args{arg(id, v.first()), arg(id, v.second())};
                        std::tie(r, t) = enter(r, t.split_binder(), args);
                        continue;
                    }
                    if (is_value_shape(v)) throw EvalError("split of a non-pair");
                    return Term::split(nf(env_id(r.codomain(), r.repr()), v),
                                       bind_pat(NVars(2), nf_under(r, t.split_binder()), r.codomain()));
                }
                case TermKind::LetPair: {
                    Term v = whnf(r, t.scrutinee());
                    std::vector<Suspension> args;
                    if (match_whnf(r, t.let_binder().pattern(), v, args)) {
                        budget_.tick();
                        std::tie(r, t) = enter(r, t.let_binder(), args);
                        continue;
                    }
                    return Term::let_pair(nf(env_id(r.codomain(), r.repr()), v),
                                          bind_pat(t.let_binder().pattern(), nf_under(r, t.let_binder()),
                                                   r.codomain()));
                }
            }
        }
    }

private:
    static void check(const Env& r, const Term& t) {
        if (r.domain() != t.scope()) throw ScopeError("environment and term scopes differ");
    }

    [[nodiscard]] Suspension deferred_eval(const Env& r, const Term& a) const {
        EnvMachine m = *this;
        return Suspension::deferred(r.codomain(), [m, r, a] { return m.eval(r, a); });
    }

    // Argument as passed by whnf/nf.
    [[nodiscard]] Suspension arg(const Env& r, const Term& a) const {
        if (prereduce_) {
            EnvMachine m = *this;
            return Suspension::deferred(r.codomain(), [m, r, a] { return m.whnf(r, a); });
        }
        if (r.is_identity()) return Suspension::ready(a);
        return Suspension::deferred(r.codomain(), [r, a] { return apply(r, a); });
    }

    bool match_whnf(const Env& r, const TuplePat& p, const Term& v, std::vector<Suspension>& out) const {
        Env id = env_id(r.codomain(), r.repr());
        auto reduce = [this, &id](const Term& c) { return whnf(id, c); };
        auto component = [this, &id](const Term& c) { return arg(id, c); };
        return match_term(p, v, reduce, component, out);
    }

    template <class P>
    static std::pair<Env, Term> enter(const Env& r, const PatBinder<P>& b, const std::vector<Suspension>& args) {
        return instantiate_pat_with(apply_binder(r, b), args_env(args, r.codomain(), r.repr()),
                                    [](const Env& e, const Term& body) { return std::pair<Env, Term>(e, body); });
    }

    template <class P>
    Term nf_under(const Env& r, const PatBinder<P>& b) const {
        return nf(env_up_by(env_comp(b.suspended(), r), b.size().value), b.body());
    }

    bool prereduce_;
    Budget budget_;
};

// ---------------------------------------------------------------------------
// EvalV

Lazy<Value> lazy_value(const ValueEnv& env, const Term& t, const Budget& budget) {
    return Lazy<Value>::deferred([env, t, budget] { return eval_closure(env, t, budget); });
}

// Value environment seen by the body of a binder whose suspended environment
// is `r`, given the values `env` of r's codomain.
ValueEnv adapt(const Env& r, const ValueEnv& env, const Budget& budget) {
    if (r.codomain().value() != env.size()) throw ScopeError("closure environment has the wrong size");
    if (r.is_identity()) return env;
    ValueEnv out;
    for (std::uint32_t i = r.domain().value(); i-- > 0;) out = out.push(lazy_value(env, env_lookup(r, i), budget));
    return out;
}

ValueEnv push_all(ValueEnv env, const std::vector<Lazy<Value>>& args) {
    for (std::size_t i = args.size(); i-- > 0;) env = env.push(args[i]);
    return env;
}

void match_value(const TuplePat& p, const Lazy<Value>& v, const Budget& budget, std::vector<Lazy<Value>>& out) {
    if (p.is_var()) {
        out.push_back(v);
        return;
    }
    const auto* pair = std::get_if<PairValue>(&v.force());
    if (!pair) throw EvalError("let-pair pattern does not match the value");
    match_value(p.right(), lazy_value(pair->env, pair->second, budget), budget, out);
    match_value(p.left(), lazy_value(pair->env, pair->first, budget), budget, out);
}

Env readback_env(const ValueEnv& env) {
    std::vector<Lazy<Value>> cells;
    cells.reserve(env.size());
    for (std::uint32_t i = 0; i < env.size(); ++i) cells.push_back(env.at(i));
    Env r = env_nil(ScopeIndex(0));
    for (std::size_t i = cells.size(); i-- > 0;) {
        Lazy<Value> c = cells[i];
        r = env_cons(Suspension::deferred(ScopeIndex(0), [c] { return readback(c.force()); }), r);
    }
    return r;
}

}  // namespace

struct ValueEnv::Cell {
    Lazy<Value> head;
    std::shared_ptr<const Cell> tail;
    std::uint32_t size;
};

ValueEnv ValueEnv::push(Lazy<Value> v) const {
    return ValueEnv(std::make_shared<const Cell>(Cell{std::move(v), head_, size() + 1}));
}

std::uint32_t ValueEnv::size() const { return head_ ? head_->size : 0; }

const Lazy<Value>& ValueEnv::at(std::uint32_t i) const {
    if (i >= size()) throw ScopeError("value environment lookup out of range");
    const Cell* c = head_.get();
    for (; i > 0; --i) c = c->tail.get();
    return c->head;
}

Value eval_closure(const ValueEnv& env0, const Term& t0, Budget budget) {
    ValueEnv env = env0;
    Term t = t0;
    for (;;) {
        if (t.scope().value() != env.size()) throw ScopeError("term and value environment scopes differ");
        switch (t.kind()) {
            case TermKind::Var: return env.at(t.var_index().index()).force();
            case TermKind::Lam: return Closure{env, t.lam_binder()};
            case TermKind::Bool: return BoolValue{t.bool_value()};
            case TermKind::Pair: return PairValue{env, t.first(), t.second()};
            case TermKind::App: {
                Value f = eval_closure(env, t.fun(), budget);
                if (auto* c = std::get_if<Closure>(&f)) {
                    budget.tick();
                    Lazy<Value> a = lazy_value(env, t.arg(), budget);
                    env = adapt(c->binder.suspended(), c->env, budget).push(std::move(a));
                    t = c->binder.body();
                    continue;
                }
                if (auto* b = std::get_if<BoolValue>(&f)) return Selector{b->value, env, t.arg()};
                if (auto* s = std::get_if<Selector>(&f)) {
                    budget.tick();
                    if (s->value) {
                        env = s->env;
                        t = s->first;
                    } else {
                        t = t.arg();
                    }
                    continue;
                }
                throw EvalError("application of a non-function");
            }
            case TermKind::Split: {
                Value v = eval_closure(env, t.scrutinee(), budget);
                const auto* p = std::get_if<PairValue>(&v);
                if (!p) throw EvalError("split of a non-pair");
                budget.tick();
                const auto& b = t.split_binder();
                env = push_all(adapt(b.suspended(), env, budget),
                               {lazy_value(p->env, p->first, budget), lazy_value(p->env, p->second, budget)});
                t = b.body();
                continue;
            }
            case TermKind::LetPair: {
                Lazy<Value> v = lazy_value(env, t.scrutinee(), budget);
                v.force();
                std::vector<Lazy<Value>> args;
                const auto& b = t.let_binder();
                match_value(b.pattern(), v, budget, args);
                budget.tick();
                env = push_all(adapt(b.suspended(), env, budget), args);
                t = b.body();
                continue;
            }
        }
    }
}

Term readback(const Value& v) {
    const ScopeIndex closed(0);
    return std::visit(
        [&](const auto& x) -> Term {
            using X = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<X, Closure>) {
                return Term::lam(apply_binder(readback_env(x.env), x.binder));
            } else if constexpr (std::is_same_v<X, BoolValue>) {
                return Term::boolean(x.value, closed);
            } else if constexpr (std::is_same_v<X, Selector>) {
                return Term::app(Term::boolean(x.value, closed), apply(readback_env(x.env), x.first));
            } else {
                Env r = readback_env(x.env);
                return Term::pair(apply(r, x.first), apply(r, x.second));
            }
        },
        static_cast<const std::variant<Closure, BoolValue, Selector, PairValue>&>(v));
}

// ---------------------------------------------------------------------------

Term eval_subst(const Term& t, EvalStrategy s, Budget budget) {
    if (s.strategy != Strategy::SubstV && s.strategy != Strategy::BindV) {
        throw std::invalid_argument("eval_subst needs the SubstV or BindV strategy");
    }
    return SubstMachine(s, std::move(budget)).eval(t);
}

Term eval_env(const Env& r, const Term& t, Budget budget) { return EnvMachine(false, std::move(budget)).eval(r, t); }

Term evaluate(const Term& t, EvalStrategy s, Budget budget) {
    switch (s.strategy) {
        case Strategy::EvalV:
            if (t.scope().value() != 0) throw EvalError("the closure evaluator needs a closed term");
            return readback(eval_closure(ValueEnv(), t, std::move(budget)));
        case Strategy::SubstV:
        case Strategy::BindV: return eval_subst(t, s, std::move(budget));
        case Strategy::EnvV: return eval_env(env_id(t.scope()), t, std::move(budget));
    }
    throw std::invalid_argument("unknown strategy");
}

Term whnf(const Term& t, EvalStrategy s, Budget budget) {
    switch (s.strategy) {
        case Strategy::EvalV: throw EvalError("the closure evaluator does not compute weak-head normal forms of open terms");
        case Strategy::SubstV:
        case Strategy::BindV: return SubstMachine(s, std::move(budget)).whnf(t);
        case Strategy::EnvV: return whnf_env(env_id(t.scope()), t, s.prereduce_arg, std::move(budget));
    }
    throw std::invalid_argument("unknown strategy");
}

Term nf(const Term& t, EvalStrategy s, Budget budget) {
    switch (s.strategy) {
        case Strategy::EvalV: throw EvalError("the closure evaluator cannot normalize under binders");
        case Strategy::SubstV:
        case Strategy::BindV: return SubstMachine(s, std::move(budget)).nf(t);
        case Strategy::EnvV: return nf_env(env_id(t.scope()), t, s.prereduce_arg, std::move(budget));
    }
    throw std::invalid_argument("unknown strategy");
}

Term whnf_env(const Env& r, const Term& t, bool prereduce_arg, Budget budget) {
    return EnvMachine(prereduce_arg, std::move(budget)).whnf(r, t);
}

Term nf_env(const Env& r, const Term& t, bool prereduce_arg, Budget budget) {
    return EnvMachine(prereduce_arg, std::move(budget)).nf(r, t);
}

// ---------------------------------------------------------------------------

void run_deep(const std::function<void()>& fn, std::size_t stack_bytes) {
    struct Job {
        const std::function<void()>* fn;
        EnvRepr repr;
        std::exception_ptr error;
    } job{&fn, default_env_repr(), nullptr};

    auto entry = [](void* p) -> void* {
        auto* j = static_cast<Job*>(p);
        ScopedEnvRepr guard(j->repr);
        try {
            (*j->fn)();
        } catch (...) {
            j->error = std::current_exception();
        }
        return nullptr;
    };

    pthread_attr_t attr;
    pthread_attr_init(&attr);
    pthread_attr_setstacksize(&attr, stack_bytes);
    pthread_t th;
    const int rc = pthread_create(&th, &attr, entry, &job);
    pthread_attr_destroy(&attr);
    if (rc != 0) {
        fn();
        return;
    }
    pthread_join(th, nullptr);
    if (job.error) std::rethrow_exception(job.error);
}

}  // namespace scopebind
