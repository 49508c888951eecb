#include "scopebind/syntax.hpp"

#include <algorithm>
#include <string>

namespace scopebind {

Term subst_term(const Env& e, const Term& t) {
    if (t.scope() != e.domain()) {
        throw ScopeError("substituting into a term from scope " + std::to_string(t.scope().value()) +
                         " with an environment from scope " + std::to_string(e.domain().value()));
    }
    ++stats::apply_node_visits();
    switch (t.kind()) {
        case TermKind::Var: return env_lookup(e, t.var_index());
        case TermKind::Lam: return Term::lam(apply_binder(e, t.lam_binder()));
        case TermKind::App: return Term::app(subst_term(e, t.fun()), subst_term(e, t.arg()));
        case TermKind::Bool: return Term::boolean(t.bool_value(), e.codomain());
        case TermKind::Pair: return Term::pair(subst_term(e, t.first()), subst_term(e, t.second()));
        case TermKind::Split: return Term::split(subst_term(e, t.scrutinee()), apply_binder(e, t.split_binder()));
        case TermKind::LetPair:
            return Term::let_pair(subst_term(e, t.scrutinee()), apply_binder(e, t.let_binder()));
    }
    throw ScopeError("unknown term kind");
}

namespace {

template <class B>
bool same_binder(const B& a, const B& b) {
    return a.suspended().same_node(b.suspended()) && a.body().same_node(b.body());
}

bool alpha_rec(const Term& a, const Term& b) {
    if (a.same_node(b)) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case TermKind::Var: return a.var_index() == b.var_index();
        case TermKind::Lam:
            return same_binder(a.lam_binder(), b.lam_binder()) ||
                   alpha_rec(unbind(a.lam_binder()), unbind(b.lam_binder()));
        case TermKind::App: return alpha_rec(a.fun(), b.fun()) && alpha_rec(a.arg(), b.arg());
        case TermKind::Bool: return a.bool_value() == b.bool_value();
        case TermKind::Pair: return alpha_rec(a.first(), b.first()) && alpha_rec(a.second(), b.second());
        case TermKind::Split:
            return alpha_rec(a.scrutinee(), b.scrutinee()) &&
                   (same_binder(a.split_binder(), b.split_binder()) ||
                    alpha_rec(unbind_pat(a.split_binder()), unbind_pat(b.split_binder())));
        case TermKind::LetPair:
            return a.let_binder().pattern() == b.let_binder().pattern() && alpha_rec(a.scrutinee(), b.scrutinee()) &&
                   (same_binder(a.let_binder(), b.let_binder()) ||
                    alpha_rec(unbind_pat(a.let_binder()), unbind_pat(b.let_binder())));
    }
    return false;
}

template <class B>
bool structural_binder(const B& a, const B& b);

bool structural_rec(const Term& a, const Term& b) {
    if (a.same_node(b)) return true;
    if (a.kind() != b.kind() || a.scope() != b.scope()) return false;
    switch (a.kind()) {
        case TermKind::Var: return a.var_index() == b.var_index();
        case TermKind::Lam: return structural_binder(a.lam_binder(), b.lam_binder());
        case TermKind::App: return structural_rec(a.fun(), b.fun()) && structural_rec(a.arg(), b.arg());
        case TermKind::Bool: return a.bool_value() == b.bool_value();
        case TermKind::Pair: return structural_rec(a.first(), b.first()) && structural_rec(a.second(), b.second());
        case TermKind::Split:
            return structural_rec(a.scrutinee(), b.scrutinee()) && structural_binder(a.split_binder(), b.split_binder());
        case TermKind::LetPair:
            return a.let_binder().pattern() == b.let_binder().pattern() &&
                   structural_rec(a.scrutinee(), b.scrutinee()) && structural_binder(a.let_binder(), b.let_binder());
    }
    return false;
}

template <class B>
bool structural_binder(const B& a, const B& b) {
    const bool envs = a.suspended().same_node(b.suspended()) ||
                      (a.suspended().is_identity() && b.suspended().is_identity() &&
                       a.suspended().domain() == b.suspended().domain());
    return envs && structural_rec(a.body(), b.body());
}

// Number of variables the term needs from its context.
std::uint32_t needed(const Term& t) {
    switch (t.kind()) {
        case TermKind::Var: return t.var_index().index() + 1;
        case TermKind::Lam: {
            const std::uint32_t n = needed(unbind(t.lam_binder()));
            return n == 0 ? 0 : n - 1;
        }
        case TermKind::App: return std::max(needed(t.fun()), needed(t.arg()));
        case TermKind::Bool: return 0;
        case TermKind::Pair: return std::max(needed(t.first()), needed(t.second()));
        case TermKind::Split: {
            const std::uint32_t n = needed(unbind_pat(t.split_binder()));
            return std::max(needed(t.scrutinee()), n < 2 ? 0 : n - 2);
        }
        case TermKind::LetPair: {
            const std::uint32_t k = t.let_binder().size().value;
            const std::uint32_t n = needed(unbind_pat(t.let_binder()));
            return std::max(needed(t.scrutinee()), n < k ? 0 : n - k);
        }
    }
    return 0;
}

void show_rec(const Term& t, std::string& out) {
    switch (t.kind()) {
        case TermKind::Var: out += std::to_string(t.var_index().index()); return;
        case TermKind::Lam:
            out += "\\.";
            show_rec(unbind(t.lam_binder()), out);
            return;
        case TermKind::App:
            out += '(';
            show_rec(t.fun(), out);
            out += ' ';
            show_rec(t.arg(), out);
            out += ')';
            return;
        case TermKind::Bool: out += t.bool_value() ? "true" : "false"; return;
        case TermKind::Pair:
            out += '<';
            show_rec(t.first(), out);
            out += ", ";
            show_rec(t.second(), out);
            out += '>';
            return;
        case TermKind::Split:
            out += "split ";
            show_rec(t.scrutinee(), out);
            out += " in ";
            show_rec(unbind_pat(t.split_binder()), out);
            return;
        case TermKind::LetPair:
            out += "let " + t.let_binder().pattern().show() + " = ";
            show_rec(t.scrutinee(), out);
            out += " in ";
            show_rec(unbind_pat(t.let_binder()), out);
            return;
    }
}

bool matches_shape(const TuplePat& p, const Term& v) {
    if (p.is_var()) return true;
    return v.is(TermKind::Pair) && matches_shape(p.left(), v.first()) && matches_shape(p.right(), v.second());
}

bool is_selector_redex(const Term& t) { return t.fun().is(TermKind::App) && t.fun().fun().is(TermKind::Bool); }

}  // namespace

bool alpha_eq(const Term& a, const Term& b) {
    if (a.scope() != b.scope()) {
        throw ScopeError("alpha_eq on terms from scopes " + std::to_string(a.scope().value()) + " and " +
                         std::to_string(b.scope().value()));
    }
    return alpha_rec(a, b);
}

bool structural_eq(const Term& a, const Term& b) { return structural_rec(a, b); }

std::optional<Env> pattern_match(const TuplePat& p, const Term& v) {
    if (p.is_var()) return env_cons(v, env_nil(v.scope()));
    if (!v.is(TermKind::Pair)) return std::nullopt;
    auto r1 = pattern_match(p.left(), v.first());
    if (!r1) return std::nullopt;
    auto r2 = pattern_match(p.right(), v.second());
    if (!r2) return std::nullopt;
    return env_append(*r2, *r1, p.right().size());
}

ScopeIndex free_index_bound(const Term& t) { return ScopeIndex(needed(t)); }

Term force_binders(const Term& t) {
    switch (t.kind()) {
        case TermKind::Var:
        case TermKind::Bool: return t;
        case TermKind::Lam: return Term::lam(bind1(force_binders(unbind(t.lam_binder())), t.scope()));
        case TermKind::App: return Term::app(force_binders(t.fun()), force_binders(t.arg()));
        case TermKind::Pair: return Term::pair(force_binders(t.first()), force_binders(t.second()));
        case TermKind::Split:
            return Term::split(force_binders(t.scrutinee()),
                               bind_pat(NVars(2), force_binders(unbind_pat(t.split_binder())), t.scope()));
        case TermKind::LetPair:
            return Term::let_pair(
                force_binders(t.scrutinee()),
                bind_pat(t.let_binder().pattern(), force_binders(unbind_pat(t.let_binder())), t.scope()));
    }
    return t;
}

std::string show_indices(const Term& t) {
    std::string out;
    show_rec(t, out);
    return out;
}

std::uint64_t alpha_hash(const Term& t) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : show_indices(t)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

bool is_normal(const Term& t) {
    switch (t.kind()) {
        case TermKind::Var:
        case TermKind::Bool: return true;
        case TermKind::Lam: return is_normal(unbind(t.lam_binder()));
        case TermKind::App:
            if (t.fun().is(TermKind::Lam) || is_selector_redex(t)) return false;
            return is_normal(t.fun()) && is_normal(t.arg());
        case TermKind::Pair: return is_normal(t.first()) && is_normal(t.second());
        case TermKind::Split:
            if (t.scrutinee().is(TermKind::Pair)) return false;
            return is_normal(t.scrutinee()) && is_normal(unbind_pat(t.split_binder()));
        case TermKind::LetPair:
            if (matches_shape(t.let_binder().pattern(), t.scrutinee())) return false;
            return is_normal(t.scrutinee()) && is_normal(unbind_pat(t.let_binder()));
    }
    return true;
}

}  // namespace scopebind
