#include <string>

#include "scopebind/core.hpp"
#include "scopebind/detail/nodes.hpp"
#include "scopebind/patterns.hpp"

namespace scopebind {

namespace {

template <class Node>
const Node& as(const std::shared_ptr<const detail::TermNode>& n, TermKind k, const char* what) {
    if (!n) throw ScopeError(std::string("null term used as ") + what);
    if (n->kind != k) throw ScopeError(std::string("term is not a ") + what);
    return static_cast<const Node&>(*n);
}

void require_same_scope(const Term& a, const Term& b, const char* what) {
    if (a.scope() != b.scope()) {
        throw ScopeError(std::string(what) + " components live in scopes " + std::to_string(a.scope().value()) +
                         " and " + std::to_string(b.scope().value()));
    }
}

}  // namespace

Term Term::var(BoundedIndex i) {
    return Term(std::make_shared<const detail::VarNode>(detail::VarNode{{TermKind::Var, i.bound()}, i.index()}));
}

Term Term::lam(Binder1 body) {
    const ScopeIndex s = body.scope();
    return Term(std::make_shared<const detail::LamNode>(detail::LamNode{{TermKind::Lam, s}, std::move(body)}));
}

Term Term::app(Term fun, Term arg) {
    require_same_scope(fun, arg, "application");
    const ScopeIndex s = fun.scope();
    return Term(std::make_shared<const detail::AppNode>(
        detail::AppNode{{TermKind::App, s}, std::move(fun), std::move(arg)}));
}

Term Term::boolean(bool value, ScopeIndex scope) {
    return Term(std::make_shared<const detail::BoolNode>(detail::BoolNode{{TermKind::Bool, scope}, value}));
}

Term Term::pair(Term first, Term second) {
    require_same_scope(first, second, "pair");
    const ScopeIndex s = first.scope();
    return Term(std::make_shared<const detail::PairNode>(
        detail::PairNode{{TermKind::Pair, s}, std::move(first), std::move(second)}));
}

Term Term::split(Term scrutinee, PatBinder<NVars> body) {
    if (body.size().value != 2) throw ScopeError("split binds exactly two variables");
    if (scrutinee.scope() != body.scope()) throw ScopeError("split scrutinee and body scopes differ");
    const ScopeIndex s = scrutinee.scope();
    return Term(std::make_shared<const detail::SplitNode>(
        detail::SplitNode{{TermKind::Split, s}, std::move(scrutinee), std::move(body)}));
}

Term Term::let_pair(Term scrutinee, PatBinder<TuplePat> body) {
    if (scrutinee.scope() != body.scope()) throw ScopeError("let-pair scrutinee and body scopes differ");
    const ScopeIndex s = scrutinee.scope();
    return Term(std::make_shared<const detail::LetPairNode>(
        detail::LetPairNode{{TermKind::LetPair, s}, std::move(scrutinee), std::move(body)}));
}

TermKind Term::kind() const {
    if (!node_) throw ScopeError("null term");
    return node_->kind;
}

ScopeIndex Term::scope() const {
    if (!node_) throw ScopeError("null term");
    return node_->scope;
}

BoundedIndex Term::var_index() const {
    const auto& v = as<detail::VarNode>(node_, TermKind::Var, "variable");
    return BoundedIndex::make(v.index, v.scope);
}

const Binder1& Term::lam_binder() const { return as<detail::LamNode>(node_, TermKind::Lam, "lambda").binder; }
const Term& Term::fun() const { return as<detail::AppNode>(node_, TermKind::App, "application").fun; }
const Term& Term::arg() const { return as<detail::AppNode>(node_, TermKind::App, "application").arg; }
bool Term::bool_value() const { return as<detail::BoolNode>(node_, TermKind::Bool, "boolean").value; }
const Term& Term::first() const { return as<detail::PairNode>(node_, TermKind::Pair, "pair").first; }
const Term& Term::second() const { return as<detail::PairNode>(node_, TermKind::Pair, "pair").second; }

const Term& Term::scrutinee() const {
    if (node_ && node_->kind == TermKind::Split) return static_cast<const detail::SplitNode&>(*node_).scrutinee;
    return as<detail::LetPairNode>(node_, TermKind::LetPair, "split or let-pair").scrutinee;
}

const PatBinder<NVars>& Term::split_binder() const {
    return as<detail::SplitNode>(node_, TermKind::Split, "split").binder;
}

const PatBinder<TuplePat>& Term::let_binder() const {
    return as<detail::LetPairNode>(node_, TermKind::LetPair, "let-pair").binder;
}

// ---------------------------------------------------------------------------

Suspension Suspension::ready(Term t) {
    const ScopeIndex s = t.scope();
    return Suspension(Lazy<Term>::ready(std::move(t)), s);
}

const Term& Suspension::force() const {
    const Term& t = cell_.force();
    if (t.scope() != scope_) {
        throw ScopeError("suspension produced a term in scope " + std::to_string(t.scope().value()) +
                         ", expected " + std::to_string(scope_.value()));
    }
    return t;
}

// ---------------------------------------------------------------------------

TuplePat TuplePat::var() {
    static const auto leaf = std::make_shared<const Node>(Node{nullptr, nullptr, SizeWitness{1}});
    return TuplePat(leaf);
}

TuplePat TuplePat::pair(TuplePat left, TuplePat right) {
    const SizeWitness s{right.size().value + left.size().value};
    return TuplePat(std::make_shared<const Node>(Node{left.node_, right.node_, s}));
}

bool operator==(const TuplePat& a, const TuplePat& b) {
    if (a.node_ == b.node_) return true;
    if (a.is_var() || b.is_var()) return false;
    return a.left() == b.left() && a.right() == b.right();
}

std::string TuplePat::show() const {
    if (is_var()) return "_";
    return "(" + left().show() + ", " + right().show() + ")";
}

}  // namespace scopebind
