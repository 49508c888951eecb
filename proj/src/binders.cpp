#include "scopebind/binders.hpp"

#include <string>

namespace scopebind {

Binder1::Binder1(Env suspended, Term body) : suspended_(std::move(suspended)), body_(std::move(body)) {
    if (body_.scope() != suspended_.domain().succ()) {
        throw ScopeError("binder body is in scope " + std::to_string(body_.scope().value()) + ", expected " +
                         std::to_string(suspended_.domain().value() + 1));
    }
}

Binder1 bind1(Term body, ScopeIndex scope) { return Binder1(env_id(scope), std::move(body)); }

Term unbind(const Binder1& b) { return apply_opt(env_up(b.suspended()), b.body()); }

Binder1 apply_binder(const Env& e, const Binder1& b) { return Binder1(env_comp(b.suspended(), e), b.body()); }

Term instantiate1(const Binder1& b, Term arg) { return instantiate1(b, Suspension::ready(std::move(arg))); }

Term instantiate1(const Binder1& b, Suspension arg) {
    return instantiate_with(b, std::move(arg), [](const Env& r, const Term& body) { return apply(r, body); });
}

}  // namespace scopebind
