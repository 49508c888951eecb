#include <algorithm>
#include <unordered_set>

#include "scopebind/binders.hpp"
#include "scopebind/frontend.hpp"

namespace scopebind {

namespace {

// Variables in pattern-index order: index 0 first.
void flatten(const NamedPat& p, std::vector<std::string>& out) {
    if (p.is_var()) {
        out.push_back(p.name);
        return;
    }
    flatten(*p.right, out);
    flatten(*p.left, out);
}

TuplePat to_pattern(const NamedPat& p) {
    if (p.is_var()) return TuplePat::var();
    return TuplePat::pair(to_pattern(*p.left), to_pattern(*p.right));
}

class Checker {
public:
    explicit Checker(std::vector<std::string> ambient) : names_(std::move(ambient)) {}

    Term check(const NamedTerm& t) {
        const ScopeIndex scope(static_cast<std::uint32_t>(names_.size()));
        return std::visit(
            [&](const auto& n) -> Term {
                using N = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<N, NVar>) {
                    for (std::size_t level = names_.size(); level-- > 0;) {
                        if (names_[level] == n.name) {
                            return Term::var(static_cast<std::uint32_t>(names_.size() - 1 - level), scope);
                        }
                    }
                    throw UnboundName(n.name, n.pos);
                } else if constexpr (std::is_same_v<N, NLam>) {
                    return Term::lam(bind1(under({n.name}, *n.body), scope));
                } else if constexpr (std::is_same_v<N, NApp>) {
                    return Term::app(check(*n.fun), check(*n.arg));
                } else if constexpr (std::is_same_v<N, NBool>) {
                    return Term::boolean(n.value, scope);
                } else if constexpr (std::is_same_v<N, NPair>) {
                    return Term::pair(check(*n.first), check(*n.second));
                } else if constexpr (std::is_same_v<N, NSplit>) {
                    Term s = check(*n.scrutinee);
                    return Term::split(std::move(s), bind_pat(NVars(2), under({n.first, n.second}, *n.body), scope));
                } else {
                    Term s = check(*n.scrutinee);
                    std::vector<std::string> vars;
                    flatten(n.pattern, vars);
                    return Term::let_pair(std::move(s),
                                          bind_pat(to_pattern(n.pattern), under(vars, *n.body), scope));
                }
            },
            t.node);
    }

private:
    // Checks `body` with `vars` bound; vars[0] becomes index 0.
    Term under(const std::vector<std::string>& vars, const NamedTerm& body) {
        for (auto it = vars.rbegin(); it != vars.rend(); ++it) names_.push_back(*it);
        Term r = check(body);
        names_.resize(names_.size() - vars.size());
        return r;
    }

    std::vector<std::string> names_;
};

enum class Ctx { Top, Fun, Arg, Scrutinee };

class Printer {
public:
    explicit Printer(std::vector<std::string> ambient, bool avoid)
        : names_(std::move(ambient)), reserved_(names_.begin(), names_.end()), avoid_(avoid) {}

    std::string render(const Term& t, Ctx ctx) {
        switch (t.kind()) {
            case TermKind::Var: return names_[names_.size() - 1 - t.var_index().index()];
            case TermKind::Bool: return t.bool_value() ? "true" : "false";
            case TermKind::Pair: return "(" + render(t.first(), Ctx::Top) + ", " + render(t.second(), Ctx::Top) + ")";
            case TermKind::App: {
                std::string s = render(t.fun(), Ctx::Fun) + " " + render(t.arg(), Ctx::Arg);
                return ctx == Ctx::Arg ? "(" + s + ")" : s;
            }
            case TermKind::Lam: {
                const std::string x = fresh();
                std::string s = "\\" + x + ". " + body(unbind(t.lam_binder()), {x});
                return wrap(std::move(s), ctx);
            }
            case TermKind::Split: {
                std::string s = "split " + render(t.scrutinee(), Ctx::Scrutinee);
                const std::string x = fresh(1);
                const std::string y = fresh(0);
                s += " as (" + x + ", " + y + ") in " + body(unbind_pat(t.split_binder()), {x, y});
                return wrap(std::move(s), ctx);
            }
            case TermKind::LetPair: {
                const auto& b = t.let_binder();
                std::string s = "let ";
                std::vector<std::string> vars(b.size().value);
                for (std::uint32_t i = 0; i < b.size().value; ++i) vars[i] = fresh(b.size().value - 1 - i);
                std::uint32_t next = b.size().value;
                const std::string pat = show_pattern(b.pattern(), vars, next);
                s += b.pattern().is_var() ? "(" + pat + ")" : pat;
                s += " = " + render(t.scrutinee(), Ctx::Scrutinee) + " in " + body(unbind_pat(b), vars);
                return wrap(std::move(s), ctx);
            }
        }
        return "?";
    }

private:
    static std::string wrap(std::string s, Ctx ctx) { return ctx == Ctx::Top ? s : "(" + s + ")"; }

    // Name for the variable `offset` levels above the current depth.
    std::string fresh(std::size_t offset = 0) {
        std::string n = "x" + std::to_string(names_.size() + offset);
        if (avoid_) {
            while (reserved_.count(n)) n += '\'';
        }
        return n;
    }

    std::string body(const Term& t, const std::vector<std::string>& vars) {
        for (auto it = vars.rbegin(); it != vars.rend(); ++it) names_.push_back(*it);
        std::string s = render(t, Ctx::Top);
        names_.resize(names_.size() - vars.size());
        return s;
    }

    // Leaves are printed left to right; the highest index comes first.
    static std::string show_pattern(const TuplePat& p, const std::vector<std::string>& vars, std::uint32_t& next) {
        if (p.is_var()) return vars[--next];
        std::string l = show_pattern(p.left(), vars, next);
        std::string r = show_pattern(p.right(), vars, next);
        return "(" + l + ", " + r + ")";
    }

    std::vector<std::string> names_;
    std::unordered_set<std::string> reserved_;
    bool avoid_;
};

}  // namespace

Term scope_check(const NamedTerm& t, const std::vector<std::string>& ambient) { return Checker(ambient).check(t); }

std::vector<std::string> default_names(std::uint32_t count) {
    std::vector<std::string> out;
    out.reserve(count);
    for (std::uint32_t i = 0; i < count; ++i) out.push_back("x" + std::to_string(i));
    return out;
}

std::string pretty(const Term& t, const std::vector<std::string>* ambient) {
    const std::uint32_t n = t.scope().value();
    if (ambient && ambient->size() != n) throw ScopeError("pretty: wrong number of ambient names");
    Printer p(ambient ? *ambient : default_names(n), ambient != nullptr);
    return p.render(t, Ctx::Top);
}

}  // namespace scopebind
