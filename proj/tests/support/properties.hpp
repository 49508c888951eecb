#pragma once

// Randomized laws shared by the unit suites and the acceptance runner. Each
// property draws its own cases from a seed and reports how many ran and the
// first counterexample it met.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "scopebind/binders.hpp"
#include "scopebind/eager.hpp"
#include "scopebind/environment.hpp"
#include "scopebind/evaluators.hpp"
#include "scopebind/syntax.hpp"

namespace scopebind::props {

using testgen::Rng;

inline constexpr std::array<EnvRepr, 3> kReprs{EnvRepr::Functional, EnvRepr::LazyDefunc, EnvRepr::StrictDefunc};

struct Report {
    std::string name;
    std::uint32_t cases = 0;
    std::uint32_t skipped = 0;
    std::uint32_t failures = 0;
    std::string first_failure;

    [[nodiscard]] bool ok() const { return cases > 0 && failures == 0; }
    [[nodiscard]] std::string summary() const {
        std::ostringstream os;
        os << name << ": " << cases << " cases, " << failures << " failures";
        if (skipped) os << ", " << skipped << " skipped";
        if (failures) os << "; first: " << first_failure;
        return os.str();
    }
};

/// Result of one case: nullopt passes, a message fails.
using Outcome = std::optional<std::string>;

struct Skip {};

/// Runs `body` until `cases` cases have been decided. A body may throw Skip
/// to discard its case (at most 20x `cases` attempts are made).
template <class F>
Report check(std::string name, std::uint32_t cases, std::uint64_t seed, F&& body) {
    Report r{std::move(name)};
    Rng rng(seed);
    for (std::uint64_t attempts = 0; r.cases < cases && attempts < 20ULL * cases; ++attempts) {
        Outcome o;
        try {
            o = body(rng);
        } catch (const Skip&) {
            ++r.skipped;
            continue;
        } catch (const std::exception& e) {
            o = std::string("exception: ") + e.what();
        }
        ++r.cases;
        if (o) {
            if (r.failures == 0) r.first_failure = *o;
            ++r.failures;
        }
    }
    return r;
}

inline std::string show(const Term& t) { return show_indices(t); }

inline Outcome expect_alpha(const Term& got, const Term& want, const std::string& what) {
    if (alpha_eq(got, want)) return std::nullopt;
    return what + ": got " + show(got) + ", expected " + show(want);
}

/// Every index of `a` looks up to the same term as in `b`.
inline Outcome pointwise(const Env& a, const Env& b, const std::string& what) {
    if (a.domain() != b.domain() || a.codomain() != b.codomain()) return what + ": scopes differ";
    for (std::uint32_t i = 0; i < a.domain().value(); ++i) {
        if (auto o = expect_alpha(env_lookup(a, i), env_lookup(b, i), what + " at " + std::to_string(i))) return o;
    }
    return std::nullopt;
}

inline Outcome pointwise(const Env& a, const eager::Subst& b, const std::string& what) {
    if (a.domain() != b.domain || a.codomain() != b.codomain) return what + ": scopes differ";
    for (std::uint32_t i = 0; i < a.domain().value(); ++i) {
        if (auto o = expect_alpha(env_lookup(a, i), b.at(i), what + " at " + std::to_string(i))) return o;
    }
    return std::nullopt;
}

inline ScopeIndex small_scope(Rng& rng) { return ScopeIndex(rng.between(0, 5)); }

inline EnvRepr any_repr(Rng& rng) { return kReprs[rng.below(3)]; }

// ---------------------------------------------------------------------------
// Environment algebra

inline Report composition_pointwise(std::uint32_t cases, std::uint64_t seed) {
    return check("composition is pointwise apply", cases, seed, [](Rng& rng) -> Outcome {
        const ScopeIndex m = small_scope(rng), p = small_scope(rng), n = small_scope(rng);
        const auto e1 = testgen::random_env(rng, m, p, 3);
        const auto e2 = testgen::random_env(rng, p, n, 3);
        const EnvRepr repr = any_repr(rng);
        const Env s1 = testgen::build(*e1, repr), s2 = testgen::build(*e2, repr);
        const Env c = env_comp(s1, s2);
        if (c.domain() != m || c.codomain() != n) return std::string("composite has the wrong scopes");
        for (std::uint32_t i = 0; i < m.value(); ++i) {
            if (auto o = expect_alpha(env_lookup(c, i), apply(s2, env_lookup(s1, i)),
                                      testgen::describe(*e1) + " >> " + testgen::describe(*e2))) {
                return o;
            }
        }
        return std::nullopt;
    });
}

inline Report fusion(std::uint32_t cases, std::uint64_t seed) {
    return check("apply fuses with composition", cases, seed, [](Rng& rng) -> Outcome {
        const ScopeIndex m = small_scope(rng), p = small_scope(rng), n = small_scope(rng);
        const auto e1 = testgen::random_env(rng, m, p, 3);
        const auto e2 = testgen::random_env(rng, p, n, 3);
        const EnvRepr repr = any_repr(rng);
        const Env s1 = testgen::build(*e1, repr), s2 = testgen::build(*e2, repr);
        const Term t = testgen::random_term(rng, m, 8);
        return expect_alpha(apply(s2, apply(s1, t)), apply(env_comp(s1, s2), t), "fusion on " + show(t));
    });
}

inline Report identity_laws(std::uint32_t cases, std::uint64_t seed) {
    return check("identity laws", cases, seed, [](Rng& rng) -> Outcome {
        const ScopeIndex m = small_scope(rng), n = small_scope(rng);
        const EnvRepr repr = any_repr(rng);
        const Term t = testgen::random_term(rng, m, 8);
        if (auto o = expect_alpha(apply(env_id(m, repr), t), t, "apply id")) return o;
        const Env s = testgen::build(*testgen::random_env(rng, m, n, 3), repr);
        if (auto o = pointwise(env_comp(env_id(m, repr), s), s, "id >> s")) return o;
        return pointwise(env_comp(s, env_id(n, repr)), s, "s >> id");
    });
}

inline Report up_law(std::uint32_t cases, std::uint64_t seed) {
    return check("up agrees with its definition", cases, seed, [](Rng& rng) -> Outcome {
        const ScopeIndex m = small_scope(rng), n = small_scope(rng);
        const auto e = testgen::random_env(rng, m, n, 3);
        const Env reference = env_cons(Term::var(0, n.succ()),
                                       env_comp(testgen::build(*e, EnvRepr::Functional),
                                                env_shift(n, EnvRepr::Functional)));
        for (EnvRepr repr : kReprs) {
            const Env up = env_up(testgen::build(*e, repr));
            if (up.domain() != m.succ() || up.codomain() != n.succ()) return std::string("up has the wrong scopes");
            if (auto o = pointwise(up, reference, "up under " + std::string(to_string(repr)))) return o;
        }
        return pointwise(env_up(testgen::build(*e, EnvRepr::LazyDefunc)), eager::up(testgen::oracle(*e)),
                         "up against eager");
    });
}

inline Report representation_agreement(std::uint32_t cases, std::uint64_t seed) {
    return check("representations agree", cases, seed, [](Rng& rng) -> Outcome {
        const ScopeIndex m = small_scope(rng), n = small_scope(rng);
        const auto e = testgen::random_env(rng, m, n, 4);
        const eager::Subst ref = testgen::oracle(*e);
        const Term t = testgen::random_term(rng, m, 8);
        const Term want = eager::apply(ref, t);
        for (EnvRepr repr : kReprs) {
            const Env s = testgen::build(*e, repr);
            if (s.repr() != repr) return std::string("representation was not preserved");
            const std::string what = testgen::describe(*e) + " under " + std::string(to_string(repr));
            if (auto o = pointwise(s, ref, what)) return o;
            if (auto o = expect_alpha(apply(s, t), want, what + " applied to " + show(t))) return o;
        }
        return std::nullopt;
    });
}

inline Report apply_opt_agrees(std::uint32_t cases, std::uint64_t seed) {
    return check("apply_opt agrees with apply", cases, seed, [](Rng& rng) -> Outcome {
        const ScopeIndex m = small_scope(rng);
        const EnvRepr repr = any_repr(rng);
        const Env s = rng.coin(0.3) ? env_id(m, repr)
                                    : testgen::build(*testgen::random_env(rng, m, small_scope(rng), 3), repr);
        const Term t = testgen::random_term(rng, m, 8);
        return expect_alpha(apply_opt(s, t), apply(s, t), "apply_opt on " + show(t));
    });
}

// ---------------------------------------------------------------------------
// Binders

inline Report delayed_matches_eager(std::uint32_t cases, std::uint64_t seed) {
    return check("unbind after apply_binder matches eager substitution", cases, seed, [](Rng& rng) -> Outcome {
        const ScopeIndex m = small_scope(rng), n = small_scope(rng);
        const auto e = testgen::random_env(rng, m, n, 3);
        const Env s = testgen::build(*e, any_repr(rng));
        const eager::Subst ref = testgen::oracle(*e);
        switch (rng.below(3)) {
            case 0: {
                const Binder1 b = testgen::random_binder(rng, m, 6);
                return expect_alpha(unbind(apply_binder(s, b)), eager::apply(eager::up(ref), unbind(b)),
                                    "binder " + show(Term::lam(b)) + " under " + testgen::describe(*e));
            }
            case 1: {
                const Term body = testgen::random_term(rng, m + 2u, 6);
                const auto b = bind_pat(NVars(2), body, m);
                return expect_alpha(unbind_pat(apply_binder(s, b)), eager::apply(eager::up_by(ref, 2), unbind_pat(b)),
                                    "split binder under " + testgen::describe(*e));
            }
            default: {
                const TuplePat p = testgen::random_pattern(rng, 2);
                const Term body = testgen::random_term(rng, m + p.size().value, 6);
                const auto b = apply_binder(testgen::build(*testgen::random_env(rng, m, m, 2), any_repr(rng)),
                                            bind_pat(p, body, m));
                return expect_alpha(unbind_pat(apply_binder(s, b)),
                                    eager::apply(eager::up_by(ref, p.size().value), unbind_pat(b)),
                                    "pattern binder " + p.show() + " under " + testgen::describe(*e));
            }
        }
    });
}

inline Report bind_unbind_round_trip(std::uint32_t cases, std::uint64_t seed) {
    return check("unbind(bind1 t) returns t untouched", cases, seed, [](Rng& rng) -> Outcome {
        const ScopeIndex n = small_scope(rng);
        ScopedEnvRepr guard(any_repr(rng));
        const Term t = testgen::random_term(rng, n.succ(), 10);
        const Binder1 b = bind1(t, n);
        const std::uint64_t before = stats::apply_node_visits();
        const Term back = unbind(b);
        const std::uint64_t visits = stats::apply_node_visits() - before;
        if (visits != 0) return "apply visited " + std::to_string(visits) + " nodes";
        if (!structural_eq(back, t)) return "not structurally equal: " + show(t);
        if (!back.same_node(t)) return std::string("the body was rebuilt");
        return std::nullopt;
    });
}

inline Report instantiate_law(std::uint32_t cases, std::uint64_t seed) {
    return check("instantiate1 substitutes into the opened body", cases, seed, [](Rng& rng) -> Outcome {
        const ScopeIndex n = small_scope(rng);
        const EnvRepr repr = any_repr(rng);
        ScopedEnvRepr guard(repr);
        const Binder1 b = testgen::random_binder(rng, n, 6);
        const Term a = testgen::random_term(rng, n, 4);
        const Term want = apply(env_cons(a, env_id(n, repr)), unbind(b));
        if (auto o = expect_alpha(instantiate1(b, a), want, "instantiate1")) return o;
        if (auto o = expect_alpha(eager::instantiate(b, a), want, "eager instantiate")) return o;
        return expect_alpha(instantiate_with(b, Suspension::ready(a), [](const Env& r, const Term& body) {
                                return apply(r, body);
                            }),
                            want, "instantiate_with");
    });
}

inline Report apply_binder_composes(std::uint32_t cases, std::uint64_t seed) {
    return check("apply_binder composes", cases, seed, [](Rng& rng) -> Outcome {
        const ScopeIndex m = small_scope(rng), p = small_scope(rng), n = small_scope(rng);
        const EnvRepr repr = any_repr(rng);
        const Env s1 = testgen::build(*testgen::random_env(rng, m, p, 3), repr);
        const Env s2 = testgen::build(*testgen::random_env(rng, p, n, 3), repr);
        const Binder1 b = testgen::random_binder(rng, m, 6);
        return expect_alpha(unbind(apply_binder(s2, apply_binder(s1, b))), unbind(apply_binder(env_comp(s1, s2), b)),
                            "composition of binder substitutions");
    });
}

inline Report binder_representation_independence(std::uint32_t cases, std::uint64_t seed) {
    return check("binders compare by forced body", cases, seed, [](Rng& rng) -> Outcome {
        const ScopeIndex m = small_scope(rng), n = small_scope(rng);
        const Env s = testgen::build(*testgen::random_env(rng, m, n, 3), any_repr(rng));
        const Binder1 b = testgen::random_binder(rng, m, 6);
        const Term lhs = Term::lam(apply_binder(s, b));
        const Term rhs = Term::lam(bind1(apply(env_up(s), unbind(b)), n));
        return expect_alpha(lhs, rhs, "delayed vs pushed binder");
    });
}

// ---------------------------------------------------------------------------
// Syntax

inline Report alpha_equivalence_relation(std::uint32_t cases, std::uint64_t seed) {
    return check("alpha_eq is an equivalence relation", cases, seed, [](Rng& rng) -> Outcome {
        const ScopeIndex n = small_scope(rng);
        const Term t = testgen::random_term(rng, n, 8);
        // Several presentations of t, plus unrelated terms.
        std::vector<Term> xs{t,
                             apply(env_id(n, EnvRepr::Functional), t),
                             apply(env_id(n, EnvRepr::StrictDefunc), t),
                             eager::apply(eager::identity(n), t),
                             apply(env_cons(Term::boolean(true, n), env_id(n)), apply(env_shift(n), t)),
                             force_binders(t)};
        const std::size_t variants = xs.size();
        xs.push_back(testgen::random_term(rng, n, 8));
        xs.push_back(testgen::random_term(rng, n, 2));
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (!alpha_eq(xs[i], xs[i])) return "not reflexive on " + show(xs[i]);
            for (std::size_t j = 0; j < xs.size(); ++j) {
                const bool ij = alpha_eq(xs[i], xs[j]);
                if (ij != alpha_eq(xs[j], xs[i])) return "not symmetric on " + show(xs[i]) + " / " + show(xs[j]);
                if (i < variants && j < variants && !ij) return "presentations differ: " + show(xs[i]) + " / " + show(xs[j]);
                for (std::size_t k = 0; k < xs.size(); ++k) {
                    if (ij && alpha_eq(xs[j], xs[k]) && !alpha_eq(xs[i], xs[k])) return std::string("not transitive");
                }
            }
        }
        return std::nullopt;
    });
}

inline Report pattern_match_arity(std::uint32_t cases, std::uint64_t seed) {
    return check("pattern_match yields one value per pattern variable", cases, seed, [](Rng& rng) -> Outcome {
        const ScopeIndex n = small_scope(rng);
        const TuplePat p = testgen::random_pattern(rng, 3);
        if (rng.coin(0.25)) {
            // A non-pair where the pattern needs a pair must not match.
            const Term v = Term::lam(bind1(testgen::random_term(rng, n.succ(), 3), n));
            if (!p.is_var() && pattern_match(p, v)) return "matched a function against " + p.show();
            return std::nullopt;
        }
        const Term v = testgen::value_for(rng, p, n);
        const auto r = pattern_match(p, v);
        if (!r) return "no match for " + p.show();
        if (r->domain().value() != p.size().value) return "domain differs from size of " + p.show();
        if (r->codomain() != n) return std::string("codomain is not the value's scope");
        // instantiate_pat must reject every other arity.
        const auto b = bind_pat(p, Term::boolean(true, n + p.size().value), n);
        const std::uint32_t wrong = rng.between(0, p.size().value + 2);
        if (wrong != p.size().value) {
            Env args = env_nil(n);
            for (std::uint32_t i = 0; i < wrong; ++i) args = env_cons(Term::boolean(false, n), args);
            try {
                (void)instantiate_pat(b, args);
                return "accepted " + std::to_string(wrong) + " values for " + p.show();
            } catch (const ScopeError&) {
            }
        }
        if (!instantiate_pat(b, *r).is(TermKind::Bool)) return std::string("instantiation failed");
        return std::nullopt;
    });
}

// ---------------------------------------------------------------------------
// Evaluation

/// Random term that normalizes without getting stuck under every normalizer;
/// throws Skip otherwise.
inline Term normalizing_term(Rng& rng, ScopeIndex scope, int size) {
    testgen::TermOptions opt;
    opt.suspended = rng.coin(0.3);
    const Term t = testgen::random_term(rng, scope, size, opt);
    try {
        for (Strategy s : {Strategy::SubstV, Strategy::BindV, Strategy::EnvV}) {
            for (bool pre : {false, true}) (void)nf(t, EvalStrategy{s, pre}, Budget::limited(2000));
        }
    } catch (const FuelExhausted&) {
        throw Skip{};
    } catch (const EvalError&) {
        throw Skip{};
    }
    return t;
}

inline Report nf_idempotent_and_normal(std::uint32_t cases, std::uint64_t seed) {
    return check("nf is idempotent and redex-free", cases, seed, [](Rng& rng) -> Outcome {
        const ScopeIndex n(rng.between(0, 3));
        const Term t = normalizing_term(rng, n, 10);
        for (Strategy s : {Strategy::SubstV, Strategy::BindV, Strategy::EnvV}) {
            for (bool pre : {false, true}) {
                const EvalStrategy st{s, pre};
                const std::string what = std::string(to_string(s)) + (pre ? " (prereduced)" : "") + " on " + show(t);
                Term once = t;
                try {
                    once = nf(t, st, Budget::limited(100000));
                } catch (const std::exception& e) {
                    return what + ": " + e.what();
                }
                if (!is_normal(once)) return what + ": result has a redex: " + show(once);
                if (once.scope() != t.scope()) return what + ": scope changed";
                if (auto o = expect_alpha(nf(once, st), once, what + ": not idempotent")) return o;
            }
        }
        return std::nullopt;
    });
}

inline Report nf_strategies_agree(std::uint32_t cases, std::uint64_t seed) {
    return check("normalizers agree", cases, seed, [](Rng& rng) -> Outcome {
        const ScopeIndex n(rng.between(0, 3));
        const Term t = normalizing_term(rng, n, 10);
        const Term want = nf(t, EvalStrategy{Strategy::SubstV, false}, Budget::limited(100000));
        for (EnvRepr repr : kReprs) {
            ScopedEnvRepr guard(repr);
            const Term u = force_binders(t);
            for (Strategy s : {Strategy::BindV, Strategy::EnvV}) {
                for (bool pre : {false, true}) {
                    const Term got = nf(u, EvalStrategy{s, pre}, Budget::limited(100000));
                    if (auto o = expect_alpha(got, want, std::string(to_string(s)) + "/" +
                                                             std::string(to_string(repr)) + " on " + show(t))) {
                        return o;
                    }
                }
            }
        }
        return std::nullopt;
    });
}

}  // namespace scopebind::props
