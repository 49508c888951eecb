#include <random>

#include "scopebind/binders.hpp"
#include "scopebind/evaluators.hpp"
#include "scopebind/frontend.hpp"

namespace scopebind {

namespace {

class TermGen {
public:
    explicit TermGen(std::uint64_t seed) : rng_(seed) {}

    Term gen(ScopeIndex scope, std::uint32_t budget) {
        if (budget == 0) {
            if (scope.value() > 0) return var(scope);
            return Term::lam(bind1(Term::var(0, scope.succ()), scope));
        }
        const std::uint32_t choices = scope.value() > 0 ? 3 : 2;
        switch (pick(choices) + (3 - choices)) {
            case 0: return var(scope);
            case 1: return Term::lam(bind1(gen(scope.succ(), budget - 1), scope));
            default: {
                const std::uint32_t rest = budget - 1;
                std::geometric_distribution<std::uint32_t> geo(0.4);
                const std::uint32_t small = std::min(rest, geo(rng_));
                const bool small_left = pick(2) == 0;
                const std::uint32_t left = small_left ? small : rest - small;
                Term f = gen(scope, left);
                Term a = gen(scope, rest - left);
                return Term::app(std::move(f), std::move(a));
            }
        }
    }

private:
    std::uint32_t pick(std::uint32_t n) { return std::uniform_int_distribution<std::uint32_t>(0, n - 1)(rng_); }
    Term var(ScopeIndex scope) { return Term::var(pick(scope.value()), scope); }

    std::mt19937_64 rng_;
};

bool qualifies(const Term& t, std::uint32_t min_steps) {
    if (min_steps == 0) return true;
    Budget fuel = Budget::limited(std::uint64_t{10} * min_steps);
    try {
        nf(t, EvalStrategy{Strategy::BindV, false}, fuel);
    } catch (const FuelExhausted&) {
        return false;
    }
    return fuel.used() >= min_steps;
}

}  // namespace

std::vector<Term> gen_term(const GenConfig& cfg) {
    TermGen g(cfg.seed);
    std::vector<Term> out;
    out.reserve(cfg.count);
    const std::uint64_t max_attempts = std::uint64_t{cfg.max_attempts_per_term} * std::max<std::uint32_t>(cfg.count, 1);
    for (std::uint64_t attempts = 0; out.size() < cfg.count && attempts < max_attempts; ++attempts) {
        Term t = g.gen(cfg.target_scope, cfg.size_budget);
        if (qualifies(t, cfg.min_steps)) out.push_back(std::move(t));
    }
    return out;
}

}  // namespace scopebind
