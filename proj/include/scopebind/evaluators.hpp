#pragma once

// Evaluators and normalizers.
//
//   EvalV   closure-based environment machine; closed terms only, results
//           are read back into terms.
//   SubstV  substitution-based, using eager capture-avoiding substitution.
//   BindV   substitution-based, using binders with delayed substitutions.
//   EnvV    environment-passing evaluator over delayed substitutions.
//
// Booleans act as selectors: `true a b` reduces to `a` and `false a b` to `b`.
// A boolean applied to a single argument is a value.
//
// Arguments are passed lazily. For BindV and EnvV the argument is evaluated
// the first time the substitution reaches one of its occurrences and the
// result is shared. SubstV substitutes the argument term itself: eager
// substitution has to traverse every occurrence, including those under
// binders, so an evaluated argument would be demanded too early.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "scopebind/binders.hpp"
#include "scopebind/core.hpp"
#include "scopebind/environment.hpp"

namespace scopebind {

/// A redex that cannot fire: a pair applied to an argument, a split of a
/// function, an application stuck at the top level of a closed term, ...
class EvalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FuelExhausted : public std::runtime_error {
public:
    explicit FuelExhausted(std::uint64_t limit)
        : std::runtime_error("fuel exhausted after " + std::to_string(limit) + " reduction steps"), limit_(limit) {}
    [[nodiscard]] std::uint64_t limit() const { return limit_; }

private:
    std::uint64_t limit_;
};

/// Shared reduction-step counter with an optional limit. Copies refer to the
/// same counter, so steps taken inside suspensions are charged to it too.
class Budget {
public:
    Budget() : state_(std::make_shared<State>()) {}
    static Budget unlimited() { return Budget(); }
    static Budget limited(std::uint64_t steps) {
        Budget b;
        b.state_->limit = steps;
        return b;
    }

    void tick() const {
        State& s = *state_;
        if (s.limit && s.used >= *s.limit) throw FuelExhausted(*s.limit);
        ++s.used;
    }
    [[nodiscard]] std::uint64_t used() const { return state_->used; }
    [[nodiscard]] std::optional<std::uint64_t> limit() const { return state_->limit; }

private:
    struct State {
        std::optional<std::uint64_t> limit;
        std::uint64_t used = 0;
    };
    std::shared_ptr<State> state_;
};

enum class Strategy : std::uint8_t { EvalV, SubstV, BindV, EnvV };

struct EvalStrategy {
    Strategy strategy = Strategy::BindV;
    /// For whnf/nf: reduce each argument to weak-head normal form before it
    /// is substituted (still on demand). Ignored by SubstV.
    bool prereduce_arg = false;
};

[[nodiscard]] std::string_view to_string(Strategy s);
[[nodiscard]] std::optional<Strategy> parse_strategy(std::string_view name);

// ---------------------------------------------------------------------------
// Closure evaluator

struct Value;

/// Persistent list of lazily evaluated values; index 0 is the most recent.
class ValueEnv {
public:
    ValueEnv() = default;

    [[nodiscard]] ValueEnv push(Lazy<Value> v) const;
    [[nodiscard]] std::uint32_t size() const;
    [[nodiscard]] const Lazy<Value>& at(std::uint32_t i) const;

private:
    struct Cell;
    explicit ValueEnv(std::shared_ptr<const Cell> c) : head_(std::move(c)) {}
    std::shared_ptr<const Cell> head_;
};

struct Closure {
    ValueEnv env;
    Binder1 binder;
};

struct BoolValue {
    bool value;
};

/// A boolean applied to its first argument, waiting for the second.
struct Selector {
    bool value;
    ValueEnv env;
    Term first;
};

/// A pair whose components have not been evaluated yet.
struct PairValue {
    ValueEnv env;
    Term first;
    Term second;
};

struct Value : std::variant<Closure, BoolValue, Selector, PairValue> {
    using variant::variant;
};

Value eval_closure(const ValueEnv& env, const Term& t, Budget budget = {});
/// Converts a closed value back into a (closed) term.
Term readback(const Value& v);

// ---------------------------------------------------------------------------
// Substitution-based and environment-passing evaluators

/// Weak call-by-need evaluation with SubstV or BindV. Works on open terms:
/// an application with a variable at its head is returned as is.
Term eval_subst(const Term& t, EvalStrategy s, Budget budget = {});

/// Environment-passing evaluation: the result is `t` evaluated under `r`.
Term eval_env(const Env& r, const Term& t, Budget budget = {});

/// Weak evaluation with any strategy; EvalV requires a closed term.
Term evaluate(const Term& t, EvalStrategy s, Budget budget = {});

Term whnf(const Term& t, EvalStrategy s, Budget budget = {});
/// Full beta normal form. Throws EvalError for EvalV, which cannot go under
/// binders.
Term nf(const Term& t, EvalStrategy s, Budget budget = {});

Term whnf_env(const Env& r, const Term& t, bool prereduce_arg, Budget budget = {});
Term nf_env(const Env& r, const Term& t, bool prereduce_arg, Budget budget = {});

/// Runs `fn` on a thread with a large stack, carrying over the caller's
/// default environment representation. Exceptions are rethrown in the caller.
void run_deep(const std::function<void()>& fn, std::size_t stack_bytes = std::size_t{1} << 30);

}  // namespace scopebind
