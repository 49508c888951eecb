#pragma once

// Node layouts behind the Term and Env handles. Internal to the library and
// its tests; client code goes through the handle accessors.

#include <cstdint>
#include <functional>

#include "scopebind/binders.hpp"
#include "scopebind/core.hpp"
#include "scopebind/patterns.hpp"

namespace scopebind::detail {

struct TermNode {
    TermKind kind;
    ScopeIndex scope;
};

struct VarNode : TermNode {
    std::uint32_t index;
};

struct LamNode : TermNode {
    Binder1 binder;
};

struct AppNode : TermNode {
    Term fun;
    Term arg;
};

struct BoolNode : TermNode {
    bool value;
};

struct PairNode : TermNode {
    Term first;
    Term second;
};

struct SplitNode : TermNode {
    Term scrutinee;
    PatBinder<NVars> binder;
};

struct LetPairNode : TermNode {
    Term scrutinee;
    PatBinder<TuplePat> binder;
};

enum class EnvKind : std::uint8_t { Inc, Cons, Comp, Fn };

struct EnvNode {
    EnvKind kind;
    EnvRepr repr;
    ScopeIndex domain;
    ScopeIndex codomain;
};

/// Shift by `amount`; Inc 0 is the identity and Inc k on domain 0 is nil.
struct IncNode : EnvNode {
    std::uint32_t amount;
};

struct ConsNode : EnvNode {
    Suspension head;
    Lazy<Env> tail;
};

struct CompNode : EnvNode {
    Env first;
    Env second;
};

struct FnNode : EnvNode {
    std::function<Term(std::uint32_t)> fn;
    bool identity;
};

}  // namespace scopebind::detail
