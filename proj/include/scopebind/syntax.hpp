#pragma once

// Operations on the object language: substitution, alpha-equivalence,
// pattern matching and a few structural utilities.

#include <cstdint>
#include <optional>
#include <string>

#include "scopebind/binders.hpp"
#include "scopebind/core.hpp"
#include "scopebind/environment.hpp"
#include "scopebind/patterns.hpp"

namespace scopebind {

/// Per-constructor substitution traversal. Variables are looked up; Lam, Split
/// and LetPair compose `e` into their binder; everything else recurses.
Term subst_term(const Env& e, const Term& t);

/// Equality up to the environments suspended in binders. Binder bodies are
/// compared after pushing their suspended environments in, one binder at a
/// time, stopping at the first difference. Throws ScopeError if the two terms
/// live in different scopes.
bool alpha_eq(const Term& a, const Term& b);

/// Node-by-node equality, including the identity of suspended environments.
/// Stronger than alpha_eq; used to check that nothing was rebuilt.
bool structural_eq(const Term& a, const Term& b);

/// Matches a (syntactic) value against a tuple pattern. On success the result
/// maps the pattern's variables to sub-terms, with the right component of each
/// pair occupying the lower indices. Returns nullopt on a shape mismatch.
std::optional<Env> pattern_match(const TuplePat& p, const Term& v);

/// Smallest scope in which `t` would still be well scoped.
ScopeIndex free_index_bound(const Term& t);

/// Copy of `t` in which every binder has been forced and rebuilt with an
/// identity environment of the thread's current representation.
Term force_binders(const Term& t);

/// Canonical de Bruijn rendering, e.g. `\.(0 1)`; alpha-equivalent terms
/// render identically.
std::string show_indices(const Term& t);

/// 64-bit FNV-1a digest of show_indices(t).
std::uint64_t alpha_hash(const Term& t);

/// True if `t` contains no beta, selector, split or let-pair redex.
bool is_normal(const Term& t);

}  // namespace scopebind
