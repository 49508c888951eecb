#pragma once

// Text front end: named syntax, parser, scope checker, pretty printer, random
// term generator, and the Church-numeral benchmark term.
//
// Concrete syntax:
//
//   e ::= \x y z. e                      abstraction (several names allowed)
//       | e e                            application, left associative
//       | let x = e; y = e in e          sequential, non-recursive
//       | let (x, (y, z)) = e in e       nested tuple pattern
//       | split e as (x, y) in e
//       | (e, e) | (e) | true | false | x
//
// Identifiers match [A-Za-z][A-Za-z0-9_']*; `--` starts a line comment.
// `let x = a in b` is read as `(\x. b) a`.

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "scopebind/core.hpp"

namespace scopebind {

struct SourcePos {
    std::uint32_t line = 1;
    std::uint32_t column = 1;
};

class ParseError : public std::runtime_error {
public:
    ParseError(SourcePos pos, const std::string& msg)
        : std::runtime_error(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + msg), pos_(pos) {}
    [[nodiscard]] SourcePos pos() const { return pos_; }

private:
    SourcePos pos_;
};

class UnboundName : public std::runtime_error {
public:
    UnboundName(std::string name, SourcePos pos)
        : std::runtime_error(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": unbound name '" +
                             name + "'"),
          name_(std::move(name)),
          pos_(pos) {}
    [[nodiscard]] const std::string& name() const { return name_; }
    [[nodiscard]] SourcePos pos() const { return pos_; }

private:
    std::string name_;
    SourcePos pos_;
};

// ---------------------------------------------------------------------------
// Named syntax

struct NamedTerm;
using NamedPtr = std::shared_ptr<const NamedTerm>;

/// Tuple pattern with names at the leaves.
struct NamedPat {
    std::string name;  // empty for a pair
    std::shared_ptr<const NamedPat> left;
    std::shared_ptr<const NamedPat> right;

    [[nodiscard]] bool is_var() const { return left == nullptr; }
};

struct NVar {
    std::string name;
    SourcePos pos;
};
struct NLam {
    std::string name;
    NamedPtr body;
};
struct NApp {
    NamedPtr fun;
    NamedPtr arg;
};
struct NBool {
    bool value;
};
struct NPair {
    NamedPtr first;
    NamedPtr second;
};
/// `split e as (x, y) in body`; x receives the first component.
struct NSplit {
    NamedPtr scrutinee;
    std::string first;
    std::string second;
    NamedPtr body;
};
struct NLetPair {
    NamedPat pattern;
    NamedPtr scrutinee;
    NamedPtr body;
};

struct NamedTerm {
    std::variant<NVar, NLam, NApp, NBool, NPair, NSplit, NLetPair> node;
};

namespace named {
NamedPtr var(std::string name, SourcePos pos = {});
NamedPtr lam(std::string name, NamedPtr body);
/// \a b c. body
NamedPtr lams(const std::vector<std::string>& names, NamedPtr body);
NamedPtr app(NamedPtr fun, NamedPtr arg);
/// Left-nested application of `fun` to every argument.
NamedPtr apps(NamedPtr fun, const std::vector<NamedPtr>& args);
NamedPtr boolean(bool value);
NamedPtr pair(NamedPtr first, NamedPtr second);
NamedPtr split(NamedPtr scrutinee, std::string first, std::string second, NamedPtr body);
NamedPtr let_pair(NamedPat pattern, NamedPtr scrutinee, NamedPtr body);
/// Sequential let, desugared to nested redexes.
NamedPtr let(const std::vector<std::pair<std::string, NamedPtr>>& bindings, NamedPtr body);
NamedPat pvar(std::string name);
NamedPat ppair(NamedPat left, NamedPat right);
}  // namespace named

NamedPtr parse(std::string_view text);
/// Reads and parses a file; throws std::runtime_error if it cannot be read.
NamedPtr parse_file(const std::filesystem::path& path);

/// Converts to de Bruijn form. `ambient` names the free variables, outermost
/// first, so the result lives in scope ambient.size(). The innermost binder
/// of a name wins.
Term scope_check(const NamedTerm& t, const std::vector<std::string>& ambient = {});

/// Names x0, x1, ... for the given number of ambient variables.
std::vector<std::string> default_names(std::uint32_t count);

/// Renders a term in the concrete syntax. A variable is named after its
/// binding depth (x0 for the outermost); `ambient` overrides the names of the
/// free variables, and bound names are chosen to avoid them.
std::string pretty(const Term& t, const std::vector<std::string>* ambient = nullptr);

// ---------------------------------------------------------------------------
// Generator

struct GenConfig {
    std::uint64_t seed = 0;
    ScopeIndex target_scope{0};
    std::uint32_t size_budget = 20;
    /// Keep only terms whose normalization needs at least this many steps.
    std::uint32_t min_steps = 0;
    std::uint32_t count = 1;
    /// Give up after this many rejected candidates per requested term.
    std::uint32_t max_attempts_per_term = 10000;
};

/// Deterministic in the configuration. Terms are built from Var, Lam and App.
/// With min_steps > 0 each candidate is normalized by the delayed-substitution
/// normalizer with fuel 10 * min_steps and dropped if it runs out of fuel or
/// needs fewer than min_steps steps.
std::vector<Term> gen_term(const GenConfig& cfg);

// ---------------------------------------------------------------------------
// Benchmark term

/// Source text of the benchmark term (checks 6! == sum [0..37] + 17 on
/// Scott-encoded numerals); the same text is shipped as data/lennart.lam.
std::string_view lennart_source();
/// The benchmark term built directly from named syntax, without the parser.
Term lennart_term();

}  // namespace scopebind
