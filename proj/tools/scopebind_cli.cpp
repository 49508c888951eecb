// Command-line front end: evaluate, normalize, scope-check, generate and
// benchmark lambda terms.
//
// Exit codes: 0 ok, 1 usage or I/O error, 2 unbound name, 3 parse error,
// 4 fuel exhausted, 5 stuck or ill-shaped redex, 6 benchmark results differ.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "scopebind/bench.hpp"
#include "scopebind/evaluators.hpp"
#include "scopebind/frontend.hpp"
#include "scopebind/syntax.hpp"

using namespace scopebind;

namespace {

enum Exit : int {
    kOk = 0,
    kUsage = 1,
    kUnbound = 2,
    kParse = 3,
    kFuel = 4,
    kStuck = 5,
    kDisagree = 6,
};

struct Options {
    std::string file;
    std::string impl = "bindv";
    std::string env = "lazy";
    std::optional<std::uint64_t> fuel;
    std::uint64_t seed = 0;
    std::uint32_t reps = 20;
    std::uint32_t scope = 0;
    std::string out;
    bool dump_indices = false;
    std::vector<std::string> tasks;
    std::vector<std::string> impls;
    std::vector<std::string> envs;
    std::uint32_t count = 10;
    std::uint32_t size = 24;
    std::uint32_t min_steps = 0;
    std::uint32_t random_count = 100;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Runs `body`, translating library exceptions into exit codes.
int guarded(const std::function<int()>& body) {
    int code = kOk;
    try {
        run_deep([&] { code = body(); });
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const UnboundName& e) {
        std::cerr << "scope error: " << e.what() << "\n";
        return kUnbound;
    } catch (const FuelExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFuel;
    } catch (const EvalError& e) {
        std::cerr << "stuck: " << e.what() << "\n";
        return kStuck;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return code;
}

Term load(const Options& o) {
    return scope_check(*parse(read_input(o.file)), default_names(o.scope));
}

int write_output(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return kOk;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot write " << o.out << "\n";
        return kUsage;
    }
    f << text;
    return kOk;
}

int cmd_run(const Options& o, bool normalize) {
    const auto strategy = parse_strategy(o.impl);
    const auto repr = parse_env_repr(o.env);
    if (!strategy || !repr) {
        std::cerr << "error: unknown --impl or --env value\n";
        return kUsage;
    }
    if (normalize && *strategy == Strategy::EvalV) {
        std::cerr << "error: evalv evaluates closed terms and cannot normalize; use substv, bindv or envv\n";
        return kUsage;
    }
    return guarded([&]() -> int {
        ScopedEnvRepr guard(*repr);
        const Term t = load(o);
        const Budget budget = o.fuel ? Budget::limited(*o.fuel) : Budget::unlimited();
        const Term r = normalize ? nf(t, EvalStrategy{*strategy, true}, budget)
                                 : evaluate(t, EvalStrategy{*strategy, false}, budget);
        const auto names = default_names(o.scope);
        return write_output(o, pretty(r, o.scope ? &names : nullptr) + "\n");
    });
}

int cmd_check(const Options& o) {
    return guarded([&]() -> int {
        const Term t = load(o);
        if (o.dump_indices) return write_output(o, show_indices(t) + "\n");
        return kOk;
    });
}

int cmd_gen(const Options& o) {
    return guarded([&]() -> int {
        GenConfig cfg;
        cfg.seed = o.seed;
        cfg.target_scope = ScopeIndex(o.scope);
        cfg.size_budget = o.size;
        cfg.min_steps = o.min_steps;
        cfg.count = o.count;
        std::string text;
        for (const Term& t : gen_term(cfg)) text += pretty(t) + "\n";
        return write_output(o, text);
    });
}

int cmd_bench(const Options& o) {
    bench::Config cfg;
    cfg.reps = o.reps;
    cfg.seed = o.seed;
    cfg.random_count = o.random_count;
    cfg.random_min_steps = o.min_steps ? o.min_steps : 15;
    cfg.random_size = o.size;
    if (!o.tasks.empty()) {
        cfg.tasks.clear();
        for (const auto& name : o.tasks) {
            auto t = bench::parse_task(name);
            if (!t) {
                std::cerr << "error: unknown task '" << name << "'\n";
                return kUsage;
            }
            cfg.tasks.push_back(*t);
        }
    }
    for (const auto& name : o.impls) {
        auto s = parse_strategy(name);
        if (!s) {
            std::cerr << "error: unknown implementation '" << name << "'\n";
            return kUsage;
        }
        cfg.strategies.push_back(*s);
    }
    if (!o.envs.empty()) {
        cfg.reprs.clear();
        for (const auto& name : o.envs) {
            auto r = parse_env_repr(name);
            if (!r) {
                std::cerr << "error: unknown environment '" << name << "'\n";
                return kUsage;
            }
            cfg.reprs.push_back(*r);
        }
    }
    cfg.progress = [](const std::string& s) { std::cerr << "bench: " << s << "\n"; };

    return guarded([&]() -> int {
        const auto records = bench::run(cfg);
        const auto consistency = bench::check_consistency(records);
        std::ostringstream csv;
        bench::write_csv(csv, bench::gated(records, consistency));
        if (int rc = write_output(o, csv.str()); rc != kOk) return rc;
        if (!consistency.ok()) {
            std::cerr << consistency.report;
            return static_cast<int>(kDisagree);
        }
        return static_cast<int>(kOk);
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Well-scoped lambda-calculus workbench"};
    app.require_subcommand(1);
    Options o;

    auto add_eval_flags = [&](CLI::App* sub) {
        sub->add_option("file", o.file, "Term file ('-' for stdin)")->required();
        sub->add_option("--impl", o.impl, "evalv | substv | bindv | envv")
            ->check(CLI::IsMember({"evalv", "substv", "bindv", "envv"}));
        sub->add_option("--env", o.env, "functional | lazy | strict")
            ->check(CLI::IsMember({"functional", "lazy", "strict"}));
        sub->add_option("--fuel", o.fuel, "Maximum number of reduction steps");
        sub->add_option("--scope", o.scope, "Number of free variables, named x0, x1, ...");
        sub->add_option("--out", o.out, "Write the result here instead of stdout");
    };

    auto* eval = app.add_subcommand("eval", "Evaluate a closed term to a value");
    add_eval_flags(eval);
    auto* norm = app.add_subcommand("norm", "Normalize a term, also under binders");
    add_eval_flags(norm);

    auto* check = app.add_subcommand("check", "Parse and scope-check a term");
    check->add_option("file", o.file, "Term file ('-' for stdin)")->required();
    check->add_option("--scope", o.scope, "Number of free variables, named x0, x1, ...");
    check->add_flag("--dump-indices", o.dump_indices, "Print the de Bruijn form");
    check->add_option("--out", o.out, "Write output here instead of stdout");

    auto* gen = app.add_subcommand("gen", "Generate random well-scoped terms");
    gen->add_option("--seed", o.seed, "Random seed");
    gen->add_option("--count", o.count, "Number of terms");
    gen->add_option("--size", o.size, "Size budget per term");
    gen->add_option("--min-steps", o.min_steps, "Keep only terms needing this many reduction steps");
    gen->add_option("--scope", o.scope, "Number of free variables");
    gen->add_option("--out", o.out, "Write terms here instead of stdout");

    auto* bench = app.add_subcommand("bench", "Time the evaluators and write a CSV report");
    bench->add_option("--task", o.tasks, "eval, nf, random (comma separated; default all)")->delimiter(',');
    bench->add_option("--impl", o.impls, "Strategies to time (comma separated; default all applicable)")
        ->delimiter(',');
    bench->add_option("--env", o.envs, "Environment representations (comma separated; default lazy)")
        ->delimiter(',');
    bench->add_option("--reps", o.reps, "Timed repetitions per implementation");
    bench->add_option("--seed", o.seed, "Seed for the random corpus");
    bench->add_option("--count", o.random_count, "Terms in the random corpus");
    bench->add_option("--size", o.size, "Size budget of random terms");
    bench->add_option("--min-steps", o.min_steps, "Minimum reduction steps of random terms (default 15)");
    bench->add_option("--out", o.out, "CSV output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    if (eval->parsed()) return cmd_run(o, false);
    if (norm->parsed()) return cmd_run(o, true);
    if (check->parsed()) return cmd_check(o);
    if (gen->parsed()) return cmd_gen(o);
    return cmd_bench(o);
}
