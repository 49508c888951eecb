#pragma once

// Benchmark harness: times evaluators on the benchmark term and on a random
// corpus, and refuses to report timings for a task unless every
// implementation produced the same result.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "scopebind/environment.hpp"
#include "scopebind/evaluators.hpp"

namespace scopebind::bench {

enum class Task : std::uint8_t { Eval, Nf, Random };

[[nodiscard]] std::string_view to_string(Task t);
[[nodiscard]] std::optional<Task> parse_task(std::string_view name);

/// Evaluator strategy paired with an environment representation.
struct Impl {
    Strategy strategy;
    EnvRepr repr = EnvRepr::LazyDefunc;

    /// e.g. "bindv/lazy"
    [[nodiscard]] std::string tag() const;
};

struct Record {
    std::string impl;
    std::string task;
    std::uint32_t reps = 0;
    std::uint64_t median_ns = 0;
    std::uint64_t mean_ns = 0;
    std::uint64_t stddev_ns = 0;
    std::uint64_t result_hash = 0;
};

struct Stats {
    std::uint64_t median_ns;
    std::uint64_t mean_ns;
    std::uint64_t stddev_ns;
};

/// Median (upper median for even counts), mean and population standard
/// deviation, all rounded to whole nanoseconds.
Stats summarize(std::vector<std::uint64_t> samples_ns);

struct Config {
    std::vector<Task> tasks{Task::Eval, Task::Nf, Task::Random};
    /// Empty means every strategy that supports the task.
    std::vector<Strategy> strategies;
    std::vector<EnvRepr> reprs{EnvRepr::LazyDefunc};
    std::uint32_t reps = 20;
    std::uint32_t warmups = 3;
    std::uint64_t seed = 0;
    std::uint32_t random_count = 100;
    std::uint32_t random_min_steps = 15;
    std::uint32_t random_size = 24;
    /// Called with a short status line before each implementation is timed.
    std::function<void(const std::string&)> progress;
};

/// Strategies that can run a task (EvalV only evaluates).
std::vector<Strategy> strategies_for(Task t);

/// Times every (task, impl) pair; records come out grouped by task.
std::vector<Record> run(const Config& cfg);

struct Consistency {
    std::vector<std::string> agreeing_tasks;
    std::vector<std::string> disagreeing_tasks;
    /// Human-readable listing of the hashes of every disagreeing task.
    std::string report;

    [[nodiscard]] bool ok() const { return disagreeing_tasks.empty(); }
};

Consistency check_consistency(const std::vector<Record>& records);

/// The records of tasks on which all implementations agree.
std::vector<Record> gated(const std::vector<Record>& records, const Consistency& c);

inline constexpr const char* kCsvHeader = "impl,task,reps,median_ns,mean_ns,stddev_ns,result_hash";

void write_csv(std::ostream& out, const std::vector<Record>& records);
/// Parses what write_csv produces; throws std::runtime_error on malformed input.
std::vector<Record> read_csv(std::istream& in);

}  // namespace scopebind::bench
