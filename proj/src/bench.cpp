#include "scopebind/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "scopebind/frontend.hpp"
#include "scopebind/syntax.hpp"

namespace scopebind::bench {

std::string_view to_string(Task t) {
    switch (t) {
        case Task::Eval: return "eval";
        case Task::Nf: return "nf";
        case Task::Random: return "random";
    }
    return "?";
}

std::optional<Task> parse_task(std::string_view name) {
    if (name == "eval") return Task::Eval;
    if (name == "nf") return Task::Nf;
    if (name == "random") return Task::Random;
    return std::nullopt;
}

std::string Impl::tag() const {
    return std::string(scopebind::to_string(strategy)) + "/" + std::string(scopebind::to_string(repr));
}

Stats summarize(std::vector<std::uint64_t> samples) {
    if (samples.empty()) return {0, 0, 0};
    std::sort(samples.begin(), samples.end());
    const std::uint64_t median = samples[samples.size() / 2];
    long double sum = 0;
    for (auto s : samples) sum += s;
    const long double mean = sum / samples.size();
    long double var = 0;
    for (auto s : samples) var += (s - mean) * (s - mean);
    var /= samples.size();
    return {median, static_cast<std::uint64_t>(std::llround(mean)),
            static_cast<std::uint64_t>(std::llround(std::sqrt(var)))};
}

std::vector<Strategy> strategies_for(Task t) {
    if (t == Task::Eval) return {Strategy::EvalV, Strategy::SubstV, Strategy::BindV, Strategy::EnvV};
    return {Strategy::SubstV, Strategy::BindV, Strategy::EnvV};
}

namespace {

std::uint64_t combine(std::uint64_t h, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        h ^= (v >> (8 * i)) & 0xffU;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// One benchmark body; returns the terms it computed.
using Workload = std::function<std::vector<Term>()>;

Record measure(const Impl& impl, Task task, const Workload& work, const Config& cfg) {
    std::vector<Term> results;
    for (std::uint32_t i = 0; i < cfg.warmups; ++i) results = work();
    std::vector<std::uint64_t> samples;
    samples.reserve(cfg.reps);
    for (std::uint32_t i = 0; i < cfg.reps; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        results = work();
        const auto t1 = std::chrono::steady_clock::now();
        samples.push_back(static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count()));
    }
    if (results.empty()) results = work();
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const Term& r : results) h = combine(h, alpha_hash(r));
    const Stats s = summarize(samples);
    return Record{impl.tag(), std::string(to_string(task)), cfg.reps, s.median_ns, s.mean_ns, s.stddev_ns, h};
}

}  // namespace

std::vector<Record> run(const Config& cfg) {
    std::vector<Record> out;
    for (Task task : cfg.tasks) {
        const std::vector<Strategy> supported = strategies_for(task);
        std::vector<Strategy> strategies = cfg.strategies.empty() ? supported : cfg.strategies;
        std::vector<Term> corpus;
        if (task == Task::Random) {
            GenConfig g;
            g.seed = cfg.seed;
            g.target_scope = ScopeIndex(0);
            g.size_budget = cfg.random_size;
            g.min_steps = cfg.random_min_steps;
            g.count = cfg.random_count;
            corpus = gen_term(g);
        }
        for (EnvRepr repr : cfg.reprs) {
            for (Strategy s : strategies) {
                if (std::find(supported.begin(), supported.end(), s) == supported.end()) continue;
                const Impl impl{s, repr};
                if (cfg.progress) cfg.progress(std::string(to_string(task)) + " " + impl.tag());
                ScopedEnvRepr guard(repr);
                Workload work;
                if (task == Task::Random) {
                    std::vector<Term> terms;
                    terms.reserve(corpus.size());
                    for (const Term& t : corpus) terms.push_back(force_binders(t));
                    work = [terms, s] {
                        std::vector<Term> rs;
                        rs.reserve(terms.size());
                        for (const Term& t : terms) rs.push_back(nf(t, EvalStrategy{s, true}));
                        return rs;
                    };
                } else {
                    const Term term = force_binders(lennart_term());
                    if (task == Task::Eval) {
                        work = [term, s] { return std::vector<Term>{evaluate(term, EvalStrategy{s, false})}; };
                    } else {
                        work = [term, s] { return std::vector<Term>{nf(term, EvalStrategy{s, true})}; };
                    }
                }
                out.push_back(measure(impl, task, work, cfg));
            }
        }
    }
    return out;
}

Consistency check_consistency(const std::vector<Record>& records) {
    std::vector<std::string> order;
    std::map<std::string, std::vector<const Record*>> by_task;
    for (const Record& r : records) {
        if (!by_task.count(r.task)) order.push_back(r.task);
        by_task[r.task].push_back(&r);
    }
    Consistency c;
    std::ostringstream report;
    for (const std::string& task : order) {
        const auto& rs = by_task[task];
        const bool agree = std::all_of(rs.begin(), rs.end(),
                                       [&](const Record* r) { return r->result_hash == rs.front()->result_hash; });
        if (agree) {
            c.agreeing_tasks.push_back(task);
            continue;
        }
        c.disagreeing_tasks.push_back(task);
        report << "task " << task << ": implementations disagree\n";
        for (const Record* r : rs) {
            char buf[17];
            std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(r->result_hash));
            report << "  " << r->impl << "  " << buf << "\n";
        }
    }
    c.report = report.str();
    return c;
}

std::vector<Record> gated(const std::vector<Record>& records, const Consistency& c) {
    std::vector<Record> out;
    for (const Record& r : records) {
        if (std::find(c.agreeing_tasks.begin(), c.agreeing_tasks.end(), r.task) != c.agreeing_tasks.end()) {
            out.push_back(r);
        }
    }
    return out;
}

void write_csv(std::ostream& out, const std::vector<Record>& records) {
    out << kCsvHeader << '\n';
    for (const Record& r : records) {
        char hash[17];
        std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(r.result_hash));
        out << r.impl << ',' << r.task << ',' << r.reps << ',' << r.median_ns << ',' << r.mean_ns << ','
            << r.stddev_ns << ',' << hash << '\n';
    }
}

std::vector<Record> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) throw std::runtime_error("missing or unexpected CSV header");
    std::vector<Record> out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) f.push_back(cell);
        if (f.size() != 7) throw std::runtime_error("malformed CSV row: " + line);
        try {
            out.push_back(Record{f[0], f[1], static_cast<std::uint32_t>(std::stoul(f[2])), std::stoull(f[3]),
                                 std::stoull(f[4]), std::stoull(f[5]), std::stoull(f[6], nullptr, 16)});
        } catch (const std::logic_error&) {
            throw std::runtime_error("malformed CSV row: " + line);
        }
    }
    return out;
}

}  // namespace scopebind::bench
