#include <sstream>

#include "doctest.h"
#include "scopebind/bench.hpp"

using namespace scopebind;
using namespace scopebind::bench;

TEST_CASE("summarize") {
    const Stats s = summarize({5, 1, 3, 2, 4});
    CHECK(s.median_ns == 3);
    CHECK(s.mean_ns == 3);
    CHECK(s.stddev_ns == 1);  // sqrt(2)
    CHECK(summarize({4, 1, 3, 2}).median_ns == 3);
    CHECK(summarize({7}).stddev_ns == 0);
    CHECK(summarize({}).median_ns == 0);
    const Stats t = summarize({10, 10, 10, 30});
    CHECK(t.mean_ns == 15);
    CHECK(t.stddev_ns == 9);  // sqrt(75) = 8.66
}

TEST_CASE("task and implementation names") {
    CHECK(parse_task("eval") == Task::Eval);
    CHECK(parse_task("nf") == Task::Nf);
    CHECK(parse_task("random") == Task::Random);
    CHECK_FALSE(parse_task("whnf"));
    CHECK(Impl{Strategy::BindV, EnvRepr::LazyDefunc}.tag() == "bindv/lazy");
    CHECK(Impl{Strategy::EnvV, EnvRepr::Functional}.tag() == "envv/functional");
    CHECK(strategies_for(Task::Eval).size() == 4);
    CHECK(strategies_for(Task::Nf).size() == 3);
}

TEST_CASE("csv round trip") {
    const std::vector<Record> rs{{"bindv/lazy", "eval", 20, 100, 110, 5, 0xdeadbeefULL},
                                {"substv/lazy", "eval", 20, 9000, 9100, 50, 0xdeadbeefULL}};
    std::ostringstream out;
    write_csv(out, rs);
    CHECK(out.str() ==
          "impl,task,reps,median_ns,mean_ns,stddev_ns,result_hash\n"
          "bindv/lazy,eval,20,100,110,5,00000000deadbeef\n"
          "substv/lazy,eval,20,9000,9100,50,00000000deadbeef\n");
    std::istringstream in(out.str());
    const auto back = read_csv(in);
    REQUIRE(back.size() == 2);
    CHECK(back[1].impl == "substv/lazy");
    CHECK(back[1].median_ns == 9000);
    CHECK(back[1].result_hash == 0xdeadbeefULL);

    std::istringstream bad("impl,task\n");
    CHECK_THROWS_AS(read_csv(bad), std::runtime_error);
    std::istringstream short_row(std::string(kCsvHeader) + "\nbindv/lazy,eval,20\n");
    CHECK_THROWS_AS(read_csv(short_row), std::runtime_error);
}

TEST_CASE("consistency gate") {
    const std::vector<Record> rs{{"a", "eval", 1, 1, 1, 0, 7}, {"b", "eval", 1, 1, 1, 0, 7},
                                 {"a", "nf", 1, 1, 1, 0, 1},   {"b", "nf", 1, 1, 1, 0, 2}};
    const Consistency c = check_consistency(rs);
    CHECK_FALSE(c.ok());
    CHECK(c.agreeing_tasks == std::vector<std::string>{"eval"});
    CHECK(c.disagreeing_tasks == std::vector<std::string>{"nf"});
    CHECK(c.report.find("task nf") != std::string::npos);
    const auto kept = gated(rs, c);
    REQUIRE(kept.size() == 2);
    CHECK(kept[0].task == "eval");
    CHECK(check_consistency({rs[0], rs[1]}).ok());
}

TEST_CASE("run a small benchmark") {
    Config cfg;
    cfg.tasks = {Task::Random, Task::Eval};
    cfg.strategies = {Strategy::EvalV, Strategy::BindV, Strategy::EnvV};
    cfg.reprs = {EnvRepr::LazyDefunc, EnvRepr::StrictDefunc};
    cfg.reps = 2;
    cfg.warmups = 1;
    cfg.random_count = 10;
    cfg.seed = 3;
    std::vector<std::string> progress;
    cfg.progress = [&](const std::string& s) { progress.push_back(s); };
    const auto rs = run(cfg);
    // EvalV does not normalize, so the random task has two strategies.
    REQUIRE(rs.size() == 2 * 2 + 3 * 2);
    CHECK(progress.size() == rs.size());
    CHECK(rs[0].task == "random");
    CHECK(rs[0].impl == "bindv/lazy");
    for (const Record& r : rs) {
        CHECK(r.reps == 2);
        CHECK(r.median_ns > 0);
    }
    CHECK(check_consistency(rs).ok());

    // Same seed, same hashes.
    const auto again = run(cfg);
    for (std::size_t i = 0; i < rs.size(); ++i) CHECK(again[i].result_hash == rs[i].result_hash);
}
