#include "doctest.h"

#include "taskdag/error.hpp"
#include "taskdag/harness.hpp"

#include <sstream>
#include <string>
#include <vector>

using namespace taskdag;

namespace {

ProcessConfig config(ProcessKind kind, int x, int y, int n) {
    ProcessConfig cfg;
    cfg.kind = kind;
    cfg.x = x;
    cfg.y = y;
    cfg.n = n;
    return cfg;
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected a taskdag::Error");
    return ErrorKind::Validation;
}

}  // namespace

TEST_CASE("removal (1,1,3) is a point mass") {
    const TrialSummary s = run_trials(config(ProcessKind::Removal, 1, 1, 3), 500, 1);
    CHECK(s.success_ratio == 1.0);
    CHECK(s.mean_edges == 2.0);
    CHECK(s.min_edges == 2);
    CHECK(s.max_edges == 2);
    CHECK(s.stddev_edges == 0.0);
    CHECK(s.mean_longest_path == 2.0);
}

TEST_CASE("x = y configurations always succeed") {
    for (ProcessKind kind : {ProcessKind::Removal, ProcessKind::Addition}) {
        for (int x = 1; x <= 3; ++x) {
            CHECK(run_trials(config(kind, x, x, 9), 2000, 17, 4).success_ratio == 1.0);
        }
    }
}

TEST_CASE("summaries do not depend on parallelism") {
    const ProcessConfig cfg = config(ProcessKind::Addition, 1, 3, 9);
    const std::string serial = to_json(run_trials(cfg, 3000, 99, 1, true));
    for (unsigned jobs : {2u, 4u, 7u, 64u}) CHECK(to_json(run_trials(cfg, 3000, 99, jobs, true)) == serial);
    CHECK(to_json(run_trials(cfg, 3000, 100, 4)) != to_json(run_trials(cfg, 3000, 99, 4)));

    const std::vector<std::pair<int, int>> pairs{{1, 2}, {2, 2}, {3, 1}};
    const std::string table = table_experiment(ProcessKind::Removal, pairs, 5, 7, 300, 5, 1);
    CHECK(table == table_experiment(ProcessKind::Removal, pairs, 5, 7, 300, 5, 4));
    const std::vector<int> ns{8, 12};
    const std::string growth = growth_experiment(ProcessKind::Addition, 1, 1, ns, 200, 5, 1);
    CHECK(growth == growth_experiment(ProcessKind::Addition, 1, 1, ns, 200, 5, 4));
}

TEST_CASE("records and summary statistics agree") {
    const TrialSummary s = run_trials(config(ProcessKind::Removal, 2, 1, 8), 400, 3, 3, true);
    REQUIRE(s.records.size() == 400);
    double edges = 0;
    std::size_t hits = 0;
    for (const TrialRecord& r : s.records) {
        edges += double(r.edges);
        hits += r.is_target_xy;
        CHECK(r.edges >= s.min_edges);
        CHECK(r.edges <= s.max_edges);
    }
    CHECK(s.mean_edges == doctest::Approx(edges / 400));
    CHECK(s.success_ratio == doctest::Approx(hits / 400.0));
    CHECK(run_trials(config(ProcessKind::Removal, 2, 1, 8), 10, 3).records.empty());
}

TEST_CASE("trial seeds") {
    CHECK(trial_seed(7, 0) != trial_seed(7, 1));
    CHECK(trial_seed(7, 5) == trial_seed(7, 5));
}

TEST_CASE("table csv schema") {
    const std::string csv = table_experiment(ProcessKind::Removal, {{1, 2}, {3, 3}}, 5, 6, 200, 11);
    const auto rows = lines(csv);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0] == "pair,n,ratio");
    CHECK(rows[1].rfind("1:2,5,0.", 0) == 0);
    CHECK(rows[3] == "3:3,5,1.0000");
    CHECK(rows[4] == "3:3,6,1.0000");
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto comma = rows[i].rfind(',');
        CHECK(rows[i].size() - comma - 1 == 6);
    }
}

TEST_CASE("growth csv schema and bounds") {
    const std::string csv = growth_experiment(ProcessKind::Removal, 1, 1, {10, 20}, 200, 4);
    const auto rows = lines(csv);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == "n,mean_edges,mean_longest_path,mean_isolated");
    for (int n : {10, 20, 30}) {
        const TrialSummary s = run_trials(config(ProcessKind::Removal, 1, 1, n), 300, 8);
        CHECK(s.mean_edges / n >= 1.0 - 1.0 / n);
        CHECK(s.mean_edges / n <= 2.0);
    }
}

TEST_CASE("isolated vertices of the addition process fade as n grows") {
    for (auto [x, y] : {std::pair{1, 2}, {2, 3}}) {
        std::vector<double> means;
        for (int n : {10, 20, 40}) {
            means.push_back(run_trials(config(ProcessKind::Addition, x, y, n), 3000, 21, 4).mean_isolated);
        }
        CAPTURE(x);
        CAPTURE(y);
        CHECK(means[1] <= means[0] + 0.01);
        CHECK(means[2] <= means[1] + 0.01);
        CHECK(means[2] < means[0]);
    }
}

TEST_CASE("harness errors") {
    CHECK(kind_of([] { run_trials(config(ProcessKind::Removal, 1, 1, 5), 0, 1); }) == ErrorKind::Parameter);
    CHECK(kind_of([] { run_trials(config(ProcessKind::Removal, 9, 1, 5), 10, 1); }) == ErrorKind::Parameter);
    CHECK(kind_of([] { table_experiment(ProcessKind::Removal, {{1, 1}}, 7, 5, 10, 1); }) == ErrorKind::Parameter);
    CHECK(kind_of([] { growth_experiment(ProcessKind::Combined, 1, 1, {6}, 10, 1); }) == ErrorKind::Parameter);
}

TEST_CASE("summary json") {
    const std::string json = to_json(run_trials(config(ProcessKind::Removal, 1, 1, 3), 4, 2));
    CHECK(json.rfind(R"({"process":"removal","x":1,"y":1,"n":3,"semantics":"permutation","trials":4,)", 0) == 0);
    CHECK(json.find("\"success_ratio\":1.0") != std::string::npos);
}
