#include "taskdag/harness.hpp"

#include "taskdag/error.hpp"
#include "taskdag/random.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>

namespace taskdag {

std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t index) {
    return derive_stream_seed(master_seed, index);
}

namespace {

std::string fixed4(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.4f", value);
    return buffer;
}

TrialRecord run_one(const ProcessConfig& cfg, std::uint64_t seed) {
    ProcessConfig trial = cfg;
    trial.seed = seed;
    const ProcessOutcome out = run_process(trial);
    return TrialRecord{out.is_target_xy, out.graph.edge_count(), longest_path_length(out.graph),
                       out.graph.isolated_count()};
}

}  // namespace

TrialSummary run_trials(const ProcessConfig& cfg, std::size_t trials, std::uint64_t master_seed, unsigned jobs,
                        bool keep_records) {
    if (trials == 0) throw Error(ErrorKind::Parameter, "trial count must be positive");
    validate(cfg);
    std::vector<TrialRecord> records(trials);

    const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(trials)));
    if (workers == 1) {
        for (std::size_t i = 0; i < trials; ++i) records[i] = run_one(cfg, trial_seed(master_seed, i));
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                try {
                    for (std::size_t i = next++; i < trials; i = next++) {
                        records[i] = run_one(cfg, trial_seed(master_seed, i));
                    }
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
    }

    TrialSummary summary;
    summary.config = cfg;
    summary.config.seed = 0;
    summary.trials = trials;
    summary.master_seed = master_seed;
    summary.min_edges = records.front().edges;
    summary.max_edges = records.front().edges;
    std::size_t successes = 0;
    double edges = 0;
    double edges_sq = 0;
    double path = 0;
    double path_sq = 0;
    double isolated = 0;
    for (const TrialRecord& r : records) {
        successes += r.is_target_xy;
        edges += static_cast<double>(r.edges);
        edges_sq += static_cast<double>(r.edges) * static_cast<double>(r.edges);
        path += r.longest_path;
        path_sq += static_cast<double>(r.longest_path) * r.longest_path;
        isolated += r.isolated;
        summary.min_edges = std::min(summary.min_edges, r.edges);
        summary.max_edges = std::max(summary.max_edges, r.edges);
    }
    const auto count = static_cast<double>(trials);
    summary.success_ratio = static_cast<double>(successes) / count;
    summary.mean_edges = edges / count;
    summary.mean_longest_path = path / count;
    summary.mean_isolated = isolated / count;
    auto spread = [&](double sum, double sum_sq) {
        if (trials < 2) return 0.0;
        const double var = (sum_sq - sum * sum / count) / (count - 1);
        return std::sqrt(std::max(0.0, var));
    };
    summary.stddev_edges = spread(edges, edges_sq);
    summary.stddev_longest_path = spread(path, path_sq);
    if (keep_records) summary.records = std::move(records);
    return summary;
}

std::string table_experiment(ProcessKind kind, const std::vector<std::pair<int, int>>& pairs, int n_min,
                             int n_max, std::size_t trials, std::uint64_t master_seed, unsigned jobs) {
    if (n_min > n_max) throw Error(ErrorKind::Parameter, "n-min exceeds n-max");
    std::string csv = "pair,n,ratio\n";
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const auto [x, y] = pairs[p];
        for (int n = n_min; n <= n_max; ++n) {
            ProcessConfig cfg{x, y, n, kind, std::nullopt, 0, Semantics::PermutationOrder};
            const std::uint64_t cell_seed = derive_stream_seed(master_seed, p * 1000 + static_cast<std::size_t>(n));
            const TrialSummary s = run_trials(cfg, trials, cell_seed, jobs);
            csv += std::to_string(x) + ":" + std::to_string(y) + "," + std::to_string(n) + "," +
                   fixed4(s.success_ratio) + "\n";
        }
    }
    return csv;
}

std::string growth_experiment(ProcessKind kind, int x, int y, const std::vector<int>& ns, std::size_t trials,
                              std::uint64_t master_seed, unsigned jobs) {
    std::string csv = "n,mean_edges,mean_longest_path,mean_isolated\n";
    for (int n : ns) {
        ProcessConfig cfg{x, y, n, kind, std::nullopt, 0, Semantics::PermutationOrder};
        const TrialSummary s =
            run_trials(cfg, trials, derive_stream_seed(master_seed, static_cast<std::size_t>(n)), jobs);
        csv += std::to_string(n) + "," + fixed4(s.mean_edges) + "," + fixed4(s.mean_longest_path) + "," +
               fixed4(s.mean_isolated) + "\n";
    }
    return csv;
}

std::string to_json(const TrialSummary& s) {
    nlohmann::ordered_json doc;
    doc["process"] = std::string(to_string(s.config.kind));
    doc["x"] = s.config.x;
    doc["y"] = s.config.y;
    doc["n"] = s.config.n;
    if (s.config.m) doc["m"] = *s.config.m;
    doc["semantics"] = std::string(to_string(s.config.semantics));
    doc["trials"] = s.trials;
    doc["master_seed"] = s.master_seed;
    doc["success_ratio"] = s.success_ratio;
    doc["mean_edges"] = s.mean_edges;
    doc["mean_longest_path"] = s.mean_longest_path;
    doc["mean_isolated"] = s.mean_isolated;
    doc["stddev_edges"] = s.stddev_edges;
    doc["stddev_longest_path"] = s.stddev_longest_path;
    doc["min_edges"] = s.min_edges;
    doc["max_edges"] = s.max_edges;
    if (!s.records.empty()) {
        auto& list = doc["records"] = nlohmann::ordered_json::array();
        for (const TrialRecord& r : s.records) {
            list.push_back({{"is_target_xy", r.is_target_xy},
                            {"edges", r.edges},
                            {"longest_path", r.longest_path},
                            {"isolated", r.isolated}});
        }
    }
    return doc.dump();
}

}  // namespace taskdag
