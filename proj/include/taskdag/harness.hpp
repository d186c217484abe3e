#pragma once

#include "taskdag/processes.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace taskdag {

struct TrialRecord {
    bool is_target_xy = false;
    std::size_t edges = 0;
    int longest_path = 0;
    int isolated = 0;
};

struct TrialSummary {
    ProcessConfig config;  // seed field unused; see master_seed
    std::size_t trials = 0;
    std::uint64_t master_seed = 0;
    double success_ratio = 0.0;
    double mean_edges = 0.0;
    double mean_longest_path = 0.0;
    double mean_isolated = 0.0;
    double stddev_edges = 0.0;
    double stddev_longest_path = 0.0;
    std::size_t min_edges = 0;
    std::size_t max_edges = 0;
    std::vector<TrialRecord> records;  // filled when requested
};

// Seed of trial `index`: derive_stream_seed(master_seed, index).
std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t index);

// Runs `trials` independent processes on up to `jobs` threads. Each trial
// gets its own derived seed and the aggregation walks trials in index order,
// so the summary is identical for every `jobs`.
TrialSummary run_trials(const ProcessConfig& cfg, std::size_t trials, std::uint64_t master_seed,
                        unsigned jobs = 1, bool keep_records = false);

// Long-format CSV, header "pair,n,ratio"; pair is written as x:y and the
// ratio with 4 fractional digits. Cell (pair, n) uses master seed
// derive_stream_seed(master_seed, pair_index * 1000 + n).
std::string table_experiment(ProcessKind kind, const std::vector<std::pair<int, int>>& pairs, int n_min,
                             int n_max, std::size_t trials, std::uint64_t master_seed, unsigned jobs = 1);

// CSV with header "n,mean_edges,mean_longest_path,mean_isolated"; one row per
// n, 4 fractional digits.
std::string growth_experiment(ProcessKind kind, int x, int y, const std::vector<int>& ns, std::size_t trials,
                              std::uint64_t master_seed, unsigned jobs = 1);

std::string to_json(const TrialSummary& summary);

}  // namespace taskdag
