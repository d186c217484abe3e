#pragma once

#include "taskdag/graph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <utility>

namespace taskdag {

enum class ProcessKind { Removal, Addition, Combined, RandomTree };

// PermutationOrder draws one uniform order of the candidate edges and visits
// each once. RejectionSampling redraws uniformly among all candidates every
// round and counts cancelled proposals. A cancelled move stays cancelled for
// the rest of the run, so both produce the same outcome distribution.
enum class Semantics { PermutationOrder, RejectionSampling };

enum class HaltReason { ExactTargetReached, NoMoveAvailable, EdgeBudgetReached };

ProcessKind parse_process_kind(std::string_view name);
Semantics parse_semantics(std::string_view name);
std::string_view to_string(ProcessKind kind);
std::string_view to_string(Semantics semantics);
std::string_view to_string(HaltReason reason);

struct ProcessConfig {
    int x = 1;
    int y = 1;
    int n = 1;
    ProcessKind kind = ProcessKind::Removal;
    std::optional<std::int64_t> m;  // Combined only
    std::uint64_t seed = 0;
    Semantics semantics = Semantics::PermutationOrder;
};

struct ProcessOutcome {
    OrderedDag graph;
    std::size_t rounds = 0;
    std::optional<std::size_t> attempts;  // RejectionSampling only
    HaltReason halt_reason = HaltReason::NoMoveAvailable;
    bool is_target_xy = false;
};

struct Mutation {
    std::size_t round = 0;
    bool added = false;
    Edge edge;
    int initial = 0;
    int terminal = 0;
};

using TraceSink = std::function<void(const Mutation&)>;

// Throws Parameter / InvalidSize errors for an inconsistent configuration.
void validate(const ProcessConfig& cfg);

// Admissible edge targets for the combined process: the lower end is the
// largest minimal (x,y) graph, the upper end guarantees a count-preserving
// absent edge exists in every (x,y) graph with fewer edges.
std::pair<std::int64_t, std::int64_t> combined_edge_bounds(int x, int y, int n);

// Start from the transitive tournament; remove uniformly random edges,
// cancelling removals that push the initial count above x or the terminal
// count above y; stop when nothing is removable.
ProcessOutcome edge_removal_process(const ProcessConfig& cfg, const TraceSink& trace = {});

// Start from the empty graph; add uniformly random edges (a,b), a<b,
// cancelling additions that drop the initial count below x or the terminal
// count below y; stop on an exact (x,y) profile or when nothing is addable.
ProcessOutcome edge_addition_process(const ProcessConfig& cfg, const TraceSink& trace = {});

// Addition to termination, then count-preserving random additions or
// capped random removals until exactly m edges remain.
ProcessOutcome combined_process(const ProcessConfig& cfg, const TraceSink& trace = {});

// Round s attaches vertex s+1 to a uniform vertex r <= s.
OrderedDag random_directed_tree(int n, std::uint64_t seed);

// Dispatches on cfg.kind. RandomTree is reported with NoMoveAvailable and
// is_target_xy set when the tree happens to have profile (x,y).
ProcessOutcome run_process(const ProcessConfig& cfg, const TraceSink& trace = {});

// Deterministic cores over a fixed visiting order, shared with the exact
// distribution enumerator. `order` must list every candidate edge once.
ProcessOutcome removal_over_order(int x, int y, int n, std::span<const Edge> order);
ProcessOutcome addition_over_order(int x, int y, int n, std::span<const Edge> order);

}  // namespace taskdag
