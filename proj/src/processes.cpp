#include "taskdag/processes.hpp"

#include "taskdag/error.hpp"
#include "taskdag/random.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace taskdag {

ProcessKind parse_process_kind(std::string_view name) {
    if (name == "removal") return ProcessKind::Removal;
    if (name == "addition") return ProcessKind::Addition;
    if (name == "combined") return ProcessKind::Combined;
    if (name == "tree") return ProcessKind::RandomTree;
    throw Error(ErrorKind::Parameter, "unknown process '" + std::string(name) + "'");
}

Semantics parse_semantics(std::string_view name) {
    if (name == "permutation") return Semantics::PermutationOrder;
    if (name == "rejection") return Semantics::RejectionSampling;
    throw Error(ErrorKind::Parameter, "unknown semantics '" + std::string(name) + "'");
}

std::string_view to_string(ProcessKind kind) {
    switch (kind) {
    case ProcessKind::Removal: return "removal";
    case ProcessKind::Addition: return "addition";
    case ProcessKind::Combined: return "combined";
    case ProcessKind::RandomTree: return "tree";
    }
    return "?";
}

std::string_view to_string(Semantics semantics) {
    return semantics == Semantics::PermutationOrder ? "permutation" : "rejection";
}

std::string_view to_string(HaltReason reason) {
    switch (reason) {
    case HaltReason::ExactTargetReached: return "exact_target_reached";
    case HaltReason::NoMoveAvailable: return "no_move_available";
    case HaltReason::EdgeBudgetReached: return "edge_budget_reached";
    }
    return "?";
}

std::pair<std::int64_t, std::int64_t> combined_edge_bounds(int x, int y, int n) {
    const std::int64_t nn = n;
    std::int64_t upper = nn * (nn - 1) / 2;
    for (std::int64_t j = 1; j < x; ++j) upper -= nn - j;
    for (std::int64_t j = 1; j < y; ++j) upper -= nn - j;
    return {2 * nn - x - y - 2, upper};
}

void validate(const ProcessConfig& cfg) {
    if (cfg.n < 1) throw Error(ErrorKind::InvalidSize, "n must be at least 1");
    if (cfg.kind == ProcessKind::RandomTree) return;
    if (cfg.x < 1 || cfg.y < 1) throw Error(ErrorKind::Parameter, "x and y must be at least 1");
    if (cfg.n < std::max(cfg.x, cfg.y)) throw Error(ErrorKind::Parameter, "n must be at least max(x,y)");
    if (cfg.kind != ProcessKind::Combined) {
        if (cfg.m) throw Error(ErrorKind::Parameter, "an edge target m is only meaningful for the combined process");
        return;
    }
    if (cfg.n <= std::max(cfg.x, cfg.y) + 1) {
        throw Error(ErrorKind::Parameter, "the combined process requires n > max(x,y)+1");
    }
    if (!cfg.m) throw Error(ErrorKind::Parameter, "the combined process requires an edge target m");
    const auto [lower, upper] = combined_edge_bounds(cfg.x, cfg.y, cfg.n);
    if (*cfg.m < lower || *cfg.m > upper) {
        throw Error(ErrorKind::Parameter, "edge target m = " + std::to_string(*cfg.m) + " outside [" +
                                              std::to_string(lower) + ", " + std::to_string(upper) + "]");
    }
}

namespace {

void require_kind(const ProcessConfig& cfg, ProcessKind expected) {
    if (cfg.kind != expected) {
        throw Error(ErrorKind::ConfigKind, "configuration is for the " + std::string(to_string(cfg.kind)) +
                                               " process, not " + std::string(to_string(expected)));
    }
    validate(cfg);
}

bool removal_allowed(const OrderedDag& g, Edge e, int x, int y) {
    const int initial = g.initial_count() + (g.in_degree(e.to) == 1 ? 1 : 0);
    const int terminal = g.terminal_count() + (g.out_degree(e.from) == 1 ? 1 : 0);
    return initial <= x && terminal <= y;
}

bool addition_allowed(const OrderedDag& g, Edge e, int x, int y) {
    const int initial = g.initial_count() - (g.in_degree(e.to) == 0 ? 1 : 0);
    const int terminal = g.terminal_count() - (g.out_degree(e.from) == 0 ? 1 : 0);
    return initial >= x && terminal >= y;
}

bool addition_neutral(const OrderedDag& g, Edge e) {
    return g.in_degree(e.to) > 0 && g.out_degree(e.from) > 0;
}

bool has_profile(const OrderedDag& g, int x, int y) {
    return g.initial_count() == x && g.terminal_count() == y;
}

std::vector<Edge> absent_pairs(const OrderedDag& g) {
    std::vector<Edge> pairs;
    for (Vertex a = 1; a <= g.order(); ++a) {
        for (Vertex b = a + 1; b <= g.order(); ++b) {
            if (!g.has_edge(a, b)) pairs.push_back({a, b});
        }
    }
    return pairs;
}

// One running walk: the graph being mutated plus its bookkeeping.
class Walk {
public:
    Walk(OrderedDag start, const TraceSink* trace, std::size_t rounds = 0)
        : graph_(std::move(start)), trace_(trace), rounds_(rounds) {}

    OrderedDag& graph() { return graph_; }
    std::size_t rounds() const { return rounds_; }

    void add(Edge e) {
        graph_.add_edge(e.from, e.to);
        record(e, true);
    }

    void remove(Edge e) {
        graph_.remove_edge(e.from, e.to);
        record(e, false);
    }

    ProcessOutcome finish(HaltReason reason, int x, int y, std::optional<std::size_t> attempts) && {
        const bool target = has_profile(graph_, x, y);
        return ProcessOutcome{std::move(graph_), rounds_, attempts, reason, target};
    }

private:
    void record(Edge e, bool added) {
        ++rounds_;
        if (trace_ && *trace_) {
            (*trace_)(Mutation{rounds_, added, e, graph_.initial_count(), graph_.terminal_count()});
        }
    }

    OrderedDag graph_;
    const TraceSink* trace_;
    std::size_t rounds_;
};

// Uniform draws over a shrinking candidate pool with permanent rejections.
// `accept` returns true when the move was applied (the candidate leaves the
// pool), false when it was cancelled (the candidate is marked blocked).
template <typename Accept, typename Stop>
std::size_t rejection_loop(std::vector<Edge> pool, int n, Rng& rng, Accept&& accept, Stop&& stop) {
    std::vector<std::uint8_t> blocked(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    std::size_t blocked_count = 0;
    std::size_t attempts = 0;
    while (blocked_count < pool.size() && !stop()) {
        const std::size_t index = static_cast<std::size_t>(rng.below(pool.size()));
        const Edge e = pool[index];
        ++attempts;
        auto& mark = blocked[static_cast<std::size_t>(e.from - 1) * static_cast<std::size_t>(n) +
                             static_cast<std::size_t>(e.to - 1)];
        if (mark != 0) continue;
        if (accept(e)) {
            pool[index] = pool.back();
            pool.pop_back();
        } else {
            mark = 1;
            ++blocked_count;
        }
    }
    return attempts;
}

ProcessOutcome run_removal(Walk walk, int x, int y, Semantics semantics, Rng& rng,
                           std::optional<std::size_t> stop_at_edges) {
    auto stop = [&] { return stop_at_edges && walk.graph().edge_count() == *stop_at_edges; };
    auto try_remove = [&](Edge e) {
        if (!removal_allowed(walk.graph(), e, x, y)) return false;
        walk.remove(e);
        return true;
    };
    std::optional<std::size_t> attempts;
    if (semantics == Semantics::PermutationOrder) {
        std::vector<Edge> order = walk.graph().edges();
        rng.shuffle(std::span<Edge>(order));
        for (const Edge& e : order) {
            if (stop()) break;
            try_remove(e);
        }
    } else {
        attempts = rejection_loop(walk.graph().edges(), walk.graph().order(), rng, try_remove, stop);
    }
    const HaltReason reason = stop() ? HaltReason::EdgeBudgetReached : HaltReason::NoMoveAvailable;
    return std::move(walk).finish(reason, x, y, attempts);
}

ProcessOutcome run_addition(Walk walk, int x, int y, Semantics semantics, Rng& rng) {
    auto reached = [&] { return has_profile(walk.graph(), x, y); };
    std::optional<std::size_t> attempts;
    if (semantics == Semantics::RejectionSampling) attempts = 0;
    if (!reached()) {
        auto try_add = [&](Edge e) {
            if (!addition_allowed(walk.graph(), e, x, y)) return false;
            walk.add(e);
            return true;
        };
        if (semantics == Semantics::PermutationOrder) {
            std::vector<Edge> order = absent_pairs(walk.graph());
            rng.shuffle(std::span<Edge>(order));
            for (const Edge& e : order) {
                if (try_add(e) && reached()) break;
            }
        } else {
            attempts = rejection_loop(absent_pairs(walk.graph()), walk.graph().order(), rng, try_add, reached);
        }
    }
    const HaltReason reason = reached() ? HaltReason::ExactTargetReached : HaltReason::NoMoveAvailable;
    return std::move(walk).finish(reason, x, y, attempts);
}

}  // namespace

ProcessOutcome edge_removal_process(const ProcessConfig& cfg, const TraceSink& trace) {
    require_kind(cfg, ProcessKind::Removal);
    Rng rng(cfg.seed);
    return run_removal(Walk(complete_graph(cfg.n), &trace), cfg.x, cfg.y, cfg.semantics, rng, std::nullopt);
}

ProcessOutcome edge_addition_process(const ProcessConfig& cfg, const TraceSink& trace) {
    require_kind(cfg, ProcessKind::Addition);
    Rng rng(cfg.seed);
    return run_addition(Walk(empty_graph(cfg.n), &trace), cfg.x, cfg.y, cfg.semantics, rng);
}

ProcessOutcome combined_process(const ProcessConfig& cfg, const TraceSink& trace) {
    require_kind(cfg, ProcessKind::Combined);
    const auto target = static_cast<std::size_t>(*cfg.m);
    const int x = cfg.x;
    const int y = cfg.y;
    Rng rng(cfg.seed);

    ProcessOutcome added = run_addition(Walk(empty_graph(cfg.n), &trace), x, y, cfg.semantics, rng);
    if (!added.is_target_xy) return added;

    const std::size_t first_attempts = added.attempts.value_or(0);
    Walk walk(std::move(added.graph), &trace, added.rounds);
    ProcessOutcome outcome{empty_graph(1), 0, std::nullopt, HaltReason::EdgeBudgetReached, false};

    if (walk.graph().edge_count() > target) {
        outcome = run_removal(std::move(walk), x, y, cfg.semantics, rng, target);
    } else {
        std::optional<std::size_t> attempts;
        auto full = [&] { return walk.graph().edge_count() == target; };
        auto try_pad = [&](Edge e) {
            if (!addition_neutral(walk.graph(), e)) return false;
            walk.add(e);
            return true;
        };
        if (!full()) {
            if (cfg.semantics == Semantics::PermutationOrder) {
                std::vector<Edge> order = absent_pairs(walk.graph());
                rng.shuffle(std::span<Edge>(order));
                for (const Edge& e : order) {
                    if (full()) break;
                    try_pad(e);
                }
            } else {
                attempts = rejection_loop(absent_pairs(walk.graph()), walk.graph().order(), rng, try_pad, full);
            }
        } else if (cfg.semantics == Semantics::RejectionSampling) {
            attempts = 0;
        }
        const HaltReason reason = full() ? HaltReason::EdgeBudgetReached : HaltReason::NoMoveAvailable;
        outcome = std::move(walk).finish(reason, x, y, attempts);
    }
    if (outcome.attempts) *outcome.attempts += first_attempts;
    if (outcome.halt_reason == HaltReason::EdgeBudgetReached && outcome.graph.edge_count() != target) {
        outcome.halt_reason = HaltReason::NoMoveAvailable;
    }
    return outcome;
}

OrderedDag random_directed_tree(int n, std::uint64_t seed) {
    OrderedDag g(n);
    Rng rng(seed);
    for (Vertex s = 1; s < n; ++s) g.add_edge(static_cast<Vertex>(rng.between(1, s)), s + 1);
    return g;
}

ProcessOutcome run_process(const ProcessConfig& cfg, const TraceSink& trace) {
    switch (cfg.kind) {
    case ProcessKind::Removal: return edge_removal_process(cfg, trace);
    case ProcessKind::Addition: return edge_addition_process(cfg, trace);
    case ProcessKind::Combined: return combined_process(cfg, trace);
    case ProcessKind::RandomTree: {
        validate(cfg);
        OrderedDag tree = random_directed_tree(cfg.n, cfg.seed);
        if (trace) {
            std::size_t round = 0;
            OrderedDag partial(cfg.n);
            std::vector<Edge> rounds_order = tree.edges();
            std::sort(rounds_order.begin(), rounds_order.end(),
                      [](const Edge& a, const Edge& b) { return a.to < b.to; });
            for (const Edge& e : rounds_order) {
                partial.add_edge(e.from, e.to);
                trace(Mutation{++round, true, e, partial.initial_count(), partial.terminal_count()});
            }
        }
        const std::size_t rounds = tree.edge_count();
        const bool target = has_profile(tree, cfg.x, cfg.y);
        return ProcessOutcome{std::move(tree), rounds, std::nullopt, HaltReason::NoMoveAvailable, target};
    }
    }
    throw Error(ErrorKind::ConfigKind, "unknown process kind");
}

ProcessOutcome removal_over_order(int x, int y, int n, std::span<const Edge> order) {
    Walk walk(complete_graph(n), nullptr);
    for (const Edge& e : order) {
        if (removal_allowed(walk.graph(), e, x, y)) walk.remove(e);
    }
    return std::move(walk).finish(HaltReason::NoMoveAvailable, x, y, std::nullopt);
}

ProcessOutcome addition_over_order(int x, int y, int n, std::span<const Edge> order) {
    Walk walk(empty_graph(n), nullptr);
    if (has_profile(walk.graph(), x, y)) {
        return std::move(walk).finish(HaltReason::ExactTargetReached, x, y, std::nullopt);
    }
    for (const Edge& e : order) {
        if (!addition_allowed(walk.graph(), e, x, y)) continue;
        walk.add(e);
        if (has_profile(walk.graph(), x, y)) {
            return std::move(walk).finish(HaltReason::ExactTargetReached, x, y, std::nullopt);
        }
    }
    return std::move(walk).finish(HaltReason::NoMoveAvailable, x, y, std::nullopt);
}

}  // namespace taskdag
