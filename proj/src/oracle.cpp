#include "taskdag/oracle.hpp"

#include "taskdag/error.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <string>
#include <unordered_map>

namespace taskdag::oracle {

namespace {

using Mask = std::uint32_t;

// Edge subsets of the transitive tournament on n vertices, encoded as bit
// masks over the pair list (1,2), (1,3), ..., (n-1,n).
struct Universe {
    int n;
    std::vector<Edge> pairs;

    explicit Universe(int order) : n(order) {
        for (Vertex a = 1; a <= n; ++a) {
            for (Vertex b = a + 1; b <= n; ++b) pairs.push_back({a, b});
        }
    }

    std::size_t size() const { return pairs.size(); }
    Mask full() const { return pairs.empty() ? 0 : static_cast<Mask>((std::uint64_t{1} << pairs.size()) - 1); }

    // (initial count, terminal count), recomputed from scratch.
    std::pair<int, int> profile(Mask mask) const {
        std::vector<int> in(static_cast<std::size_t>(n) + 1, 0);
        std::vector<int> out(static_cast<std::size_t>(n) + 1, 0);
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (mask >> i & 1u) {
                ++out[pairs[i].from];
                ++in[pairs[i].to];
            }
        }
        int initial = 0;
        int terminal = 0;
        for (Vertex v = 1; v <= n; ++v) {
            initial += in[v] == 0;
            terminal += out[v] == 0;
        }
        return {initial, terminal};
    }

    bool minimal(Mask mask, int x, int y) const {
        if (profile(mask) != std::pair{x, y}) return false;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if ((mask >> i & 1u) && profile(mask & ~(Mask{1} << i)) == std::pair{x, y}) return false;
        }
        return true;
    }

    bool connected(Mask mask) const {
        std::vector<int> parent(static_cast<std::size_t>(n) + 1);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        int components = n;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (!(mask >> i & 1u)) continue;
            const int a = find(pairs[i].from);
            const int b = find(pairs[i].to);
            if (a != b) {
                parent[a] = b;
                --components;
            }
        }
        return components == 1;
    }

    std::uint64_t orderings(Mask mask) const {
        std::vector<Edge> present;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (mask >> i & 1u) present.push_back(pairs[i]);
        }
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 1);
        std::vector<int> position(static_cast<std::size_t>(n) + 1);
        std::uint64_t count = 0;
        do {
            for (int i = 0; i < n; ++i) position[perm[i]] = i;
            const bool ok = std::all_of(present.begin(), present.end(),
                                        [&](const Edge& e) { return position[e.from] < position[e.to]; });
            count += ok;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return count;
    }

    OrderedDag graph(Mask mask) const {
        OrderedDag g(n);
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (mask >> i & 1u) g.add_edge(pairs[i].from, pairs[i].to);
        }
        return g;
    }

    Mask mask_of(const OrderedDag& g) const {
        Mask mask = 0;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (g.has_edge(pairs[i].from, pairs[i].to)) mask |= Mask{1} << i;
        }
        return mask;
    }
};

void check_enumeration_cap(int n, bool allow_extended) {
    const int cap = allow_extended ? kExtendedEnumerationCap : kDefaultEnumerationCap;
    if (n < 1) throw Error(ErrorKind::InvalidSize, "enumeration order must be at least 1");
    if (n > cap) {
        throw Error(ErrorKind::Capacity, "exhaustive enumeration is capped at n = " + std::to_string(cap) +
                                             ", got n = " + std::to_string(n));
    }
}

template <typename Visit>
void for_each_mask(const Universe& u, Visit&& visit) {
    const std::uint64_t count = std::uint64_t{1} << u.size();
    for (std::uint64_t mask = 0; mask < count; ++mask) visit(static_cast<Mask>(mask));
}

}  // namespace

void for_each_graph(const EnumerationScope& scope, const std::function<void(const OrderedDag&)>& visit) {
    check_enumeration_cap(scope.n, scope.allow_extended);
    const Universe u(scope.n);
    for_each_mask(u, [&](Mask mask) {
        const auto prof = u.profile(mask);
        if (scope.filter && prof != *scope.filter) return;
        if (scope.minimal_only && !u.minimal(mask, prof.first, prof.second)) return;
        visit(u.graph(mask));
    });
}

std::vector<OrderedDag> enumerate_graphs(const EnumerationScope& scope) {
    std::vector<OrderedDag> graphs;
    for_each_graph(scope, [&](const OrderedDag& g) { graphs.push_back(g); });
    return graphs;
}

bool is_minimal(const OrderedDag& g, int x, int y) {
    const int n = g.order();
    if (g.initial_count() != x || g.terminal_count() != y) return false;
    if (n > kExtendedEnumerationCap) {
        // Mask encoding only spans small orders; fall back to direct copies.
        for (const Edge& e : g.edges()) {
            OrderedDag h = g;
            h.remove_edge(e.from, e.to);
            const auto p = profile(h);
            if (static_cast<int>(p.initial.size()) == x && static_cast<int>(p.terminal.size()) == y) return false;
        }
        return true;
    }
    const Universe u(n);
    return u.minimal(u.mask_of(g), x, y);
}

BigInt linear_extensions(const OrderedDag& g) {
    if (g.order() > kPermutationCap) {
        throw Error(ErrorKind::Capacity, "permutation filtering is capped at n = " + std::to_string(kPermutationCap));
    }
    std::vector<Edge> edges = g.edges();
    const int n = g.order();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<int> position(static_cast<std::size_t>(n) + 1);
    std::uint64_t count = 0;
    do {
        for (int i = 0; i < n; ++i) position[perm[i]] = i;
        count += std::all_of(edges.begin(), edges.end(),
                             [&](const Edge& e) { return position[e.from] < position[e.to]; });
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

std::optional<BigInt> extremal(ExtremalKind kind, int x, int y, int n, bool allow_extended) {
    check_enumeration_cap(n, allow_extended);
    const Universe u(n);
    std::optional<std::uint64_t> best;
    auto take_max = [&](std::uint64_t v) { best = best ? std::max(*best, v) : v; };
    auto take_min = [&](std::uint64_t v) { best = best ? std::min(*best, v) : v; };
    auto edges_of = [](Mask mask) { return static_cast<std::uint64_t>(std::popcount(mask)); };
    const std::pair target{x, y};

    if (kind == ExtremalKind::MaxAdditionResultEdges) {
        // Breadth-first over states reachable by admissible additions; (x,y)
        // states are halting states.
        std::vector<std::uint8_t> seen(std::size_t{1} << u.size(), 0);
        std::queue<Mask> frontier;
        frontier.push(0);
        seen[0] = 1;
        while (!frontier.empty()) {
            const Mask mask = frontier.front();
            frontier.pop();
            if (u.profile(mask) == target) {
                take_max(edges_of(mask));
                continue;
            }
            for (std::size_t i = 0; i < u.size(); ++i) {
                const Mask next = mask | (Mask{1} << i);
                if (next == mask || seen[next]) continue;
                const auto [initial, terminal] = u.profile(next);
                if (initial >= x && terminal >= y) {
                    seen[next] = 1;
                    frontier.push(next);
                }
            }
        }
    } else {
        for_each_mask(u, [&](Mask mask) {
            if (u.profile(mask) != target) return;
            switch (kind) {
            case ExtremalKind::MaxMinimalEdges:
                if (u.minimal(mask, x, y)) take_max(edges_of(mask));
                break;
            case ExtremalKind::MinEdges: take_min(edges_of(mask)); break;
            case ExtremalKind::MaxEdges: take_max(edges_of(mask)); break;
            case ExtremalKind::MaxConnectedMinimalEdges:
                if (u.connected(mask) && u.minimal(mask, x, y)) take_max(edges_of(mask));
                break;
            case ExtremalKind::MaxOrderings: take_max(u.orderings(mask)); break;
            case ExtremalKind::MaxAdditionResultEdges: break;
            }
        });
    }
    if (!best) return std::nullopt;
    return BigInt(*best);
}

Rational ProcessDistribution::probability_of_profile(int initial, int terminal) const {
    Rational total = 0;
    for (const auto& [cls, p] : classes) {
        if (cls.initial == initial && cls.terminal == terminal) total += p;
    }
    return total;
}

namespace {

void require_small_process(ProcessKind kind, int x, int y, int n, std::size_t max_pairs) {
    if (kind != ProcessKind::Removal && kind != ProcessKind::Addition) {
        throw Error(ErrorKind::ConfigKind, "exact distributions cover the removal and addition processes only");
    }
    if (x < 1 || y < 1 || n < std::max(x, y)) throw Error(ErrorKind::Parameter, "requires x, y >= 1, n >= max(x,y)");
    const auto pairs = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    if (pairs > max_pairs) {
        throw Error(ErrorKind::Capacity, "exact distribution needs C(n,2) <= " + std::to_string(max_pairs) +
                                             ", got " + std::to_string(pairs));
    }
}

ProcessDistribution finalize(const std::map<OutcomeClass, Rational>& weights) {
    ProcessDistribution dist;
    dist.classes = weights;
    dist.expected_edges = 0;
    for (const auto& [cls, p] : weights) dist.expected_edges += p * static_cast<long long>(cls.edges);
    return dist;
}

}  // namespace

ProcessDistribution exact_process_distribution(ProcessKind kind, int x, int y, int n) {
    require_small_process(kind, x, y, n, 10);
    const Universe u(n);
    std::vector<Edge> order = u.pairs;
    std::map<OutcomeClass, std::uint64_t> counts;
    std::uint64_t total = 0;
    do {
        const ProcessOutcome out = kind == ProcessKind::Removal ? removal_over_order(x, y, n, order)
                                                                : addition_over_order(x, y, n, order);
        ++counts[{out.graph.initial_count(), out.graph.terminal_count(), out.graph.edge_count()}];
        ++total;
    } while (std::next_permutation(order.begin(), order.end()));

    std::map<OutcomeClass, Rational> weights;
    for (const auto& [cls, c] : counts) weights[cls] = Rational(BigInt(c), BigInt(total));
    return finalize(weights);
}

ProcessDistribution exact_rejection_distribution(ProcessKind kind, int x, int y, int n) {
    require_small_process(kind, x, y, n, 15);
    const Universe u(n);
    const std::pair target{x, y};
    std::unordered_map<Mask, std::map<OutcomeClass, Rational>> memo;

    std::function<const std::map<OutcomeClass, Rational>&(Mask)> solve =
        [&](Mask mask) -> const std::map<OutcomeClass, Rational>& {
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        std::vector<Mask> moves;
        const bool halted = kind == ProcessKind::Addition && u.profile(mask) == target;
        if (!halted) {
            for (std::size_t i = 0; i < u.size(); ++i) {
                const Mask bit = Mask{1} << i;
                const bool present = (mask & bit) != 0;
                if (kind == ProcessKind::Removal && present) {
                    const auto [initial, terminal] = u.profile(mask & ~bit);
                    if (initial <= x && terminal <= y) moves.push_back(mask & ~bit);
                } else if (kind == ProcessKind::Addition && !present) {
                    const auto [initial, terminal] = u.profile(mask | bit);
                    if (initial >= x && terminal >= y) moves.push_back(mask | bit);
                }
            }
        }
        std::map<OutcomeClass, Rational> result;
        if (moves.empty()) {
            const auto [initial, terminal] = u.profile(mask);
            result[{initial, terminal, static_cast<std::size_t>(std::popcount(mask))}] = 1;
        } else {
            const Rational share(1, static_cast<long long>(moves.size()));
            for (Mask next : moves) {
                for (const auto& [cls, p] : solve(next)) result[cls] += share * p;
            }
        }
        return memo.emplace(mask, std::move(result)).first->second;
    };

    return finalize(solve(kind == ProcessKind::Removal ? u.full() : Mask{0}));
}

}  // namespace taskdag::oracle
