#pragma once

#include "taskdag/analysis.hpp"
#include "taskdag/graph.hpp"
#include "taskdag/numeric.hpp"
#include "taskdag/processes.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace taskdag::oracle {

// Brute-force ground truth. Nothing in here relies on the closed forms or on
// the per-edge minimality criterion; every answer comes from the definitions.

inline constexpr int kDefaultEnumerationCap = 6;
inline constexpr int kExtendedEnumerationCap = 7;
inline constexpr int kPermutationCap = 8;

struct EnumerationScope {
    int n = 1;
    std::optional<std::pair<int, int>> filter;  // exact (x,y) profile
    bool minimal_only = false;                  // definition-level minimality against `filter` or own profile
    bool allow_extended = false;                // lifts the cap from 6 to 7
};

// Visits every order-respecting labeled graph on n vertices exactly once
// (all 2^C(n,2) edge subsets), after filtering.
void for_each_graph(const EnumerationScope& scope, const std::function<void(const OrderedDag&)>& visit);
std::vector<OrderedDag> enumerate_graphs(const EnumerationScope& scope);

// Profile is (x,y) and deleting any single edge changes the profile.
bool is_minimal(const OrderedDag& g, int x, int y);

// Number of the n! vertex permutations that respect every edge.
BigInt linear_extensions(const OrderedDag& g);

// Exhaustive extremum; nullopt when no graph qualifies. MaxAdditionResultEdges
// explores every state reachable by the addition process.
std::optional<BigInt> extremal(ExtremalKind kind, int x, int y, int n, bool allow_extended = false);

struct OutcomeClass {
    int initial = 0;
    int terminal = 0;
    std::size_t edges = 0;

    auto operator<=>(const OutcomeClass&) const = default;
};

struct ProcessDistribution {
    std::map<OutcomeClass, Rational> classes;
    Rational expected_edges;

    Rational probability_of_profile(int initial, int terminal) const;
};

// Runs the permutation-order process on every one of the C(n,2)! edge
// orders. Requires C(n,2) <= 10. Kind must be Removal or Addition.
ProcessDistribution exact_process_distribution(ProcessKind kind, int x, int y, int n);

// Exact law of the rejection-sampling process as a Markov chain: from each
// state, the next accepted move is uniform over the currently admissible
// moves. Requires C(n,2) <= 15.
ProcessDistribution exact_rejection_distribution(ProcessKind kind, int x, int y, int n);

}  // namespace taskdag::oracle
