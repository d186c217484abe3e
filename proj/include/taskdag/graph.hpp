#pragma once

#include "taskdag/numeric.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace taskdag {

using Vertex = int;

struct Edge {
    Vertex from = 0;
    Vertex to = 0;

    auto operator<=>(const Edge&) const = default;
};

// Labeled DAG on vertices 1..n in which every edge (a, b) has a < b, i.e. a
// subgraph of the transitive tournament. Degree tallies and the number of
// initial / terminal / isolated vertices are maintained on every mutation.
class OrderedDag {
public:
    explicit OrderedDag(int n);

    int order() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return m_; }

    bool has_edge(Vertex a, Vertex b) const;
    void add_edge(Vertex a, Vertex b);
    void remove_edge(Vertex a, Vertex b);

    int in_degree(Vertex v) const;
    int out_degree(Vertex v) const;

    int initial_count() const noexcept { return initial_; }
    int terminal_count() const noexcept { return terminal_; }
    int isolated_count() const noexcept { return isolated_; }

    // Lexicographically sorted.
    std::vector<Edge> edges() const;
    std::vector<Vertex> successors(Vertex v) const;
    std::vector<Vertex> predecessors(Vertex v) const;

    friend bool operator==(const OrderedDag& a, const OrderedDag& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    void check_vertex(Vertex v) const;
    std::size_t slot(Vertex a, Vertex b) const {
        return static_cast<std::size_t>(a - 1) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(b - 1);
    }
    void retally(Vertex v, int sign);

    int n_;
    std::vector<std::uint8_t> adj_;
    std::vector<int> in_;
    std::vector<int> out_;
    std::size_t m_ = 0;
    int initial_;
    int terminal_;
    int isolated_;
};

struct VertexProfile {
    std::vector<Vertex> initial;
    std::vector<Vertex> terminal;
    std::vector<Vertex> isolated;
    std::vector<Vertex> interior;
};

OrderedDag empty_graph(int n);
OrderedDag complete_graph(int n);

VertexProfile profile(const OrderedDag& g);

// Number of edges on a longest directed path.
int longest_path_length(const OrderedDag& g);

// Components of the underlying undirected graph, each sorted, ordered by
// smallest member.
std::vector<std::vector<Vertex>> underlying_components(const OrderedDag& g);

bool is_underlying_forest(const OrderedDag& g);

inline constexpr int kDefaultLinextCap = 20;
inline constexpr int kMaxLinextCap = 24;

// Subset dynamic program over downsets; refuses n above `cap`.
BigInt count_linear_extensions(const OrderedDag& g, int cap = kDefaultLinextCap);

}  // namespace taskdag
