#include "taskdag/graph.hpp"

#include "taskdag/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace taskdag {

OrderedDag::OrderedDag(int n)
    : n_(n), initial_(n), terminal_(n), isolated_(n) {
    if (n < 1) throw Error(ErrorKind::InvalidSize, "graph order must be at least 1, got " + std::to_string(n));
    adj_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    in_.assign(static_cast<std::size_t>(n) + 1, 0);
    out_.assign(static_cast<std::size_t>(n) + 1, 0);
}

void OrderedDag::check_vertex(Vertex v) const {
    if (v < 1 || v > n_) {
        throw Error(ErrorKind::VertexRange,
                    "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
    }
}

bool OrderedDag::has_edge(Vertex a, Vertex b) const {
    check_vertex(a);
    check_vertex(b);
    return a < b && adj_[slot(a, b)] != 0;
}

// Removes v's contribution (sign = -1) or adds it back (sign = +1) to the
// initial / terminal / isolated tallies.
void OrderedDag::retally(Vertex v, int sign) {
    const bool ini = in_[v] == 0;
    const bool ter = out_[v] == 0;
    initial_ += sign * static_cast<int>(ini);
    terminal_ += sign * static_cast<int>(ter);
    isolated_ += sign * static_cast<int>(ini && ter);
}

void OrderedDag::add_edge(Vertex a, Vertex b) {
    check_vertex(a);
    check_vertex(b);
    if (a >= b) {
        throw Error(ErrorKind::OrderViolation,
                    "edge (" + std::to_string(a) + "," + std::to_string(b) + ") violates a < b");
    }
    auto& cell = adj_[slot(a, b)];
    if (cell != 0) {
        throw Error(ErrorKind::DuplicateEdge,
                    "edge (" + std::to_string(a) + "," + std::to_string(b) + ") already present");
    }
    retally(a, -1);
    retally(b, -1);
    cell = 1;
    ++out_[a];
    ++in_[b];
    ++m_;
    retally(a, +1);
    retally(b, +1);
}

void OrderedDag::remove_edge(Vertex a, Vertex b) {
    if (!has_edge(a, b)) {
        throw Error(ErrorKind::AbsentEdge,
                    "edge (" + std::to_string(a) + "," + std::to_string(b) + ") not present");
    }
    retally(a, -1);
    retally(b, -1);
    adj_[slot(a, b)] = 0;
    --out_[a];
    --in_[b];
    --m_;
    retally(a, +1);
    retally(b, +1);
}

int OrderedDag::in_degree(Vertex v) const {
    check_vertex(v);
    return in_[v];
}

int OrderedDag::out_degree(Vertex v) const {
    check_vertex(v);
    return out_[v];
}

std::vector<Edge> OrderedDag::edges() const {
    std::vector<Edge> result;
    result.reserve(m_);
    for (Vertex a = 1; a <= n_; ++a) {
        if (out_[a] == 0) continue;
        for (Vertex b = a + 1; b <= n_; ++b) {
            if (adj_[slot(a, b)] != 0) result.push_back({a, b});
        }
    }
    return result;
}

std::vector<Vertex> OrderedDag::successors(Vertex v) const {
    check_vertex(v);
    std::vector<Vertex> result;
    result.reserve(static_cast<std::size_t>(out_[v]));
    for (Vertex b = v + 1; b <= n_; ++b) {
        if (adj_[slot(v, b)] != 0) result.push_back(b);
    }
    return result;
}

std::vector<Vertex> OrderedDag::predecessors(Vertex v) const {
    check_vertex(v);
    std::vector<Vertex> result;
    result.reserve(static_cast<std::size_t>(in_[v]));
    for (Vertex a = 1; a < v; ++a) {
        if (adj_[slot(a, v)] != 0) result.push_back(a);
    }
    return result;
}

OrderedDag empty_graph(int n) {
    return OrderedDag(n);
}

OrderedDag complete_graph(int n) {
    OrderedDag g(n);
    for (Vertex a = 1; a <= n; ++a) {
        for (Vertex b = a + 1; b <= n; ++b) g.add_edge(a, b);
    }
    return g;
}

VertexProfile profile(const OrderedDag& g) {
    VertexProfile p;
    for (Vertex v = 1; v <= g.order(); ++v) {
        const bool ini = g.in_degree(v) == 0;
        const bool ter = g.out_degree(v) == 0;
        if (ini) p.initial.push_back(v);
        if (ter) p.terminal.push_back(v);
        if (ini && ter) p.isolated.push_back(v);
        if (!ini && !ter) p.interior.push_back(v);
    }
    return p;
}

int longest_path_length(const OrderedDag& g) {
    // Index order is a topological order.
    std::vector<int> ending_at(static_cast<std::size_t>(g.order()) + 1, 0);
    int best = 0;
    for (Vertex v = 1; v <= g.order(); ++v) {
        for (Vertex u : g.predecessors(v)) ending_at[v] = std::max(ending_at[v], ending_at[u] + 1);
        best = std::max(best, ending_at[v]);
    }
    return best;
}

namespace {

struct DisjointSets {
    std::vector<int> parent;

    explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n) + 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    int find(int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

std::vector<std::vector<Vertex>> underlying_components(const OrderedDag& g) {
    DisjointSets sets(g.order());
    for (const Edge& e : g.edges()) sets.unite(e.from, e.to);
    std::vector<std::vector<Vertex>> result;
    std::vector<int> index_of_root(static_cast<std::size_t>(g.order()) + 1, -1);
    for (Vertex v = 1; v <= g.order(); ++v) {
        const int root = sets.find(v);
        if (index_of_root[root] < 0) {
            index_of_root[root] = static_cast<int>(result.size());
            result.emplace_back();
        }
        result[index_of_root[root]].push_back(v);
    }
    return result;
}

bool is_underlying_forest(const OrderedDag& g) {
    const auto components = underlying_components(g);
    return g.edge_count() == static_cast<std::size_t>(g.order()) - components.size();
}

BigInt count_linear_extensions(const OrderedDag& g, int cap) {
    if (cap > kMaxLinextCap) {
        throw Error(ErrorKind::Capacity, "linear-extension cap " + std::to_string(cap) +
                                             " exceeds the hard maximum " + std::to_string(kMaxLinextCap));
    }
    const int n = g.order();
    if (n > cap) {
        throw Error(ErrorKind::Capacity, "linear-extension counting is capped at n = " + std::to_string(cap) +
                                             ", got n = " + std::to_string(n));
    }
    std::vector<std::uint32_t> preds(static_cast<std::size_t>(n), 0);
    for (const Edge& e : g.edges()) preds[e.to - 1] |= 1u << (e.from - 1);

    // ways[S] = number of orderings of the downset S as a prefix. At n <= 24
    // the counts stay below 24! < 2^80, well inside 128 bits.
    using Count = unsigned __int128;
    const std::size_t states = std::size_t{1} << n;
    std::vector<Count> ways(states, 0);
    ways[0] = 1;
    for (std::size_t s = 0; s < states; ++s) {
        const Count here = ways[s];
        if (here == 0) continue;
        const auto placed = static_cast<std::uint32_t>(s);
        for (int v = 0; v < n; ++v) {
            const std::uint32_t bit = 1u << v;
            if ((placed & bit) == 0 && (preds[v] & ~placed) == 0) ways[s | bit] += here;
        }
    }
    Count total = ways[states - 1];
    BigInt result = static_cast<std::uint64_t>(total >> 64);
    result <<= 64;
    result += static_cast<std::uint64_t>(total);
    return result;
}

}  // namespace taskdag
