#include "taskdag/analysis.hpp"

#include "taskdag/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace taskdag {

ExtremalKind parse_extremal_kind(std::string_view name) {
    for (ExtremalKind kind : kAllExtremalKinds) {
        if (to_string(kind) == name) return kind;
    }
    throw Error(ErrorKind::Parameter, "unknown extremal kind '" + std::string(name) + "'");
}

std::string_view to_string(ExtremalKind kind) {
    switch (kind) {
    case ExtremalKind::MaxMinimalEdges: return "MaxMinimalEdges";
    case ExtremalKind::MinEdges: return "MinEdges";
    case ExtremalKind::MaxEdges: return "MaxEdges";
    case ExtremalKind::MaxAdditionResultEdges: return "MaxAdditionResultEdges";
    case ExtremalKind::MaxConnectedMinimalEdges: return "MaxConnectedMinimalEdges";
    case ExtremalKind::MaxOrderings: return "MaxOrderings";
    }
    return "?";
}

std::string_view to_string(StructureLabel label) {
    switch (label) {
    case StructureLabel::Case1_AllIsolated: return "Case1_AllIsolated";
    case StructureLabel::Case2_TwoComponentsNoInterior: return "Case2_TwoComponentsNoInterior";
    case StructureLabel::Case3a_OneComponentNoInterior: return "Case3a_OneComponentNoInterior";
    case StructureLabel::Case3b_ManyInterior: return "Case3b_ManyInterior";
    case StructureLabel::Case3c_OneInterior: return "Case3c_OneInterior";
    case StructureLabel::NotExtremal: return "NotExtremal";
    }
    return "?";
}

namespace {

[[noreturn]] void out_of_domain(ExtremalKind kind, int x, int y, int n, std::string_view why) {
    throw Error(ErrorKind::Domain, std::string(to_string(kind)) + "(" + std::to_string(x) + "," +
                                       std::to_string(y) + "," + std::to_string(n) + "): " + std::string(why));
}

BigInt exact_quotient(const BigInt& num, const BigInt& den) {
    BigInt q;
    BigInt r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0) throw Error(ErrorKind::Domain, "non-integral extremal quotient");
    return q;
}

}  // namespace

BigInt extremal_value(ExtremalKind kind, int x, int y, int n) {
    if (x < 1 || y < 1 || n < 1) out_of_domain(kind, x, y, n, "x, y, n must be positive");
    const int hi = std::max(x, y);
    const int lo = std::min(x, y);
    const bool graph_exists = n > hi || (n == hi && x == y);

    switch (kind) {
    case ExtremalKind::MaxMinimalEdges:
        if (!graph_exists) out_of_domain(kind, x, y, n, "no (x,y) graph of this order exists");
        if (n == hi) return 0;
        if (n == hi + 1) return 2 * n - x - y - 1;
        return 2 * n - x - y - 2;

    case ExtremalKind::MinEdges:
        if (n <= hi) out_of_domain(kind, x, y, n, "requires n > max(x,y)");
        return n - lo;

    case ExtremalKind::MaxEdges: {
        if (!graph_exists) out_of_domain(kind, x, y, n, "no (x,y) graph of this order exists");
        const int isolated = std::max(0, x + y - n);
        return binomial(n - isolated, 2) - binomial(x - isolated, 2) - binomial(y - isolated, 2);
    }

    case ExtremalKind::MaxAdditionResultEdges:
        if (n <= x + y) out_of_domain(kind, x, y, n, "requires n > x+y");
        return binomial(n, 2) + 1 - binomial(hi, 2) - binomial(lo + 1, 2);

    case ExtremalKind::MaxConnectedMinimalEdges:
        if (n > x + y) return 2 * n - x - y - 2;
        if (n == x + y && lo == 1) return hi;
        out_of_domain(kind, x, y, n, "requires n > x+y, or n == x+y with min(x,y) == 1");

    case ExtremalKind::MaxOrderings:
        if (x == 1 && y == 1) return n == 1 ? BigInt(1) : factorial(n - 2);
        if (!graph_exists) out_of_domain(kind, x, y, n, "no (x,y) graph of this order exists");
        if (n == hi) return factorial(n);
        if (n == hi + 1) return exact_quotient(factorial(hi + 1), hi - lo + 2);
        if (n == hi + 2) {
            const int denominator = lo > 1 ? 2 * (hi - lo + 2) : 2 * (hi - lo + 3);
            return exact_quotient(factorial(hi + 2), denominator);
        }
        out_of_domain(kind, x, y, n, "only known for x = y = 1 or max(x,y) <= n <= max(x,y)+2");
    }
    out_of_domain(kind, x, y, n, "unknown kind");
}

bool is_minimal_xy(const OrderedDag& g) {
    for (const Edge& e : g.edges()) {
        if (g.out_degree(e.from) != 1 && g.in_degree(e.to) != 1) return false;
    }
    return true;
}

std::optional<std::vector<Vertex>> find_removable_path(const OrderedDag& g) {
    auto pass_through = [&](Vertex v) { return g.in_degree(v) == 1 && g.out_degree(v) == 1; };
    for (Vertex start = 1; start <= g.order(); ++start) {
        if (g.out_degree(start) <= 1) continue;
        for (Vertex second : g.successors(start)) {
            if (!pass_through(second)) continue;
            std::vector<Vertex> path{start, second};
            Vertex cur = second;
            while (pass_through(cur)) {
                cur = g.successors(cur).front();
                path.push_back(cur);
            }
            if (g.in_degree(cur) > 1) return path;
        }
    }
    return std::nullopt;
}

OrderedDag remove_removable_path(const OrderedDag& g, const std::vector<Vertex>& path) {
    auto reject = [](const std::string& why) { throw Error(ErrorKind::Validation, "not a removable path: " + why); };
    if (path.size() < 3) reject("needs at least 3 vertices");
    for (Vertex v : path) {
        if (v < 1 || v > g.order()) reject("vertex " + std::to_string(v) + " out of range");
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        if (path[i] >= path[i + 1] || !g.has_edge(path[i], path[i + 1])) {
            reject("missing edge (" + std::to_string(path[i]) + "," + std::to_string(path[i + 1]) + ")");
        }
    }
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        if (g.in_degree(path[i]) != 1 || g.out_degree(path[i]) != 1) {
            reject("inner vertex " + std::to_string(path[i]) + " does not have in- and out-degree 1");
        }
    }
    if (g.out_degree(path.front()) <= 1) reject("first vertex needs out-degree > 1");
    if (g.in_degree(path.back()) <= 1) reject("last vertex needs in-degree > 1");

    std::vector<Vertex> relabel(static_cast<std::size_t>(g.order()) + 1, 0);
    for (std::size_t i = 1; i + 1 < path.size(); ++i) relabel[path[i]] = -1;
    Vertex next = 0;
    for (Vertex v = 1; v <= g.order(); ++v) {
        if (relabel[v] == 0) relabel[v] = ++next;
    }
    OrderedDag result(next);
    for (const Edge& e : g.edges()) {
        if (relabel[e.from] > 0 && relabel[e.to] > 0) result.add_edge(relabel[e.from], relabel[e.to]);
    }
    return result;
}

namespace {

bool only_neighbour(const std::vector<Vertex>& neighbours, Vertex expected) {
    return neighbours.size() == 1 && neighbours.front() == expected;
}

// Case (3)(b): interior vertices all sit between one initial hub u and one
// terminal hub v; u may also feed private terminals, v may also be fed by
// private initials.
bool match_many_interior(const OrderedDag& g, StructureWitness& w) {
    const Vertex first = w.interior.front();
    const auto into = g.predecessors(first);
    const auto outof = g.successors(first);
    if (into.size() != 1 || outof.size() != 1) return false;
    const Vertex u = into.front();
    const Vertex v = outof.front();
    if (g.in_degree(u) != 0 || g.out_degree(v) != 0) return false;

    std::vector<bool> inner(static_cast<std::size_t>(g.order()) + 1, false);
    for (Vertex c : w.interior) inner[c] = true;
    for (const Edge& e : g.edges()) {
        const bool through = (e.from == u && inner[e.to]) || (inner[e.from] && e.to == v);
        const bool u_leaf = e.from == u && e.to != v && !inner[e.to] && g.out_degree(e.to) == 0 &&
                            only_neighbour(g.predecessors(e.to), u);
        const bool v_leaf = e.to == v && e.from != u && !inner[e.from] && g.in_degree(e.from) == 0 &&
                            only_neighbour(g.successors(e.from), v);
        if (!through && !u_leaf && !v_leaf) return false;
    }
    for (Vertex c : w.interior) {
        if (!only_neighbour(g.predecessors(c), u) || !only_neighbour(g.successors(c), v)) return false;
    }
    w.hub_initial = u;
    w.hub_terminal = v;
    return true;
}

// Case (3)(c): a single interior vertex c with p initial and q terminal
// neighbours. With p = 1 the initial neighbour may feed further private
// terminals; with q = 1 the terminal neighbour may be fed by further private
// initials; with p > 1 (q > 1) those neighbours touch only c.
bool match_one_interior(const OrderedDag& g, StructureWitness& w) {
    const Vertex c = w.interior.front();
    const auto sources = g.predecessors(c);
    const auto sinks = g.successors(c);
    w.p = static_cast<int>(sources.size());
    w.q = static_cast<int>(sinks.size());
    std::optional<Vertex> u;
    std::optional<Vertex> v;
    if (w.p == 1) u = sources.front();
    if (w.q == 1) v = sinks.front();

    auto listed = [](const std::vector<Vertex>& list, Vertex z) {
        return std::find(list.begin(), list.end(), z) != list.end();
    };
    for (const Edge& e : g.edges()) {
        if (e.from == c || e.to == c) continue;
        const bool u_leaf = u && e.from == *u && !listed(sinks, e.to) && g.out_degree(e.to) == 0 &&
                            only_neighbour(g.predecessors(e.to), *u);
        const bool v_leaf = v && e.to == *v && !listed(sources, e.from) && g.in_degree(e.from) == 0 &&
                            only_neighbour(g.successors(e.from), *v);
        if (!u_leaf && !v_leaf) return false;
    }
    w.hub_initial = u;
    w.hub_terminal = v;
    return true;
}

}  // namespace

StructureCase classify_extremal(const OrderedDag& g, int x, int y) {
    if (g.initial_count() != x || g.terminal_count() != y) {
        throw Error(ErrorKind::Precondition,
                    "graph has profile (" + std::to_string(g.initial_count()) + "," +
                        std::to_string(g.terminal_count()) + "), expected (" + std::to_string(x) + "," +
                        std::to_string(y) + ")");
    }
    StructureCase result;
    for (auto& comp : underlying_components(g)) {
        if (comp.size() > 1) result.witness.components.push_back(std::move(comp));
    }
    result.witness.interior = profile(g).interior;
    if (!is_minimal_xy(g)) return result;

    const auto& w = result.witness;
    auto label = StructureLabel::NotExtremal;
    if (w.components.empty()) {
        label = StructureLabel::Case1_AllIsolated;
    } else if (w.components.size() == 2) {
        if (w.interior.empty()) label = StructureLabel::Case2_TwoComponentsNoInterior;
    } else if (w.components.size() == 1) {
        if (w.interior.empty()) {
            label = StructureLabel::Case3a_OneComponentNoInterior;
        } else if (w.interior.size() == 1) {
            if (match_one_interior(g, result.witness)) label = StructureLabel::Case3c_OneInterior;
        } else if (match_many_interior(g, result.witness)) {
            label = StructureLabel::Case3b_ManyInterior;
        }
    }
    result.label = label;
    return result;
}

Rational retention_probability_bound(int r, int s, int n) {
    if (!(n >= 3 && 1 <= r && r < s && s <= n)) {
        throw Error(ErrorKind::Domain, "retention bound requires 1 <= r < s <= n and n >= 3");
    }
    Rational value = Rational(1, s - 1) + Rational(1, n - r) - Rational(1, n - 2 + s - r);
    if (value > 1) value = 1;
    if (value < 0) value = 0;
    return value;
}

Rational expected_tree_path_length(int k) {
    if (k < 1) throw Error(ErrorKind::Domain, "path target k must be at least 1");
    Rational sum = 0;
    for (int j = 1; j < k; ++j) sum += Rational(1, j);
    return sum;
}

double removal_density_limit() {
    return 3.0 - 2.0 * std::numbers::ln2;
}

}  // namespace taskdag
