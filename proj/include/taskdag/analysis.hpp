#pragma once

#include "taskdag/graph.hpp"
#include "taskdag/numeric.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace taskdag {

enum class ExtremalKind {
    MaxMinimalEdges,
    MinEdges,
    MaxEdges,
    MaxAdditionResultEdges,
    MaxConnectedMinimalEdges,
    MaxOrderings,
};

inline constexpr ExtremalKind kAllExtremalKinds[] = {
    ExtremalKind::MaxMinimalEdges,        ExtremalKind::MinEdges,
    ExtremalKind::MaxEdges,               ExtremalKind::MaxAdditionResultEdges,
    ExtremalKind::MaxConnectedMinimalEdges, ExtremalKind::MaxOrderings,
};

ExtremalKind parse_extremal_kind(std::string_view name);
std::string_view to_string(ExtremalKind kind);

// Closed-form extremal values. Each kind is defined only on the parameter
// range where it is proven; anything else raises a Domain error rather than
// extrapolating. Results are symmetric in (x, y).
//
//   MaxMinimalEdges           largest minimal (x,y) graph of order n
//   MinEdges                  smallest (x,y) graph, n > max(x,y)
//   MaxEdges                  largest (x,y) graph
//   MaxAdditionResultEdges    largest (x,y) output of the addition process, n > x+y
//   MaxConnectedMinimalEdges  largest connected minimal (x,y) graph, n >= x+y
//   MaxOrderings              most linear extensions of an (x,y) graph:
//                             x = y = 1, or max(x,y) <= n <= max(x,y)+2
BigInt extremal_value(ExtremalKind kind, int x, int y, int n);

// Per-edge criterion: every edge (u,v) has outdeg(u) = 1 or indeg(v) = 1.
// Equivalent to minimality among graphs with the same profile.
bool is_minimal_xy(const OrderedDag& g);

// A directed path v1..vk, k >= 3, whose inner vertices have in- and
// out-degree 1, with outdeg(v1) > 1 and indeg(vk) > 1. Scans start vertices
// and then successors in increasing order; returns the first hit.
std::optional<std::vector<Vertex>> find_removable_path(const OrderedDag& g);

// Deletes the path's edges and inner vertices, relabeling the survivors
// 1..n' in their original relative order.
OrderedDag remove_removable_path(const OrderedDag& g, const std::vector<Vertex>& path);

enum class StructureLabel {
    Case1_AllIsolated,
    Case2_TwoComponentsNoInterior,
    Case3a_OneComponentNoInterior,
    Case3b_ManyInterior,
    Case3c_OneInterior,
    NotExtremal,
};

std::string_view to_string(StructureLabel label);

struct StructureWitness {
    std::vector<std::vector<Vertex>> components;  // components that are not isolated vertices
    std::vector<Vertex> interior;
    std::optional<Vertex> hub_initial;   // u in cases 3b, and 3c with p = 1
    std::optional<Vertex> hub_terminal;  // v in cases 3b, and 3c with q = 1
    int p = 0;  // case 3c: initial neighbours of the interior vertex
    int q = 0;  // case 3c: terminal neighbours of the interior vertex
};

struct StructureCase {
    StructureLabel label = StructureLabel::NotExtremal;
    StructureWitness witness;
};

// Matches a minimal (x,y) graph against the shapes of the edge-maximal
// minimal graphs. Requires the profile of g to be exactly (x,y).
StructureCase classify_extremal(const OrderedDag& g, int x, int y);

// Upper bound on the probability that edge (r,s) survives the (1,1) removal
// process on n vertices: 1/(s-1) + 1/(n-r) - 1/(n-2+s-r).
Rational retention_probability_bound(int r, int s, int n);

// H_{k-1}: expected length of the path from 1 to k in a random directed tree.
Rational expected_tree_path_length(int k);

// 3 - 2 ln 2, the limiting edges-per-vertex ceiling of the (1,1) removal process.
double removal_density_limit();

}  // namespace taskdag
