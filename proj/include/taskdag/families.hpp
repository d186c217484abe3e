#pragma once

#include "taskdag/graph.hpp"

#include <string_view>

namespace taskdag {

enum class FamilyKind { S, T, Q, RemovalTrap, AdditionTrap };

FamilyKind parse_family_kind(std::string_view name);
std::string_view to_string(FamilyKind kind);

// Vertex labels are canonical: initial vertices take the smallest indices,
// interior vertices come next, then terminal vertices, and isolated vertices
// take the largest indices (except in Q, where they come first).

// Minimal (x,y) graph with 2n-x-y-2 edges: u_1 fans out to every interior
// vertex, every interior vertex feeds v, the other initial vertices feed v,
// and y-1 isolated vertices. Requires x >= y >= 1, n >= x+2.
OrderedDag build_S(int x, int y, int n);

// Connected minimal (x,y) graph with 2n-x-y-2 edges. Requires x, y >= 1 and
// n >= x+y+1. Also accepts n == x+y when min(x,y) == 1, returning the star
// between the single exterior vertex and the others (max(x,y) edges).
OrderedDag build_T(int x, int y, int n);

// (x,y) graph with the maximum number of edges. Requires x, y >= 1,
// n >= max(x,y), and n > max(x,y) when x != y.
OrderedDag build_Q(int x, int y, int n);

// Path on 1..n-y+1 plus y-1 isolated vertices: a (y,y) graph from which no
// edge can be removed without creating a new terminal vertex.
OrderedDag build_removal_trap(int y, int n);

// x-y sources feeding a transitive tournament on x-y+1..n-y, plus y isolated
// vertices: x initial and y+1 terminal vertices, and every absent edge would
// consume an initial vertex. Requires x > y >= 1, n > x.
OrderedDag build_addition_trap(int x, int y, int n);

OrderedDag build_family(FamilyKind kind, int x, int y, int n);

}  // namespace taskdag
