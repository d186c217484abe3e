#include "taskdag/families.hpp"

#include "taskdag/error.hpp"

#include <algorithm>
#include <string>

namespace taskdag {

namespace {

[[noreturn]] void bad_parameters(std::string_view family, int x, int y, int n, std::string_view need) {
    throw Error(ErrorKind::Parameter, std::string(family) + "(" + std::to_string(x) + "," + std::to_string(y) +
                                          "," + std::to_string(n) + ") requires " + std::string(need));
}

}  // namespace

FamilyKind parse_family_kind(std::string_view name) {
    if (name == "S") return FamilyKind::S;
    if (name == "T") return FamilyKind::T;
    if (name == "Q") return FamilyKind::Q;
    if (name == "removal-trap") return FamilyKind::RemovalTrap;
    if (name == "addition-trap") return FamilyKind::AdditionTrap;
    throw Error(ErrorKind::Parameter, "unknown family '" + std::string(name) + "'");
}

std::string_view to_string(FamilyKind kind) {
    switch (kind) {
    case FamilyKind::S: return "S";
    case FamilyKind::T: return "T";
    case FamilyKind::Q: return "Q";
    case FamilyKind::RemovalTrap: return "removal-trap";
    case FamilyKind::AdditionTrap: return "addition-trap";
    }
    return "?";
}

OrderedDag build_S(int x, int y, int n) {
    if (!(y >= 1 && x >= y && n >= x + 2)) bad_parameters("S", x, y, n, "x >= y >= 1 and n >= x+2");
    OrderedDag g(n);
    const Vertex first_interior = x - y + 2;
    const Vertex sink = n - y + 1;
    for (Vertex i = first_interior; i < sink; ++i) {
        g.add_edge(1, i);
        g.add_edge(i, sink);
    }
    for (Vertex u = 2; u < first_interior; ++u) g.add_edge(u, sink);
    return g;
}

OrderedDag build_T(int x, int y, int n) {
    if (x < 1 || y < 1) bad_parameters("T", x, y, n, "x, y >= 1");
    if (n == x + y && std::min(x, y) == 1) {
        OrderedDag g(n);
        if (y == 1) {
            for (Vertex u = 1; u < n; ++u) g.add_edge(u, n);
        } else {
            for (Vertex v = 2; v <= n; ++v) g.add_edge(1, v);
        }
        return g;
    }
    if (n < x + y + 1) bad_parameters("T", x, y, n, "n >= x+y+1 (or n == x+y with min(x,y) == 1)");
    OrderedDag g(n);
    const Vertex first_terminal = n - y + 1;
    for (Vertex i = x + 1; i < first_terminal; ++i) {
        g.add_edge(1, i);
        g.add_edge(i, first_terminal);
    }
    for (Vertex v = first_terminal + 1; v <= n; ++v) g.add_edge(1, v);
    for (Vertex u = 2; u <= x; ++u) g.add_edge(u, first_terminal);
    return g;
}

OrderedDag build_Q(int x, int y, int n) {
    if (x < 1 || y < 1 || n < std::max(x, y) || (x != y && n == std::max(x, y))) {
        bad_parameters("Q", x, y, n, "x, y >= 1, n >= max(x,y), and n > max(x,y) when x != y");
    }
    const int isolated = std::max(0, x + y - n);
    OrderedDag g(n);
    for (Vertex a = isolated + 1; a <= n; ++a) {
        for (Vertex b = a + 1; b <= n; ++b) {
            const bool both_initial = b <= x;
            const bool both_terminal = a >= n - y + isolated + 1;
            if (!both_initial && !both_terminal) g.add_edge(a, b);
        }
    }
    return g;
}

OrderedDag build_removal_trap(int y, int n) {
    if (!(y >= 1 && n >= y + 1)) bad_parameters("removal-trap", y, y, n, "y >= 1 and n >= y+1");
    OrderedDag g(n);
    for (Vertex v = 1; v < n - y + 1; ++v) g.add_edge(v, v + 1);
    return g;
}

OrderedDag build_addition_trap(int x, int y, int n) {
    if (!(y >= 1 && x > y && n > x)) bad_parameters("addition-trap", x, y, n, "x > y >= 1 and n > x");
    OrderedDag g(n);
    const Vertex block_begin = x - y + 1;
    const Vertex block_end = n - y;
    for (Vertex a = 1; a <= block_end; ++a) {
        for (Vertex b = std::max(a + 1, block_begin); b <= block_end; ++b) g.add_edge(a, b);
    }
    return g;
}

OrderedDag build_family(FamilyKind kind, int x, int y, int n) {
    switch (kind) {
    case FamilyKind::S: return build_S(x, y, n);
    case FamilyKind::T: return build_T(x, y, n);
    case FamilyKind::Q: return build_Q(x, y, n);
    case FamilyKind::RemovalTrap: return build_removal_trap(y, n);
    case FamilyKind::AdditionTrap: return build_addition_trap(x, y, n);
    }
    throw Error(ErrorKind::Parameter, "unknown family");
}

}  // namespace taskdag
