#include "doctest.h"

#include "taskdag/analysis.hpp"
#include "taskdag/error.hpp"
#include "taskdag/families.hpp"
#include "taskdag/graph.hpp"
#include "taskdag/numeric.hpp"

#include <algorithm>

using namespace taskdag;

namespace {

bool throws_parameter(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind() == ErrorKind::Parameter;
    }
    return false;
}

bool has_profile(const OrderedDag& g, int x, int y) { return g.initial_count() == x && g.terminal_count() == y; }

}  // namespace

TEST_CASE("S family") {
    const OrderedDag s115 = build_S(1, 1, 5);
    CHECK(s115.edge_count() == 6);
    CHECK(has_profile(s115, 1, 1));
    CHECK(build_S(3, 2, 6).edge_count() == 5);
    CHECK(has_profile(build_S(2, 2, 4), 2, 2));

    CHECK(throws_parameter([] { build_S(1, 2, 6); }));
    CHECK(throws_parameter([] { build_S(3, 1, 4); }));
    CHECK(throws_parameter([] { build_S(0, 0, 4); }));
}

TEST_CASE("T family") {
    const OrderedDag t115 = build_T(1, 1, 5);
    CHECK(t115.edge_count() == 6);
    CHECK(underlying_components(t115).size() == 1);
    CHECK(build_T(2, 2, 6).edge_count() == 6);

    const OrderedDag t113 = build_T(1, 1, 3);
    CHECK(t113.edge_count() == 2);
    CHECK(longest_path_length(t113) == 2);

    // n = x + y with min(x,y) = 1: stars.
    const OrderedDag in_star = build_T(3, 1, 4);
    CHECK(has_profile(in_star, 3, 1));
    CHECK(in_star.edge_count() == 3);
    CHECK(is_minimal_xy(in_star));
    const OrderedDag out_star = build_T(1, 3, 4);
    CHECK(has_profile(out_star, 1, 3));
    CHECK(out_star.edge_count() == 3);
    CHECK(underlying_components(out_star).size() == 1);

    CHECK(throws_parameter([] { build_T(2, 2, 4); }));
    CHECK(throws_parameter([] { build_T(2, 2, 3); }));
    CHECK(throws_parameter([] { build_T(0, 1, 5); }));
}

TEST_CASE("Q family") {
    CHECK(build_Q(1, 1, 4).edge_count() == 6);
    const OrderedDag q234 = build_Q(2, 3, 4);
    CHECK(q234.edge_count() == 2);
    CHECK(has_profile(q234, 2, 3));
    CHECK(build_Q(2, 2, 5).edge_count() == 8);
    CHECK(has_profile(build_Q(3, 3, 3), 3, 3));

    CHECK(throws_parameter([] { build_Q(3, 2, 3); }));
    CHECK(throws_parameter([] { build_Q(2, 2, 1); }));
    CHECK(throws_parameter([] { build_Q(0, 2, 4); }));
}

TEST_CASE("removal trap") {
    const OrderedDag p14 = build_removal_trap(1, 4);
    CHECK(p14.edges() == std::vector<Edge>{{1, 2}, {2, 3}, {3, 4}});
    const OrderedDag p25 = build_removal_trap(2, 5);
    CHECK(p25.edges() == std::vector<Edge>{{1, 2}, {2, 3}, {3, 4}});
    CHECK(has_profile(p25, 2, 2));
    const OrderedDag p34 = build_removal_trap(3, 4);
    CHECK(p34.edges() == std::vector<Edge>{{1, 2}});
    CHECK(has_profile(p34, 3, 3));

    for (int y = 1; y <= 4; ++y) {
        for (int n = y + 1; n <= 10; ++n) {
            const OrderedDag g = build_removal_trap(y, n);
            REQUIRE(has_profile(g, y, y));
            for (const Edge& e : g.edges()) {
                OrderedDag h = g;
                h.remove_edge(e.from, e.to);
                CHECK(h.terminal_count() == y + 1);
            }
        }
    }
    CHECK(throws_parameter([] { build_removal_trap(3, 3); }));
    CHECK(throws_parameter([] { build_removal_trap(0, 3); }));
}

TEST_CASE("addition trap") {
    CHECK(has_profile(build_addition_trap(2, 1, 4), 2, 2));
    CHECK(has_profile(build_addition_trap(3, 1, 5), 3, 2));
    CHECK(throws_parameter([] { build_addition_trap(2, 2, 5); }));
    CHECK(throws_parameter([] { build_addition_trap(3, 1, 3); }));

    for (int y = 1; y <= 3; ++y) {
        for (int x = y + 1; x <= 5; ++x) {
            for (int n = x + 1; n <= 10; ++n) {
                const OrderedDag g = build_addition_trap(x, y, n);
                REQUIRE(has_profile(g, x, y + 1));
                for (int a = 1; a <= n; ++a) {
                    for (int b = a + 1; b <= n; ++b) {
                        if (g.has_edge(a, b)) continue;
                        OrderedDag h = g;
                        h.add_edge(a, b);
                        CHECK(h.initial_count() < x);
                    }
                }
            }
        }
    }
}

TEST_CASE("families sweep against closed forms") {
    for (int x = 1; x <= 4; ++x) {
        for (int y = 1; y <= 4; ++y) {
            for (int n = 1; n <= 12; ++n) {
                CAPTURE(x);
                CAPTURE(y);
                CAPTURE(n);
                const std::size_t minimal_max = static_cast<std::size_t>(2 * n - x - y - 2);
                if (x >= y && n >= x + 2) {
                    const OrderedDag s = build_S(x, y, n);
                    CHECK(has_profile(s, x, y));
                    CHECK(s.edge_count() == minimal_max);
                    CHECK(is_minimal_xy(s));
                    const auto components = underlying_components(s);
                    const auto singletons =
                        std::count_if(components.begin(), components.end(), [](const auto& c) { return c.size() == 1; });
                    CHECK(singletons == y - 1);
                    CHECK(components.size() == static_cast<std::size_t>(y));
                }
                if (n >= x + y + 1) {
                    const OrderedDag t = build_T(x, y, n);
                    CHECK(has_profile(t, x, y));
                    CHECK(t.edge_count() == minimal_max);
                    CHECK(is_minimal_xy(t));
                    CHECK(underlying_components(t).size() == 1);
                }
                if (n >= std::max(x, y) && (x == y || n > std::max(x, y))) {
                    const OrderedDag q = build_Q(x, y, n);
                    const int k = std::max(0, x + y - n);
                    CHECK(has_profile(q, x, y));
                    CHECK(BigInt(q.edge_count()) == binomial(n - k, 2) - binomial(x - k, 2) - binomial(y - k, 2));
                }
            }
        }
    }
}

TEST_CASE("family dispatch") {
    CHECK(parse_family_kind("removal-trap") == FamilyKind::RemovalTrap);
    CHECK(to_string(FamilyKind::AdditionTrap) == "addition-trap");
    CHECK(build_family(FamilyKind::T, 2, 2, 6) == build_T(2, 2, 6));
    CHECK(build_family(FamilyKind::RemovalTrap, 9, 2, 5) == build_removal_trap(2, 5));
    CHECK(throws_parameter([] { parse_family_kind("R"); }));
}
