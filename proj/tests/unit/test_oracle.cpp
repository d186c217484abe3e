#include "doctest.h"

#include "taskdag/analysis.hpp"
#include "taskdag/error.hpp"
#include "taskdag/families.hpp"
#include "taskdag/graph.hpp"
#include "taskdag/oracle.hpp"
#include "taskdag/processes.hpp"
#include "taskdag/random.hpp"

#include <cmath>
#include <map>

using namespace taskdag;
namespace orc = taskdag::oracle;

namespace {

OrderedDag path_graph(int n) {
    OrderedDag g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
    return g;
}

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected a taskdag::Error");
    return ErrorKind::Validation;
}

std::optional<BigInt> closed_form(ExtremalKind kind, int x, int y, int n) {
    try {
        return extremal_value(kind, x, y, n);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::Domain) throw;
        return std::nullopt;
    }
}

}  // namespace

TEST_CASE("enumeration counts") {
    CHECK(orc::enumerate_graphs({2}).size() == 2);
    CHECK(orc::enumerate_graphs({3}).size() == 8);
    CHECK(orc::enumerate_graphs({6}).size() == 32768);

    // Direct count of (1,1) graphs at n = 4: vertex 1 the only source, vertex 4 the only sink.
    std::size_t direct = 0;
    for (unsigned mask = 0; mask < 64; ++mask) {
        OrderedDag g(4);
        unsigned bit = 0;
        for (int a = 1; a <= 4; ++a) {
            for (int b = a + 1; b <= 4; ++b, ++bit) {
                if (mask & (1u << bit)) g.add_edge(a, b);
            }
        }
        bool unique_source = true;
        bool unique_sink = true;
        for (int v = 2; v <= 4; ++v) unique_source = unique_source && g.in_degree(v) > 0;
        for (int v = 1; v <= 3; ++v) unique_sink = unique_sink && g.out_degree(v) > 0;
        direct += unique_source && unique_sink;
    }
    orc::EnumerationScope scope{4, std::make_pair(1, 1)};
    CHECK(orc::enumerate_graphs(scope).size() == direct);

    CHECK(kind_of([] { orc::enumerate_graphs({7}); }) == ErrorKind::Capacity);
    CHECK(kind_of([] { orc::enumerate_graphs({0}); }) == ErrorKind::InvalidSize);
    orc::EnumerationScope extended{7};
    extended.filter = std::make_pair(7, 7);
    extended.allow_extended = true;
    CHECK(orc::enumerate_graphs(extended).size() == 1);
    extended.n = 8;
    CHECK(kind_of([&] { orc::enumerate_graphs(extended); }) == ErrorKind::Capacity);
}

TEST_CASE("oracle extremal examples") {
    CHECK(orc::extremal(ExtremalKind::MaxMinimalEdges, 1, 1, 4) == BigInt(4));
    CHECK(orc::extremal(ExtremalKind::MinEdges, 2, 2, 5) == BigInt(3));
    CHECK(orc::extremal(ExtremalKind::MaxEdges, 1, 1, 4) == BigInt(6));
    CHECK(orc::extremal(ExtremalKind::MaxOrderings, 3, 2, 4) == BigInt(8));
    CHECK(orc::extremal(ExtremalKind::MaxAdditionResultEdges, 2, 1, 5) == BigInt(9));
    CHECK_FALSE(orc::extremal(ExtremalKind::MaxEdges, 3, 1, 3).has_value());
    CHECK(kind_of([] { orc::extremal(ExtremalKind::MaxEdges, 1, 1, 7); }) == ErrorKind::Capacity);
}

TEST_CASE("definition-level minimality") {
    CHECK(orc::is_minimal(path_graph(3), 1, 1));
    CHECK_FALSE(orc::is_minimal(complete_graph(3), 1, 1));
    CHECK(orc::is_minimal(build_S(2, 1, 5), 2, 1));
    CHECK_FALSE(orc::is_minimal(path_graph(3), 2, 1));
}

TEST_CASE("oracle linear extensions") {
    CHECK(orc::linear_extensions(empty_graph(3)) == 6);
    CHECK(orc::linear_extensions(complete_graph(4)) == 1);
    CHECK(kind_of([] { orc::linear_extensions(empty_graph(9)); }) == ErrorKind::Capacity);
}

TEST_CASE("minimality criterion equals the definition for all graphs up to n = 6") {
    for (int n = 1; n <= 6; ++n) {
        orc::for_each_graph({n}, [&](const OrderedDag& g) {
            const int x = g.initial_count();
            const int y = g.terminal_count();
            REQUIRE(orc::is_minimal(g, x, y) == is_minimal_xy(g));
            // A mismatched target is never minimal.
            REQUIRE_FALSE(orc::is_minimal(g, x + 1, y));
        });
    }
}

TEST_CASE("minimal graphs: removable paths and forests") {
    for (int n = 1; n <= 6; ++n) {
        orc::EnumerationScope scope{n};
        scope.minimal_only = true;
        orc::for_each_graph(scope, [&](const OrderedDag& g) {
            const auto path = find_removable_path(g);
            // Brute force: does any removable path exist at all?
            bool exists = false;
            for (Vertex v1 = 1; v1 <= n && !exists; ++v1) {
                if (g.out_degree(v1) <= 1) continue;
                for (Vertex next : g.successors(v1)) {
                    Vertex cur = next;
                    while (g.in_degree(cur) == 1 && g.out_degree(cur) == 1) cur = g.successors(cur).front();
                    if (cur != next && g.in_degree(cur) > 1) exists = true;
                }
            }
            REQUIRE(path.has_value() == exists);
            if (path) {
                const OrderedDag h = remove_removable_path(g, *path);
                REQUIRE(h.initial_count() == g.initial_count());
                REQUIRE(h.terminal_count() == g.terminal_count());
                REQUIRE(orc::is_minimal(h, h.initial_count(), h.terminal_count()));
            } else {
                REQUIRE(is_underlying_forest(g));
            }
        });
    }
}

TEST_CASE("closed forms equal exhaustive search") {
    for (ExtremalKind kind : kAllExtremalKinds) {
        for (int x = 1; x <= 3; ++x) {
            for (int y = 1; y <= 3; ++y) {
                for (int n = 1; n <= 6; ++n) {
                    const auto expected = closed_form(kind, x, y, n);
                    if (!expected) continue;
                    CAPTURE(to_string(kind));
                    CAPTURE(x);
                    CAPTURE(y);
                    CAPTURE(n);
                    REQUIRE(orc::extremal(kind, x, y, n) == expected);
                }
            }
        }
    }
}

TEST_CASE("classifier matches maximum minimal graphs") {
    for (int n = 1; n <= 6; ++n) {
        orc::EnumerationScope scope{n};
        scope.minimal_only = true;
        orc::for_each_graph(scope, [&](const OrderedDag& g) {
            const int x = g.initial_count();
            const int y = g.terminal_count();
            const StructureCase c = classify_extremal(g, x, y);
            const auto top = closed_form(ExtremalKind::MaxMinimalEdges, x, y, n);
            REQUIRE(top.has_value());
            const bool is_max = BigInt(g.edge_count()) == *top;
            CAPTURE(n);
            CAPTURE(x);
            CAPTURE(y);
            REQUIRE((c.label != StructureLabel::NotExtremal) == is_max);
            if (is_max) REQUIRE(longest_path_length(g) <= 2);
        });
    }
    // Non-minimal graphs are never labelled.
    orc::for_each_graph({5}, [&](const OrderedDag& g) {
        if (is_minimal_xy(g)) return;
        REQUIRE(classify_extremal(g, g.initial_count(), g.terminal_count()).label == StructureLabel::NotExtremal);
    });
}

TEST_CASE("exact distributions: named values") {
    using orc::OutcomeClass;
    const auto r113 = orc::exact_process_distribution(ProcessKind::Removal, 1, 1, 3);
    REQUIRE(r113.classes.size() == 1);
    CHECK(r113.classes.begin()->first == OutcomeClass{1, 1, 2});
    CHECK(r113.classes.begin()->second == 1);

    const auto r213 = orc::exact_process_distribution(ProcessKind::Removal, 2, 1, 3);
    CHECK(r213.probability_of_profile(2, 1) == Rational(1, 2));

    const auto a113 = orc::exact_process_distribution(ProcessKind::Addition, 1, 1, 3);
    CHECK(a113.expected_edges == Rational(8, 3));
    CHECK(a113.probability_of_profile(1, 1) == 1);

    CHECK(kind_of([] { orc::exact_process_distribution(ProcessKind::Removal, 1, 1, 6); }) == ErrorKind::Capacity);
    CHECK(kind_of([] { orc::exact_process_distribution(ProcessKind::Combined, 1, 1, 4); }) ==
          ErrorKind::ConfigKind);
    CHECK(kind_of([] { orc::exact_rejection_distribution(ProcessKind::Addition, 1, 1, 7); }) ==
          ErrorKind::Capacity);
}

TEST_CASE("permutation and rejection semantics have the same law") {
    for (ProcessKind kind : {ProcessKind::Removal, ProcessKind::Addition}) {
        for (int n = 2; n <= 4; ++n) {
            for (int x = 1; x <= n; ++x) {
                for (int y = 1; y <= n; ++y) {
                    CAPTURE(n);
                    CAPTURE(x);
                    CAPTURE(y);
                    const auto perm = orc::exact_process_distribution(kind, x, y, n);
                    const auto rej = orc::exact_rejection_distribution(kind, x, y, n);
                    REQUIRE(perm.classes == rej.classes);
                    REQUIRE(perm.expected_edges == rej.expected_edges);
                }
            }
        }
    }
    // Addition at n = 5 has 10 pairs: still within both enumerators.
    const auto perm = orc::exact_process_distribution(ProcessKind::Addition, 1, 2, 5);
    const auto rej = orc::exact_rejection_distribution(ProcessKind::Addition, 1, 2, 5);
    CHECK(perm.classes == rej.classes);
}

TEST_CASE("Monte-Carlo marginals match the exact laws") {
    const int trials = 100000;
    int seed_base = 0;
    for (ProcessKind kind : {ProcessKind::Removal, ProcessKind::Addition}) {
        for (auto [x, y] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
            for (int n = 3; n <= 4; ++n) {
                const auto exact = orc::exact_process_distribution(kind, x, y, n);
                const double p = to_double(exact.probability_of_profile(x, y));
                const double mean = to_double(exact.expected_edges);
                ++seed_base;
                for (Semantics sem : {Semantics::PermutationOrder, Semantics::RejectionSampling}) {
                    ProcessConfig cfg;
                    cfg.kind = kind;
                    cfg.x = x;
                    cfg.y = y;
                    cfg.n = n;
                    cfg.semantics = sem;
                    int hits = 0;
                    double edges = 0;
                    double edges_sq = 0;
                    for (int t = 0; t < trials; ++t) {
                        cfg.seed = derive_stream_seed(1000 + seed_base, t);
                        const ProcessOutcome out = run_process(cfg);
                        hits += out.is_target_xy;
                        const double e = double(out.graph.edge_count());
                        edges += e;
                        edges_sq += e * e;
                    }
                    const double freq = hits / double(trials);
                    const double sigma_p = std::sqrt(std::max(p * (1 - p), 1e-12) / trials);
                    const double var = edges_sq / trials - (edges / trials) * (edges / trials);
                    const double sigma_e = std::sqrt(std::max(var, 1e-12) / trials);
                    CAPTURE(to_string(kind));
                    CAPTURE(x);
                    CAPTURE(y);
                    CAPTURE(n);
                    CHECK(std::abs(freq - p) <= 4 * sigma_p);
                    CHECK(std::abs(edges / trials - mean) <= 4 * sigma_e);
                }
            }
        }
    }
}
