#include <thread>
#include <vector>

#include "cores/decompose.hpp"
#include "cores/oracle.hpp"
#include "doctest.h"
#include "support/support.hpp"

using namespace cores;

namespace {

Graph k4_plus_pendant() {
    return build_graph(
        5, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}}, false);
}

Graph complete_digraph(std::size_t n) {
    std::vector<Edge> arcs;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = 0; v < n; ++v)
            if (u != v) arcs.push_back({u, v});
    return build_graph(n, arcs, true);
}

}  // namespace

TEST_CASE("small undirected cores") {
    const Graph k3 = build_graph(3, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}}, false);
    CHECK(core_decompose(k3, DegreeMode::Undirected).core == std::vector<std::uint32_t>{2, 2, 2});

    const Graph path = build_graph(3, std::vector<Edge>{{0, 1}, {1, 2}}, false);
    CHECK(core_decompose(path, DegreeMode::Undirected).core ==
          std::vector<std::uint32_t>{1, 1, 1});

    // Frozen from the recursive-deletion hand simulation (see test_oracle).
    CHECK(core_decompose(k4_plus_pendant(), DegreeMode::Undirected).core ==
          std::vector<std::uint32_t>{3, 3, 3, 3, 1});
}

TEST_CASE("edgeless and empty graphs") {
    const Graph isolated = build_graph(5, std::vector<Edge>{}, false);
    CHECK(core_decompose(isolated, DegreeMode::Undirected).core ==
          std::vector<std::uint32_t>(5, 0));

    const Graph empty = build_graph(0, std::vector<Edge>{}, false);
    CHECK(core_decompose(empty, DegreeMode::Undirected).core.empty());
    const Graph empty_digraph = build_graph(0, std::vector<Edge>{}, true);
    CHECK(core_decompose(empty_digraph, DegreeMode::InOut).core.empty());
}

TEST_CASE("directed three-cycle under each mode") {
    const Graph g = build_graph(3, std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}}, true);
    CHECK(core_decompose(g, DegreeMode::In).core == std::vector<std::uint32_t>{1, 1, 1});
    CHECK(core_decompose(g, DegreeMode::Out).core == std::vector<std::uint32_t>{1, 1, 1});
    CHECK(core_decompose(g, DegreeMode::InOut).core == std::vector<std::uint32_t>{2, 2, 2});
    CHECK_THROWS_AS(core_decompose(g, DegreeMode::Undirected), UsageError);
}

TEST_CASE("complete digraph reaches the 2n-2 degree bound") {
    const Graph g = complete_digraph(6);
    const CoreAssignment a = core_decompose(g, DegreeMode::InOut);
    CHECK(a.core == std::vector<std::uint32_t>(6, 10));
    CHECK(peel_oracle(g, DegreeMode::InOut).core == a.core);
}

TEST_CASE("disconnected two-core: two disjoint triangles") {
    const Graph g = build_graph(
        6, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}, false);
    const CoreAssignment a = core_decompose(g, DegreeMode::Undirected);
    CHECK(a.core == std::vector<std::uint32_t>(6, 2));
    CHECK(k_core_vertices(a, 2).size() == 6);
}

TEST_CASE("k_core_vertices") {
    const CoreAssignment a = core_decompose(k4_plus_pendant(), DegreeMode::Undirected);
    CHECK(k_core_vertices(a, 3) == std::vector<VertexId>{0, 1, 2, 3});
    CHECK(k_core_vertices(a, 0) == std::vector<VertexId>{0, 1, 2, 3, 4});
    CHECK(k_core_vertices(a, 99).empty());
}

TEST_CASE("k_core_subgraph") {
    const Graph g = k4_plus_pendant();
    const CoreAssignment a = core_decompose(g, DegreeMode::Undirected);

    SUBCASE("3-core is the K4") {
        const InducedSubgraph sub = k_core_subgraph(g, a, 3);
        CHECK(sub.graph.vertex_count() == 4);
        CHECK(sub.graph.line_count() == 6);
        CHECK(sub.original_id == std::vector<VertexId>{0, 1, 2, 3});
        for (VertexId v = 0; v < 4; ++v) CHECK(sub.graph.degree(v, DegreeMode::Undirected) == 3);
    }
    SUBCASE("0-core is the graph itself") {
        const InducedSubgraph sub = k_core_subgraph(g, a, 0);
        CHECK(sub.graph == g);
        CHECK(sub.original_id == std::vector<VertexId>{0, 1, 2, 3, 4});
    }
    SUBCASE("beyond the main core is empty") {
        const InducedSubgraph sub = k_core_subgraph(g, a, 4);
        CHECK(sub.graph.vertex_count() == 0);
        CHECK(sub.graph.line_count() == 0);
    }
    SUBCASE("mismatched assignment is a usage error") {
        CoreAssignment other;
        other.core.assign(3, 0);
        CHECK_THROWS_AS(k_core_subgraph(g, other, 1), UsageError);
    }
}

TEST_CASE("summarize") {
    SUBCASE("single row") {
        CoreAssignment a{{2, 2, 2}, DegreeMode::Undirected};
        const CoreSummary s = summarize(a);
        REQUIRE(s.rows.size() == 1);
        CHECK(s.rows[0].k == 2);
        CHECK(s.rows[0].count == 3);
        CHECK(s.rows[0].percent == doctest::Approx(100.0));
        CHECK(s.rows[0].cumulative == 3);
        CHECK(s.rows[0].cumulative_percent == doctest::Approx(100.0));
    }
    SUBCASE("k4 plus pendant") {
        CoreAssignment a{{3, 3, 3, 3, 1}, DegreeMode::Undirected};
        const CoreSummary s = summarize(a);
        REQUIRE(s.rows.size() == 2);
        CHECK(s.rows[0].k == 3);
        CHECK(s.rows[0].count == 4);
        CHECK(s.rows[0].percent == doctest::Approx(80.0));
        CHECK(s.rows[0].cumulative == 4);
        CHECK(s.rows[0].cumulative_percent == doctest::Approx(80.0));
        CHECK(s.rows[1].k == 1);
        CHECK(s.rows[1].count == 1);
        CHECK(s.rows[1].percent == doctest::Approx(20.0));
        CHECK(s.rows[1].cumulative == 5);
        CHECK(s.rows[1].cumulative_percent == doctest::Approx(100.0));
    }
    SUBCASE("empty") {
        CHECK(summarize(CoreAssignment{}).rows.empty());
    }
    SUBCASE("zero cores appear as a row") {
        CoreAssignment a{{0, 0, 1, 1}, DegreeMode::Undirected};
        const CoreSummary s = summarize(a);
        REQUIRE(s.rows.size() == 2);
        CHECK(s.rows[1].k == 0);
        CHECK(s.rows[1].cumulative == 4);
    }
}

TEST_CASE("engine agrees with the oracle on random graphs") {
    auto rng = testsupport::rng_for(1234);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = trial % 20;
        const double p = (trial % 4 + 1) * 0.2;
        if (trial % 2 == 0) {
            const Graph g = testsupport::random_gnp(n, p, rng);
            CHECK(core_decompose(g, DegreeMode::Undirected).core ==
                  peel_oracle(g, DegreeMode::Undirected).core);
        } else {
            const Graph g = testsupport::random_digraph_gnp(n, p, rng);
            for (DegreeMode mode : {DegreeMode::In, DegreeMode::Out, DegreeMode::InOut})
                CHECK(core_decompose(g, mode).core == peel_oracle(g, mode).core);
        }
    }
}

TEST_CASE("structural properties on random graphs") {
    auto rng = testsupport::rng_for(4321);
    for (int trial = 0; trial < 12; ++trial) {
        const Graph g = testsupport::random_gnp(14, 0.3, rng);
        const CoreAssignment a = core_decompose(g, DegreeMode::Undirected);
        CHECK(testsupport::check_structure(g, a).empty());
    }
    const Graph d = testsupport::random_digraph_gnp(12, 0.25, rng);
    for (DegreeMode mode : {DegreeMode::In, DegreeMode::Out, DegreeMode::InOut})
        CHECK(testsupport::check_structure(d, core_decompose(d, mode)).empty());
}

TEST_CASE("peel order is monotone and the state invariants hold") {
    auto rng = testsupport::rng_for(555);
    for (int trial = 0; trial < 8; ++trial) {
        const Graph g = testsupport::random_gnp(30, 0.2, rng);
        std::vector<std::string> failures;
        const PeelResult result = core_decompose_traced(
            g, DegreeMode::Undirected, testsupport::PeelInvariantChecker(&failures));
        for (const std::string& f : failures) FAIL_CHECK(f);

        REQUIRE(result.order.size() == g.vertex_count());
        for (std::size_t i = 1; i < result.order.size(); ++i)
            CHECK(result.assignment.core[result.order[i]] >=
                  result.assignment.core[result.order[i - 1]]);
    }
}

TEST_CASE("deterministic and safe to run concurrently on one graph") {
    auto rng = testsupport::rng_for(99);
    const Graph g = testsupport::random_gnp(120, 0.1, rng);
    const CoreAssignment reference = core_decompose(g, DegreeMode::Undirected);
    CHECK(core_decompose(g, DegreeMode::Undirected).core == reference.core);

    std::vector<CoreAssignment> results(4);
    std::vector<std::thread> workers;
    for (auto& slot : results)
        workers.emplace_back([&g, &slot] { slot = core_decompose(g, DegreeMode::Undirected); });
    for (auto& w : workers) w.join();
    for (const auto& r : results) CHECK(r.core == reference.core);
}
