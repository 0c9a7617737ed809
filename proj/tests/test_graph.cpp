#include "halo/graph.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace halo;

TEST_CASE("path graphs") {
    const Graph p1 = Graph::path(1);
    CHECK(p1.node_count() == 1);
    CHECK(p1.edges().empty());

    const Graph p3 = Graph::path(3);
    CHECK(p3.edges() == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});

    const Graph p5 = Graph::path(5);
    CHECK(p5.edges() == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}, {4, 5}});

    CHECK_THROWS_AS(Graph::path(0), std::invalid_argument);
    CHECK(p5.is_path());
    CHECK_FALSE(p5.is_cycle());
}

TEST_CASE("cycle graphs") {
    const Graph c3 = Graph::cycle(3);
    CHECK(c3.edges() == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});

    const Graph c2 = Graph::cycle(2);
    CHECK(c2.edges() == std::vector<std::pair<int, int>>{{1, 2}});

    const Graph c4 = Graph::cycle(4);
    CHECK(c4.edges() == std::vector<std::pair<int, int>>{{1, 2}, {1, 4}, {2, 3}, {3, 4}});

    CHECK_THROWS_AS(Graph::cycle(1), std::invalid_argument);
    CHECK_THROWS_AS(Graph::cycle(0), std::invalid_argument);
    CHECK(c3.is_cycle());
    CHECK(c2.is_cycle());
    CHECK_FALSE(c4.is_path());
}

TEST_CASE("graph validation") {
    CHECK_THROWS_AS(Graph(2, {{1, 1}}), std::invalid_argument);          // self-loop
    CHECK_THROWS_AS(Graph(2, {{1, 2}, {2, 1}}), std::invalid_argument);  // duplicate
    CHECK_THROWS_AS(Graph(2, {{1, 3}}), std::invalid_argument);          // out of range
    CHECK_THROWS_AS(Graph(3, {{1, 2}}), std::invalid_argument);          // disconnected
}

TEST_CASE("induced subset connectivity") {
    CHECK_FALSE(is_connected_subset(Graph::path(3), {1, 3}));
    CHECK(is_connected_subset(Graph::cycle(3), {1, 3}));
    CHECK(is_connected_subset(Graph::path(5), {2, 3, 4}));
    CHECK_FALSE(is_connected_subset(Graph::path(3), {}));
    CHECK_THROWS_AS(is_connected_subset(Graph::path(3), {0}), std::invalid_argument);
    CHECK_THROWS_AS(is_connected_subset(Graph::path(3), {4}), std::invalid_argument);
}

TEST_CASE("connectivity properties") {
    const std::vector<Graph> graphs = {Graph::path(5), Graph::cycle(5), Graph::star(5),
                                       Graph::complete(5)};
    for (const auto& g : graphs) {
        for (int v = 1; v <= g.node_count(); ++v) CHECK(is_connected_subset(g, {v}));
        CHECK(is_connected_subset(g, g.all_nodes()));
    }

    // Monotone under adding a node adjacent to the current set.
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph& g = graphs[rng() % graphs.size()];
        NodeSet s{static_cast<int>(rng() % g.node_count()) + 1};
        while (true) {
            std::vector<int> frontier;
            for (int v = 1; v <= g.node_count(); ++v) {
                if (node_set_contains(s, v)) continue;
                for (int u : g.neighbors(v))
                    if (node_set_contains(s, u)) { frontier.push_back(v); break; }
            }
            if (frontier.empty()) break;
            s = make_node_set([&] {
                auto t = s;
                t.push_back(frontier[rng() % frontier.size()]);
                return t;
            }());
            CHECK(is_connected_subset(g, s));
            if (s.size() == static_cast<std::size_t>(g.node_count())) break;
        }
    }
}

TEST_CASE("graph json") {
    const Graph c3 = Graph::cycle(3);
    const auto j = c3.to_json();
    CHECK(j["nodes"] == 3);
    CHECK(j["edges"].size() == 3);
    const Graph back = Graph::from_json(j);
    CHECK(back.edges() == c3.edges());

    const Graph fam = Graph::from_json(nlohmann::json{{"family", "path"}, {"n", 4}});
    CHECK(fam.node_count() == 4);
    CHECK(fam.is_path());
    CHECK(Graph::from_json(nlohmann::json{{"family", "cycle"}, {"n", 2}}).is_cycle());
    CHECK_THROWS_AS(Graph::from_json(nlohmann::json{{"family", "tree"}, {"n", 4}}),
                    std::invalid_argument);
}
