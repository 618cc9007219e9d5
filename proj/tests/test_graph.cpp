#include <algorithm>

#include "circsym/circulant.hpp"
#include "circsym/graph.hpp"
#include "doctest.h"

using namespace circsym;

TEST_CASE("neighborhoods") {
    Graph g = build_circulant({10, 1, 4});
    CHECK(g.neighbors(0) == std::vector<int>{1, 4, 6, 9});
    CHECK(g.closed_neighborhood(0) == std::vector<int>{0, 1, 4, 6, 9});

    Graph h = build_circulant({6, 1, 3});
    CHECK(h.neighbors(0) == std::vector<int>{1, 3, 5});
    CHECK(h.degree(0) == 3);

    for (int v = 0; v < g.vertex_count(); ++v) {
        auto closed = g.closed_neighborhood(v);
        CHECK(std::binary_search(closed.begin(), closed.end(), v));
    }
    CHECK_THROWS_AS(g.neighbors(10), invalid_spec_error);
}

TEST_CASE("graph construction rejects bad edges") {
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), invalid_spec_error);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), invalid_spec_error);
    // duplicate edges collapse
    Graph g = Graph::from_edges(3, {{0, 1}, {1, 0}, {1, 2}});
    CHECK(g.edge_count() == 2);
}

TEST_CASE("twin partition") {
    auto part = twin_partition(build_circulant({6, 1, 3}));
    CHECK(part.nontrivial_classes() == std::vector<std::vector<int>>{{0, 2, 4}, {1, 3, 5}});
    CHECK(part.kinds[part.class_of[0]] == TwinKind::Nonadjacent);

    auto k4 = twin_partition(build_circulant({4, 1, 2}));
    REQUIRE(k4.classes.size() == 1);
    CHECK(k4.classes.front() == std::vector<int>{0, 1, 2, 3});
    CHECK(k4.kinds.front() == TwinKind::Adjacent);

    CHECK(twin_partition(build_circulant({7, 1, 2})).twin_free());
}

TEST_CASE("twin relation is an equivalence on sample graphs") {
    for (auto spec : {CirculantSpec{8, 1, 3}, {10, 1, 4}, {12, 1, 5}, {9, 2, 3}}) {
        Graph g = build_circulant(spec);
        auto part = twin_partition(g);
        // classes exactly match pairwise neighborhood comparison
        for (int u = 0; u < g.vertex_count(); ++u)
            for (int v = u + 1; v < g.vertex_count(); ++v) {
                bool same = part.class_of[u] == part.class_of[v];
                bool twins = g.neighbors(u) == g.neighbors(v) ||
                             g.closed_neighborhood(u) == g.closed_neighborhood(v);
                CHECK(same == twins);
            }
        // a vertex with an adjacent twin has no nonadjacent twin
        for (std::size_t c = 0; c < part.classes.size(); ++c)
            if (part.kinds[c] == TwinKind::Adjacent)
                for (int u : part.classes[c])
                    for (int v = 0; v < g.vertex_count(); ++v)
                        if (u != v) CHECK(g.neighbors(u) != g.neighbors(v));
    }
}

TEST_CASE("co-twin pairs") {
    auto pairs = co_twin_pairs(build_circulant({10, 1, 3}));
    CHECK(pairs == std::vector<std::pair<int, int>>{{0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
    CHECK(co_twin_pairs(build_circulant({7, 1, 2})).empty());
    CHECK(co_twin_pairs(build_circulant({4, 1, 2})).empty());
}

TEST_CASE("twin quotient") {
    auto q = twin_quotient(build_circulant({6, 1, 3}));
    CHECK(q.quotient.vertex_count() == 2);
    CHECK(q.quotient.edge_count() == 1);
    CHECK(q.uniform_k == 3);

    q = twin_quotient(build_circulant({12, 1, 5}));
    CHECK(is_cycle(q.quotient));
    CHECK(q.quotient.vertex_count() == 6);
    CHECK(q.uniform_k == 2);

    Graph free = build_circulant({7, 1, 2});
    q = twin_quotient(free);
    CHECK(q.quotient.vertex_count() == free.vertex_count());
    CHECK(q.uniform_k == 1);
    CHECK(twin_partition(q.quotient).twin_free());

    // collapsing never leaves nonadjacent twins behind
    for (auto spec : {CirculantSpec{6, 1, 3}, {8, 1, 3}, {6, 1, 2}, {12, 1, 5}, {4, 1, 2}}) {
        auto part = twin_partition(twin_quotient(build_circulant(spec)).quotient);
        for (std::size_t c = 0; c < part.classes.size(); ++c)
            CHECK(part.kinds[c] != TwinKind::Nonadjacent);
    }
}

TEST_CASE("shape recognitions") {
    CHECK(is_complete(build_circulant({4, 1, 2})));
    CHECK(is_complete(build_circulant({5, 1, 2})));
    CHECK_FALSE(is_complete(build_circulant({6, 1, 3})));
    CHECK(is_complete_bipartite(build_circulant({6, 1, 3}), 3, 3));
    CHECK(is_cycle(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})));
    CHECK(is_path(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}})));
    CHECK_FALSE(is_cycle(Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})));
}

TEST_CASE("exports are stable") {
    Graph g = Graph::from_edges(3, {{1, 2}, {0, 1}}, {"a", "b", "c"});
    CHECK(g.to_dot() == "graph {\n  \"a\";\n  \"b\";\n  \"c\";\n  \"a\" -- \"b\";\n  \"b\" -- \"c\";\n}\n");
    CHECK(g.to_json() == "{\"vertices\":[\"a\",\"b\",\"c\"],\"edges\":[[0,1],[1,2]]}");
}
