#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "csf/graph.hpp"

using namespace csf;

TEST_CASE("base graphs") {
    CHECK(clique(3).edge_count() == 3);
    CHECK(path_graph(4).edge_count() == 3);
    CHECK(cycle(4).edge_count() == 4);
    CHECK(cycle(2).edge_count() == 1);  // realized as a single edge
    CHECK(clique(1).edge_count() == 0);
    CHECK_THROWS_AS(clique(0), std::invalid_argument);
    CHECK_THROWS_AS(cycle(1), std::invalid_argument);
    CHECK_THROWS_AS(path_graph(0), std::invalid_argument);
}

TEST_CASE("graph invariants") {
    Graph g(3);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(1, 0), std::invalid_argument);  // duplicate
    CHECK_THROWS_AS(g.add_edge(0, 3), std::out_of_range);
    CHECK(g.has_edge(1, 0));
    CHECK(g.neighbors(0) == std::vector<int>{1});
    CHECK(g.canonical_key() == "3:0-1");
}

TEST_CASE("merge_vertices guards the simple-graph invariant") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    Graph merged = merge_vertices(g, 0, 3);  // path ends, no shared neighbor
    CHECK(merged.order() == 3);
    CHECK(merged.edge_count() == 3);  // triangle
    CHECK_THROWS_AS(merge_vertices(g, 0, 1), std::invalid_argument);  // adjacent
    Graph h(3);
    h.add_edge(0, 1);
    h.add_edge(1, 2);
    CHECK_THROWS_AS(merge_vertices(h, 0, 2), std::invalid_argument);  // common neighbor
}

TEST_CASE("path_conjoin orders and identification") {
    Graph p2 = path_conjoin(RootedGraph(Graph(1), 0), RootedGraph(Graph(1), 0), 1);
    CHECK(p2 == path_graph(2));

    Graph big = path_conjoin(rooted_clique(4), rooted_cycle(4), 2);
    CHECK(big.order() == 9);
    CHECK(big.edge_count() == 12);

    Graph glued = path_conjoin(rooted_clique(2), rooted_clique(2), 0);
    CHECK(glued.order() == 3);
    CHECK(glued.edge_count() == 2);
    CHECK(isomorphic(glued, path_graph(3)));

    CHECK_THROWS_AS(path_conjoin(rooted_clique(2), rooted_clique(2), -1),
                    std::invalid_argument);
}

TEST_CASE("tailed graphs") {
    RootedGraph lolli = tailed(rooted_clique(3), 1);
    CHECK(lolli.graph.order() == 4);
    CHECK(lolli.graph.degree(lolli.root) == 1);  // root is the free end
    CHECK(isomorphic(lolli.graph, lollipop(3, 1)));
    RootedGraph same = tailed(rooted_clique(3), 0);
    CHECK(same.graph == clique(3));
    CHECK(isomorphic(tailed(RootedGraph(Graph(1), 0), 5).graph, path_graph(6)));
}

TEST_CASE("spider constructions") {
    CHECK(isomorphic(spider({1, 1, 1}), Graph([] {
              Graph star(4);
              star.add_edge(0, 1);
              star.add_edge(0, 2);
              star.add_edge(0, 3);
              return star;
          }())));
    std::vector<RootedGraph> singles(3, RootedGraph(Graph(1), 0));
    CHECK(isomorphic(spider_conjoin({2, 1, 1}, singles), spider({2, 1, 1})));
    // two-legged spider conjoin equals path conjoin
    std::vector<RootedGraph> pair_nodes{rooted_clique(3), rooted_cycle(4)};
    CHECK(isomorphic(spider_conjoin({2, 1}, pair_nodes),
                     path_conjoin(rooted_clique(3), rooted_cycle(4), 3)));
    CHECK_THROWS_AS(spider_conjoin({1, 1}, singles), std::invalid_argument);
    // zero-length leg glues the node root onto the center
    RootedGraph pine = spider_conjoin_rooted({0, 1, 2}, {rooted_clique(3),
                                                         RootedGraph(Graph(1), 0),
                                                         RootedGraph(Graph(1), 0)});
    CHECK(pine.graph.order() == 6);
    CHECK(pine.root == 0);  // merged with the clique root
    CHECK(isomorphic(pine.graph, pineapple(1, 2, 3)));
}

TEST_CASE("chain constructions reproduce the named families") {
    CHECK(isomorphic(kchain({3, 7}), [] {
        Graph g = chain_conjoin({0}, RootedGraph(clique(3), 2), {}, rooted_clique(7));
        return g;
    }()));
    CHECK(kchain({3, 7}).order() == 9);
    CHECK(kchain({3, 7}).edge_count() == 24);
    CHECK(kchain({5}) == clique(5));
    CHECK(isomorphic(kchain({2, 2}), path_graph(3)));
    CHECK_THROWS_AS(kchain({3, 1}), std::invalid_argument);

    // C^{gh}(G, K_2, H) is a path-conjoined graph with a longer bridge
    Graph via_chain = chain_conjoin({1, 1}, rooted_clique(3),
                                    {DoubleRootedGraph(clique(2), 0, 1)}, rooted_cycle(4));
    CHECK(isomorphic(via_chain, path_conjoin(rooted_clique(3), rooted_cycle(4), 3)));

    CHECK(isomorphic(lollipop(3, 1), tadpole(3, 1)));
    CHECK(isomorphic(chain_conjoin({2}, rooted_clique(4), {}, RootedGraph(Graph(1), 0)),
                     lollipop(4, 2)));
    CHECK(isomorphic(chain_conjoin({2}, rooted_cycle(5), {}, RootedGraph(Graph(1), 0)),
                     tadpole(5, 2)));
    CHECK(hat(1, 4, 1).order() == 6);
    CHECK(isomorphic(hat_chain({4}, {1, 1}), hat(1, 4, 1)));
    CHECK(hat_chain({4, 4}, {0, 1, 0}).order() == 8);
    CHECK(kayak_paddle(3, 4, 2).order() == 8);
    CHECK_THROWS_AS(hat_chain({4}, {1}), std::invalid_argument);
    CHECK_THROWS_AS(kayak_paddle(2, 3, 1), std::invalid_argument);
}

TEST_CASE("conjoin order formulas on randomized parameters") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> size(1, 4);
    std::uniform_int_distribution<int> len(0, 3);
    auto random_node = [&] {
        int n = size(rng);
        return RootedGraph(n == 1 ? Graph(1) : clique(n), 0);
    };
    for (int trial = 0; trial < 30; ++trial) {
        RootedGraph g = random_node(), h = random_node();
        int k = len(rng);
        CHECK(path_conjoin(g, h, k).order() == g.graph.order() + h.graph.order() + k - 1);

        int legs = 1 + len(rng);
        std::vector<int> tau;
        std::vector<RootedGraph> nodes;
        int total = 0, taus = 0;
        for (int i = 0; i < legs; ++i) {
            nodes.push_back(random_node());
            tau.push_back(len(rng));
            total += nodes.back().graph.order();
            taus += tau.back();
        }
        CHECK(spider_conjoin(tau, nodes).order() == total + taus - legs + 1);

        if (legs >= 2) {
            std::vector<DoubleRootedGraph> middle;
            for (int i = 0; i + 2 < legs; ++i) {
                int n = 2 + len(rng);
                middle.emplace_back(clique(n), 0, n - 1);
            }
            std::vector<int> links;
            int link_total = 0, node_total = nodes.front().graph.order() +
                                             nodes.back().graph.order();
            for (const auto& mid : middle) node_total += mid.graph.order();
            for (size_t i = 0; i < middle.size() + 1; ++i) {
                links.push_back(len(rng));
                link_total += links.back();
            }
            Graph chain = chain_conjoin(links, nodes.front(), middle, nodes.back());
            CHECK(chain.order() ==
                  node_total + link_total - static_cast<int>(links.size()));
        }
    }
}

TEST_CASE("isomorphism brute force") {
    CHECK(isomorphic(path_graph(4), [] {
        Graph g(4);
        g.add_edge(2, 0);
        g.add_edge(0, 3);
        g.add_edge(3, 1);
        return g;
    }()));
    CHECK_FALSE(isomorphic(path_graph(4), cycle(4)));
    CHECK_FALSE(isomorphic(clique(3), path_graph(3)));
    // same degree sequence, different graphs
    Graph a = cycle(6);
    Graph b = cycle(3).disjoint_union(cycle(3));
    CHECK_FALSE(isomorphic(a, b));
}
