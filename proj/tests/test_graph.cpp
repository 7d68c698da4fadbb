#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ggm/graph.hpp"

#include <algorithm>
#include <random>
#include <set>

using ggm::Graph;

namespace {

// checks that ordering is a perfect elimination ordering of g
bool is_perfect_elimination(const Graph& g, const std::vector<int>& ordering) {
    std::vector<int> rank(static_cast<size_t>(g.num_vertices()));
    for (size_t i = 0; i < ordering.size(); ++i) rank[static_cast<size_t>(ordering[i])] = static_cast<int>(i);
    for (int v : ordering) {
        std::vector<int> later;
        for (int u : g.neighbors(v))
            if (rank[static_cast<size_t>(u)] > rank[static_cast<size_t>(v)]) later.push_back(u);
        for (size_t a = 0; a < later.size(); ++a)
            for (size_t b = a + 1; b < later.size(); ++b)
                if (!g.has_edge(later[a], later[b])) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("construction and edge handling") {
    Graph g(4);
    g.add_edge(2, 0);
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(2, 0));
    CHECK(g.num_edges() == 1);
    g.add_edge(0, 2);  // duplicate is a no-op
    CHECK(g.num_edges() == 1);
    CHECK_THROWS(g.add_edge(0, 0));
    CHECK_THROWS(g.add_edge(0, 4));
    CHECK(g.neighbors(0) == std::vector<int>{2});
}

TEST_CASE("standard families") {
    CHECK(ggm::cycle_graph(5).num_edges() == 5);
    CHECK(ggm::path_graph(5).num_edges() == 4);
    CHECK(ggm::complete_graph(5).num_edges() == 10);
    CHECK(ggm::star_graph(5).num_edges() == 4);
    CHECK(ggm::star_graph(5).neighbors(0).size() == 4);
    CHECK_THROWS(ggm::cycle_graph(2));
}

TEST_CASE("chordality of the standard families") {
    CHECK(ggm::is_chordal(ggm::path_graph(6)).chordal);
    CHECK(ggm::is_chordal(ggm::complete_graph(6)).chordal);
    CHECK(ggm::is_chordal(ggm::star_graph(6)).chordal);
    CHECK(ggm::is_chordal(ggm::cycle_graph(3)).chordal);
    for (int n = 4; n <= 9; ++n) {
        auto r = ggm::is_chordal(ggm::cycle_graph(n));
        CHECK_FALSE(r.chordal);
        CHECK_FALSE(r.ordering.has_value());
    }
}

TEST_CASE("chordal certificate is a perfect elimination ordering") {
    for (const Graph& g : {ggm::path_graph(7), ggm::star_graph(7), ggm::complete_graph(5)}) {
        auto r = ggm::is_chordal(g);
        REQUIRE(r.chordal);
        REQUIRE(r.ordering.has_value());
        CHECK(is_perfect_elimination(g, *r.ordering));
    }
}

TEST_CASE("random graphs: verdict matches brute-force certificate checking") {
    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 4 + static_cast<int>(rng() % 5);
        Graph g(n);
        std::uniform_real_distribution<double> coin(0.0, 1.0);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (coin(rng) < 0.45) g.add_edge(i, j);
        auto r = ggm::is_chordal(g);
        if (r.chordal) {
            REQUIRE(r.ordering.has_value());
            CHECK(is_perfect_elimination(g, *r.ordering));
        } else {
            // try every ordering: none may be a perfect elimination ordering
            std::vector<int> perm(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
            bool any = false;
            do {
                if (is_perfect_elimination(g, perm)) any = true;
            } while (!any && std::next_permutation(perm.begin(), perm.end()));
            CHECK_FALSE(any);
        }
    }
}

TEST_CASE("induced subgraph preserves relative order") {
    Graph g = ggm::cycle_graph(5);
    Graph h = ggm::induced_subgraph(g, {0, 1, 2, 3});
    CHECK(h.num_vertices() == 4);
    CHECK(h.has_edge(0, 1));
    CHECK(h.has_edge(2, 3));
    CHECK_FALSE(h.has_edge(0, 3));  // the 4-0 cycle edge went through vertex 4
}

TEST_CASE("clique decomposition covers edges and satisfies the tree identity") {
    for (const Graph& g : {ggm::path_graph(6), ggm::star_graph(6), ggm::complete_graph(4)}) {
        auto tree = ggm::clique_decomposition(g);
        CHECK(tree.tree_edges.size() + 1 == tree.cliques.size());
        CHECK(tree.separators.size() == tree.tree_edges.size());
        std::set<ggm::VertexPair> covered;
        for (const auto& c : tree.cliques) {
            for (size_t a = 0; a < c.size(); ++a)
                for (size_t b = a + 1; b < c.size(); ++b) {
                    CHECK(g.has_edge(c[a], c[b]));  // cliques are cliques
                    covered.insert({std::min(c[a], c[b]), std::max(c[a], c[b])});
                }
        }
        CHECK(covered == g.edges());
        // vertex count identity: sum |C_i| - sum |S_k| = n
        int total = 0;
        for (const auto& c : tree.cliques) total += static_cast<int>(c.size());
        for (const auto& s : tree.separators) total -= static_cast<int>(s.size());
        CHECK(total == g.num_vertices());
    }
    CHECK_THROWS(ggm::clique_decomposition(ggm::cycle_graph(5)));
}

TEST_CASE("model space splits matrix positions") {
    auto ms = ggm::model_space(ggm::cycle_graph(4));
    CHECK(ms.support.size() == 4 + 4);      // diagonal + edges
    CHECK(ms.co_support.size() == 2);       // the two diagonals of the square
    CHECK(ms.support.front() == ggm::VertexPair{0, 0});
    auto total = ms.support.size() + ms.co_support.size();
    CHECK(total == 4 * 5 / 2);
}

TEST_CASE("json round trip and family literals") {
    Graph g = ggm::cycle_graph(6);
    CHECK(ggm::graph_from_json(ggm::graph_to_json(g)) == g);
    CHECK(ggm::parse_graph_spec("cycle:6") == g);
    CHECK(ggm::parse_graph_spec("path:3") == ggm::path_graph(3));
    CHECK(ggm::parse_graph_spec("complete:4") == ggm::complete_graph(4));
    CHECK(ggm::parse_graph_spec("star:5") == ggm::star_graph(5));
    CHECK_THROWS(ggm::parse_graph_spec("cycle:x"));
    CHECK_THROWS(ggm::graph_from_json("{\"n\": 3, \"edges\": [[0, 3]]}"));
}
