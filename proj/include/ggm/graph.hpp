#ifndef GGM_GRAPH_HPP
#define GGM_GRAPH_HPP

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ggm {

using VertexPair = std::pair<int, int>;  // always stored with first <= second

// Simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n) {}
    Graph(int n, std::vector<VertexPair> edges);

    int num_vertices() const { return n_; }
    const std::set<VertexPair>& edges() const { return edges_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    void add_edge(int i, int j);
    bool has_edge(int i, int j) const;
    std::vector<int> neighbors(int v) const;

    bool operator==(const Graph& rhs) const = default;

private:
    int n_ = 0;
    std::set<VertexPair> edges_;
};

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
// Star with center 0 and n-1 leaves.
Graph star_graph(int n);

struct ChordalityResult {
    bool chordal = false;
    // Perfect elimination ordering (the certificate), present iff chordal.
    std::optional<std::vector<int>> ordering;
};

// Maximum cardinality search plus perfect-elimination verification.
ChordalityResult is_chordal(const Graph& g);

// Vertices in keep, relabeled order-preservingly to 0..|keep|-1.
Graph induced_subgraph(const Graph& g, const std::vector<int>& keep);

struct CliqueTree {
    std::vector<std::vector<int>> cliques;
    // separators[k] is the intersection along tree edge tree_edges[k]
    std::vector<std::vector<int>> separators;
    std::vector<std::pair<int, int>> tree_edges;  // indices into cliques
};

// Clique tree of a chordal graph; throws on non-chordal input.
CliqueTree clique_decomposition(const Graph& g);

struct ModelSpace {
    Graph graph;
    std::vector<VertexPair> support;     // diagonal pairs then edges
    std::vector<VertexPair> co_support;  // non-edge off-diagonal pairs
};

ModelSpace model_space(const Graph& g);

// JSON {"n": int, "edges": [[i,j], ...]} or the literal "cycle:N" / "path:N" /
// "complete:N" / "star:N"; a bare path is read as a JSON file.
Graph parse_graph_spec(const std::string& spec);
std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

}  // namespace ggm

#endif
