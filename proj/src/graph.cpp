#include "ggm/graph.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ggm {

Graph::Graph(int n, std::vector<VertexPair> edges) : n_(n) {
    for (auto [i, j] : edges) add_edge(i, j);
}

void Graph::add_edge(int i, int j) {
    if (i == j) throw std::invalid_argument("Graph::add_edge: loops are not allowed");
    if (i < 0 || j < 0 || i >= n_ || j >= n_)
        throw std::out_of_range("Graph::add_edge: vertex out of range");
    edges_.insert({std::min(i, j), std::max(i, j)});
}

bool Graph::has_edge(int i, int j) const {
    return edges_.count({std::min(i, j), std::max(i, j)}) > 0;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (auto [i, j] : edges_) {
        if (i == v) out.push_back(j);
        else if (j == v) out.push_back(i);
    }
    return out;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n must be >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path_graph: n must be >= 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph star_graph(int n) {
    if (n < 2) throw std::invalid_argument("star_graph: n must be >= 2");
    Graph g(n);
    for (int i = 1; i < n; ++i) g.add_edge(0, i);
    return g;
}

ChordalityResult is_chordal(const Graph& g) {
    int n = g.num_vertices();
    if (n <= 3) {
        std::vector<int> order(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
        return {true, order};
    }

    // Maximum cardinality search: repeatedly pick the unnumbered vertex with the
    // most numbered neighbors. mcs[k] is the k-th vertex numbered.
    std::vector<int> weight(static_cast<size_t>(n), 0);
    std::vector<bool> numbered(static_cast<size_t>(n), false);
    std::vector<int> mcs;
    mcs.reserve(static_cast<size_t>(n));
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!numbered[v] && (best == -1 || weight[v] > weight[best])) best = v;
        numbered[best] = true;
        mcs.push_back(best);
        for (int u : g.neighbors(best))
            if (!numbered[u]) ++weight[u];
    }

    // Elimination order is the reverse of the MCS numbering. position[v] = rank
    // in the MCS order; higher rank is eliminated earlier.
    std::vector<int> position(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) position[static_cast<size_t>(mcs[static_cast<size_t>(k)])] = k;

    // Perfect elimination check: for each v, its lower-ranked neighbors minus the
    // highest-ranked one must all be adjacent to that highest-ranked neighbor.
    for (int v = 0; v < n; ++v) {
        std::vector<int> earlier;
        for (int u : g.neighbors(v))
            if (position[static_cast<size_t>(u)] < position[static_cast<size_t>(v)])
                earlier.push_back(u);
        if (earlier.empty()) continue;
        int pivot = *std::max_element(earlier.begin(), earlier.end(), [&](int a, int b) {
            return position[static_cast<size_t>(a)] < position[static_cast<size_t>(b)];
        });
        for (int u : earlier)
            if (u != pivot && !g.has_edge(u, pivot)) return {false, std::nullopt};
    }

    std::vector<int> elim(mcs.rbegin(), mcs.rend());
    return {true, elim};
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    if (keep.empty()) throw std::invalid_argument("induced_subgraph: empty vertex set");
    std::vector<int> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> relabel(static_cast<size_t>(g.num_vertices()), -1);
    for (size_t k = 0; k < sorted.size(); ++k) {
        int v = sorted[k];
        if (v < 0 || v >= g.num_vertices())
            throw std::out_of_range("induced_subgraph: vertex out of range");
        relabel[static_cast<size_t>(v)] = static_cast<int>(k);
    }
    Graph h(static_cast<int>(sorted.size()));
    for (auto [i, j] : g.edges()) {
        int a = relabel[static_cast<size_t>(i)], b = relabel[static_cast<size_t>(j)];
        if (a >= 0 && b >= 0) h.add_edge(a, b);
    }
    return h;
}

CliqueTree clique_decomposition(const Graph& g) {
    auto chordality = is_chordal(g);
    if (!chordality.chordal)
        throw std::invalid_argument("clique_decomposition: graph is not chordal");
    int n = g.num_vertices();

    // MCS rank again (ordering is elimination order = reverse MCS).
    const std::vector<int>& elim = *chordality.ordering;
    std::vector<int> rank(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k)
        rank[static_cast<size_t>(elim[static_cast<size_t>(k)])] = n - 1 - k;

    // Candidate cliques: v together with the neighbors already numbered when v
    // was reached by MCS.
    std::vector<std::vector<int>> candidates;
    for (int k = n - 1; k >= 0; --k) {
        int v = elim[static_cast<size_t>(k)];
        std::vector<int> c = {v};
        for (int u : g.neighbors(v))
            if (rank[static_cast<size_t>(u)] < rank[static_cast<size_t>(v)]) c.push_back(u);
        std::sort(c.begin(), c.end());
        candidates.push_back(std::move(c));
    }

    // Keep only maximal ones (ordered by increasing rank of the defining vertex).
    auto contains = [](const std::vector<int>& big, const std::vector<int>& small) {
        return std::includes(big.begin(), big.end(), small.begin(), small.end());
    };
    CliqueTree tree;
    for (auto& c : candidates) {
        bool dominated = false;
        for (auto& other : candidates)
            if (&other != &c && other.size() > c.size() && contains(other, c)) {
                dominated = true;
                break;
            }
        if (!dominated) tree.cliques.push_back(c);
    }

    // Maximum-weight spanning tree on clique intersections gives the running
    // intersection property; greedy Prim is enough at this scale.
    size_t m = tree.cliques.size();
    std::vector<bool> in_tree(m, false);
    in_tree[0] = true;
    for (size_t added = 1; added < m; ++added) {
        size_t best_i = 0, best_j = 0;
        int best_w = -1;
        for (size_t i = 0; i < m; ++i) {
            if (!in_tree[i]) continue;
            for (size_t j = 0; j < m; ++j) {
                if (in_tree[j]) continue;
                std::vector<int> inter;
                std::set_intersection(tree.cliques[i].begin(), tree.cliques[i].end(),
                                      tree.cliques[j].begin(), tree.cliques[j].end(),
                                      std::back_inserter(inter));
                if (static_cast<int>(inter.size()) > best_w) {
                    best_w = static_cast<int>(inter.size());
                    best_i = i;
                    best_j = j;
                }
            }
        }
        in_tree[best_j] = true;
        std::vector<int> sep;
        std::set_intersection(tree.cliques[best_i].begin(), tree.cliques[best_i].end(),
                              tree.cliques[best_j].begin(), tree.cliques[best_j].end(),
                              std::back_inserter(sep));
        tree.tree_edges.emplace_back(static_cast<int>(best_i), static_cast<int>(best_j));
        tree.separators.push_back(std::move(sep));
    }
    return tree;
}

ModelSpace model_space(const Graph& g) {
    ModelSpace ms;
    ms.graph = g;
    for (int i = 0; i < g.num_vertices(); ++i) ms.support.push_back({i, i});
    for (auto e : g.edges()) ms.support.push_back(e);
    for (int i = 0; i < g.num_vertices(); ++i)
        for (int j = i + 1; j < g.num_vertices(); ++j)
            if (!g.has_edge(i, j)) ms.co_support.push_back({i, j});
    return ms;
}

std::string graph_to_json(const Graph& g) {
    nlohmann::ordered_json j;
    j["n"] = g.num_vertices();
    j["edges"] = nlohmann::json::array();
    for (auto [a, b] : g.edges()) j["edges"].push_back({a, b});
    return j.dump();
}

Graph graph_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Graph g(j.at("n").get<int>());
    for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    return g;
}

Graph parse_graph_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        std::string kind = spec.substr(0, colon);
        int n = std::stoi(spec.substr(colon + 1));
        if (kind == "cycle") return cycle_graph(n);
        if (kind == "path") return path_graph(n);
        if (kind == "complete") return complete_graph(n);
        if (kind == "star") return star_graph(n);
        throw std::invalid_argument("unknown graph family: " + kind);
    }
    std::ifstream in(spec);
    if (!in) throw std::invalid_argument("cannot open graph file: " + spec);
    std::stringstream buf;
    buf << in.rdbuf();
    return graph_from_json(buf.str());
}

}  // namespace ggm
