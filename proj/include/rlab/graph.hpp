#ifndef RLAB_GRAPH_HPP
#define RLAB_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rlab {

using VertexSet = std::vector<int>;  // sorted, distinct, in range

/// Finite simple undirected graph with sorted adjacency lists and
/// optional per-vertex class labels (1-based; 0 = unlabeled).
/// Immutable after construction; all operations on it are pure.
class Graph {
public:
    Graph() = default;

    // Edges may arrive in any order/orientation; duplicates and loops are rejected.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
    static Graph from_adjacency(std::vector<std::vector<int>> adjacency);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    std::int64_t edge_count() const { return edge_count_; }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    bool has_edge(int u, int v) const;

    bool has_labels() const { return !labels_.empty(); }
    int label(int v) const { return labels_.empty() ? 0 : labels_.at(v); }
    const std::vector<int>& labels() const { return labels_; }
    Graph with_labels(std::vector<int> labels) const;

    std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

private:
    std::vector<std::vector<int>> adj_;
    std::vector<int> labels_;
    std::int64_t edge_count_ = 0;
};

int min_degree(const Graph& g);
int max_degree(const Graph& g);
bool is_regular(const Graph& g);

/// BFS distances from source; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int source);
/// Distance between two vertices, or nullopt if disconnected.
std::optional<int> distance(const Graph& g, int u, int v);
/// Connected components as sorted vertex sets.
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

/// Induced subgraph on the given vertices plus the map back: result
/// vertex i corresponds to original vertex map[i].
struct InducedSubgraph {
    Graph graph;
    std::vector<int> map;
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices);

/// Ball of radius r around v: induced subgraph on vertices at distance
/// at most r; vertex 0 of the result is v (BFS order).
InducedSubgraph ball(const Graph& g, int v, int r);

/// Maximal set of vertices with pairwise distance >= r+1, greedy by
/// ascending vertex index. Deterministic.
VertexSet r_apart_greedy(const Graph& g, int r);

/// Maximum size of an r-apart set, exact (branch and bound on the
/// r-th power graph). Throws InstanceTooLarge above the alpha cap.
int r_apart_exact(const Graph& g, int r);

/// Shortest cycle length; nullopt for forests.
std::optional<int> girth(const Graph& g);

struct OddGirthResult {
    std::optional<int> length;       // nullopt iff bipartite
    std::vector<int> two_coloring;   // per-vertex 0/1 when bipartite, else empty
};
/// Shortest odd cycle; bipartite graphs report a two-coloring certificate.
OddGirthResult odd_girth(const Graph& g);

/// Shortest retracting-free closed walk through v: no immediate
/// reversal at any step, including across the closure point (the walk
/// v w ... x v needs x != w). Nullopt if v lies in a tree component.
std::optional<int> retracting_free_girth(const Graph& g, int v);

/// Lengths k <= cap for which v has a retracting-free closed walk of
/// exactly length k, as a bitmask vector (index k set iff achievable).
std::vector<bool> retracting_free_lengths(const Graph& g, int v, int cap);

/// Smallest k <= cap such that every vertex has a retracting-free
/// closed walk of exactly length k; nullopt if none found within cap.
/// The lcm of the per-vertex shortest lengths tightens the cap when it
/// is smaller.
std::optional<int> universal_girth(const Graph& g, int cap);

// Standard test-bench constructions.
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph star_graph(int leaves);
Graph petersen_graph();
Graph prism_graph(int n);  // circular ladder: cycle C_n times an edge

} // namespace rlab

#endif
