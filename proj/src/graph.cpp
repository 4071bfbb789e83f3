#include "rlab/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "rlab/caps.hpp"
#include "rlab/errors.hpp"

namespace rlab {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw InputError("vertex count must be non-negative");
    Graph g;
    g.adj_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InputError("edge endpoint out of range: " + std::to_string(u) + " " +
                             std::to_string(v));
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
        auto& nb = g.adj_[v];
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw InputError("duplicate edge at vertex " + std::to_string(v));
    }
    g.edge_count_ = static_cast<std::int64_t>(edges.size());
    return g;
}

Graph Graph::from_adjacency(std::vector<std::vector<int>> adjacency) {
    const int n = static_cast<int>(adjacency.size());
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v : adjacency[u]) {
            if (v < 0 || v >= n) throw InputError("neighbor index out of range");
            if (u < v) edges.emplace_back(u, v);
        }
    Graph g = from_edges(n, edges);
    // from_edges validates symmetry implicitly: if the input was not
    // symmetric the reconstructed degree sums would disagree.
    for (int u = 0; u < n; ++u) {
        std::sort(adjacency[u].begin(), adjacency[u].end());
        if (adjacency[u] != g.adj_[u]) throw InputError("adjacency lists are not symmetric");
    }
    return g;
}

bool Graph::has_edge(int u, int v) const {
    const auto& nb = adj_.at(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

Graph Graph::with_labels(std::vector<int> labels) const {
    if (static_cast<int>(labels.size()) != vertex_count())
        throw InputError("label vector size mismatch");
    Graph g = *this;
    g.labels_ = std::move(labels);
    return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

int min_degree(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        best = v == 0 ? g.degree(v) : std::min(best, g.degree(v));
    return best;
}

int max_degree(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
    return best;
}

bool is_regular(const Graph& g) {
    return g.vertex_count() == 0 || min_degree(g) == max_degree(g);
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    if (source < 0 || source >= g.vertex_count()) throw InputError("bfs source out of range");
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<int> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    return dist;
}

std::optional<int> distance(const Graph& g, int u, int v) {
    auto dist = bfs_distances(g, u);
    if (v < 0 || v >= g.vertex_count()) throw InputError("distance target out of range");
    if (dist[v] < 0) return std::nullopt;
    return dist[v];
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    std::vector<bool> seen(g.vertex_count(), false);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (seen[s]) continue;
        VertexSet comp;
        std::queue<int> q;
        q.push(s);
        seen[s] = true;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comp.push_back(u);
            for (int w : g.neighbors(u))
                if (!seen[w]) {
                    seen[w] = true;
                    q.push(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices) {
    std::vector<int> position(g.vertex_count(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= g.vertex_count()) throw InputError("subset vertex out of range");
        if (position[v] >= 0) throw InputError("subset vertex repeated");
        position[v] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (int w : g.neighbors(vertices[i]))
            if (position[w] > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), position[w]);
    InducedSubgraph out;
    out.graph = Graph::from_edges(static_cast<int>(vertices.size()), edges);
    out.map = vertices;
    if (g.has_labels()) {
        std::vector<int> labels(vertices.size());
        for (std::size_t i = 0; i < vertices.size(); ++i) labels[i] = g.label(vertices[i]);
        out.graph = out.graph.with_labels(std::move(labels));
    }
    return out;
}

InducedSubgraph ball(const Graph& g, int v, int r) {
    if (v < 0 || v >= g.vertex_count()) throw InputError("ball center out of range");
    if (r < 0) throw InputError("ball radius must be >= 0");
    // BFS order keeps the center at index 0.
    std::vector<int> dist(g.vertex_count(), -1);
    std::vector<int> order;
    std::queue<int> q;
    dist[v] = 0;
    q.push(v);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        order.push_back(u);
        if (dist[u] == r) continue;
        for (int w : g.neighbors(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    std::vector<int> position(g.vertex_count(), -1);
    for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int w : g.neighbors(order[i]))
            if (position[w] > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), position[w]);
    InducedSubgraph out;
    out.graph = Graph::from_edges(static_cast<int>(order.size()), edges);
    out.map = order;
    if (g.has_labels()) {
        std::vector<int> labels(order.size());
        for (std::size_t i = 0; i < order.size(); ++i) labels[i] = g.label(order[i]);
        out.graph = out.graph.with_labels(std::move(labels));
    }
    return out;
}

VertexSet r_apart_greedy(const Graph& g, int r) {
    if (r < 1) throw InputError("r-apart needs r >= 1");
    VertexSet chosen;
    std::vector<bool> blocked(g.vertex_count(), false);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (blocked[v]) continue;
        chosen.push_back(v);
        // Block everything within distance r of v.
        std::vector<int> dist(g.vertex_count(), -1);
        std::queue<int> q;
        dist[v] = 0;
        q.push(v);
        blocked[v] = true;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            if (dist[u] == r) continue;
            for (int w : g.neighbors(u))
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    blocked[w] = true;
                    q.push(w);
                }
        }
    }
    return chosen;
}

namespace {

// Exact maximum independent set on a bitmask graph, n <= 64.
// Degree-1 reduction plus max-degree branching.
int mis_bitmask(const std::vector<std::uint64_t>& nbr, std::uint64_t candidates) {
    if (!candidates) return 0;
    // Take isolated and degree-<=1 vertices greedily; always safe.
    std::uint64_t rest = candidates;
    while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        std::uint64_t livenbr = nbr[v] & candidates;
        int deg = std::popcount(livenbr);
        if (deg == 0)
            return 1 + mis_bitmask(nbr, candidates & ~(1ull << v));
        if (deg == 1)
            return 1 + mis_bitmask(nbr, candidates & ~(1ull << v) & ~livenbr);
    }
    // Branch on a max-degree vertex: either exclude it or take it.
    int pick = -1, best_deg = -1;
    std::uint64_t scan = candidates;
    while (scan) {
        int v = std::countr_zero(scan);
        scan &= scan - 1;
        int deg = std::popcount(nbr[v] & candidates);
        if (deg > best_deg) {
            best_deg = deg;
            pick = v;
        }
    }
    int without = mis_bitmask(nbr, candidates & ~(1ull << pick));
    int with = 1 + mis_bitmask(nbr, candidates & ~(1ull << pick) & ~nbr[pick]);
    return std::max(without, with);
}

} // namespace

int r_apart_exact(const Graph& g, int r) {
    if (r < 1) throw InputError("r-apart needs r >= 1");
    const int n = g.vertex_count();
    if (n > Caps::get().exact_alpha || n > 64)
        throw InstanceTooLarge("exact r-apart capped at " +
                               std::to_string(std::min<int>(Caps::get().exact_alpha, 64)) +
                               " vertices");
    // Independence number of the r-th power graph.
    std::vector<std::uint64_t> nbr(n, 0);
    for (int v = 0; v < n; ++v) {
        auto dist = bfs_distances(g, v);
        for (int u = 0; u < n; ++u)
            if (u != v && dist[u] >= 0 && dist[u] <= r) nbr[v] |= 1ull << u;
    }
    std::uint64_t all = n == 64 ? ~0ull : ((1ull << n) - 1);
    return mis_bitmask(nbr, all);
}

std::optional<int> girth(const Graph& g) {
    int best = -1;
    for (int s = 0; s < g.vertex_count(); ++s) {
        std::vector<int> dist(g.vertex_count(), -1), parent(g.vertex_count(), -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            if (best >= 0 && 2 * dist[u] >= best) continue;
            for (int w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push(w);
                } else if (w != parent[u]) {
                    int cand = dist[u] + dist[w] + 1;
                    if (best < 0 || cand < best) best = cand;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

OddGirthResult odd_girth(const Graph& g) {
    OddGirthResult out;
    // Closed odd walks detected as same-level BFS edges; the shortest
    // odd closed walk is the shortest odd cycle.
    int best = -1;
    for (int s = 0; s < g.vertex_count(); ++s) {
        auto dist = bfs_distances(g, s);
        for (int u = 0; u < g.vertex_count(); ++u) {
            if (dist[u] < 0) continue;
            for (int w : g.neighbors(u)) {
                if (w > u && dist[w] == dist[u]) {
                    int cand = dist[u] + dist[w] + 1;
                    if (best < 0 || cand < best) best = cand;
                }
            }
        }
    }
    if (best >= 0) {
        out.length = best;
        return out;
    }
    // Bipartite: produce the two-coloring certificate per component.
    out.two_coloring.assign(g.vertex_count(), -1);
    for (const auto& comp : components(g)) {
        auto dist = bfs_distances(g, comp.front());
        for (int v : comp) out.two_coloring[v] = dist[v] % 2;
    }
    return out;
}

namespace {

// Directed edge ids: edge (u -> w) indexed by position of w in adj(u).
struct DirectedEdges {
    std::vector<int> offset;               // per-vertex start into ids
    std::vector<std::pair<int, int>> ends; // id -> (from, to)
    int count = 0;

    explicit DirectedEdges(const Graph& g) {
        offset.assign(g.vertex_count() + 1, 0);
        for (int v = 0; v < g.vertex_count(); ++v)
            offset[v + 1] = offset[v] + g.degree(v);
        count = offset[g.vertex_count()];
        ends.resize(count);
        for (int v = 0; v < g.vertex_count(); ++v)
            for (int i = 0; i < g.degree(v); ++i)
                ends[offset[v] + i] = {v, g.neighbors(v)[i]};
    }

    int id(const Graph& g, int u, int w) const {
        const auto& nb = g.neighbors(u);
        auto it = std::lower_bound(nb.begin(), nb.end(), w);
        return offset[u] + static_cast<int>(it - nb.begin());
    }
};

} // namespace

std::optional<int> retracting_free_girth(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) throw InputError("vertex out of range");
    DirectedEdges de(g);
    int best = -1;
    // One BFS over non-backtracking edge states per first step, so the
    // wraparound condition (last vertex != second vertex) can be checked.
    for (int w : g.neighbors(v)) {
        std::vector<int> dist(de.count, -1);
        std::queue<int> q;
        int start = de.id(g, v, w);
        dist[start] = 1;
        q.push(start);
        while (!q.empty()) {
            int e = q.front();
            q.pop();
            auto [a, b] = de.ends[e];
            if (best >= 0 && dist[e] >= best) continue;
            for (int c : g.neighbors(b)) {
                if (c == a) continue;  // no immediate reversal
                int f = de.id(g, b, c);
                if (dist[f] >= 0) continue;
                dist[f] = dist[e] + 1;
                if (c == v && b != w) {
                    // Closes at v; entry vertex b differs from the first
                    // step target w, so the walk is retracting-free at v.
                    if (best < 0 || dist[f] < best) best = dist[f];
                }
                q.push(f);
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

std::vector<bool> retracting_free_lengths(const Graph& g, int v, int cap) {
    if (v < 0 || v >= g.vertex_count()) throw InputError("vertex out of range");
    if (cap < 0) throw InputError("cap must be >= 0");
    DirectedEdges de(g);
    std::vector<bool> achievable(cap + 1, false);
    const std::size_t words = (de.count + 63) / 64;
    std::vector<std::uint64_t> cur(words), next(words);
    for (int w : g.neighbors(v)) {
        std::fill(cur.begin(), cur.end(), 0);
        int start = de.id(g, v, w);
        cur[start / 64] |= 1ull << (start % 64);
        for (int len = 1; len <= cap; ++len) {
            if (len >= 2) {
                // A state (x -> v) at length len closes a walk; wraparound
                // requires x != w.
                for (int x : g.neighbors(v)) {
                    if (x == w) continue;
                    int e = de.id(g, x, v);
                    if (cur[e / 64] >> (e % 64) & 1ull) {
                        achievable[len] = true;
                        break;
                    }
                }
            }
            if (len == cap) break;
            std::fill(next.begin(), next.end(), 0);
            for (std::size_t word = 0; word < words; ++word) {
                std::uint64_t bits = cur[word];
                while (bits) {
                    int e = static_cast<int>(word * 64) + std::countr_zero(bits);
                    bits &= bits - 1;
                    auto [a, b] = de.ends[e];
                    for (int c : g.neighbors(b)) {
                        if (c == a) continue;
                        int f = de.id(g, b, c);
                        next[f / 64] |= 1ull << (f % 64);
                    }
                }
            }
            cur.swap(next);
        }
    }
    return achievable;
}

std::optional<int> universal_girth(const Graph& g, int cap) {
    if (cap < 3) throw InputError("universal girth cap must be >= 3");
    const int n = g.vertex_count();
    if (n == 0) return std::nullopt;
    // The lcm of per-vertex shortest lengths is always achievable by
    // walk repetition, so it tightens the cap when smaller.
    long long lcm = 1;
    bool lcm_ok = true;
    for (int v = 0; v < n; ++v) {
        auto gv = retracting_free_girth(g, v);
        if (!gv) return std::nullopt;  // tree vertex: no length ever works
        if (lcm_ok) {
            lcm = std::lcm(lcm, static_cast<long long>(*gv));
            if (lcm > cap) lcm_ok = false;
        }
    }
    const int effective_cap = lcm_ok ? std::min<long long>(cap, lcm) : cap;
    std::vector<bool> common(effective_cap + 1, true);
    for (int v = 0; v < n; ++v) {
        auto lengths = retracting_free_lengths(g, v, effective_cap);
        bool any = false;
        for (int k = 0; k <= effective_cap; ++k) {
            common[k] = common[k] && lengths[k];
            any = any || common[k];
        }
        if (!any) return std::nullopt;
    }
    for (int k = 3; k <= effective_cap; ++k)
        if (common[k]) return k;
    return std::nullopt;
}

Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    if (n == 2) edges = {{0, 1}};
    if (n == 1) edges = {};
    return Graph::from_edges(n, edges);
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return Graph::from_edges(a + b, edges);
}

Graph star_graph(int leaves) { return complete_bipartite(1, leaves); }

Graph petersen_graph() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);        // outer cycle
        edges.emplace_back(5 + i, 5 + (i + 2) % 5); // inner pentagram
        edges.emplace_back(i, 5 + i);              // spokes
    }
    return Graph::from_edges(10, edges);
}

Graph prism_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
        edges.emplace_back(n + i, n + (i + 1) % n);
        edges.emplace_back(i, n + i);
    }
    return Graph::from_edges(2 * n, edges);
}

} // namespace rlab
