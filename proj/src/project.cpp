#include "rlab/project.hpp"

#include <algorithm>

#include "rlab/caps.hpp"
#include "rlab/errors.hpp"

namespace rlab {

namespace {

struct Searcher {
    const Graph& host;
    const TypedTreeBall& ball;
    const std::vector<std::vector<char>>& member;  // [class][host vertex]
    std::vector<std::vector<int>> tree_children;   // per tree vertex
    std::vector<int> tree_parent;
    std::vector<int> map;       // tree vertex -> host vertex, -1 unassigned
    std::int64_t budget;
    std::int64_t explored = 0;
    bool exhausted_budget = false;

    Searcher(const Graph& g, const TypedTreeBall& b,
             const std::vector<std::vector<char>>& mem, std::int64_t node_budget)
        : host(g), ball(b), member(mem), budget(node_budget) {
        const int n = ball.graph.vertex_count();
        tree_children.resize(n);
        tree_parent.assign(n, -1);
        for (int v = 0; v < n; ++v)
            for (int w : ball.graph.neighbors(v))
                if (w > v) {
                    tree_children[v].push_back(w);
                    tree_parent[w] = v;
                }
        map.assign(n, -1);
    }

    // Assign the children of tree vertex x, then move to the next tree
    // vertex in breadth-first order. greedy = first feasible choice only.
    bool place(int x, bool greedy, int* witness) {
        if (x == ball.graph.vertex_count()) return true;
        return assign_child(x, 0, greedy, witness);
    }

    bool assign_child(int x, std::size_t child_index, bool greedy, int* witness) {
        const auto& kids = tree_children[x];
        if (child_index == kids.size()) return place(x + 1, greedy, witness);
        const int c = kids[child_index];
        const int cls = ball.graph.label(c) - 1;
        const int hx = map[x];
        const int parent_image = tree_parent[x] >= 0 ? map[tree_parent[x]] : -1;
        bool any_candidate = false;
        for (int y : host.neighbors(hx)) {
            if (!member[cls][y]) continue;
            if (y == parent_image) continue;  // star injectivity vs the parent edge
            bool sibling_clash = false;
            for (std::size_t k = 0; k < child_index; ++k)
                if (map[kids[k]] == y) {
                    sibling_clash = true;
                    break;
                }
            if (sibling_clash) continue;
            any_candidate = true;
            if (++explored > budget) {
                exhausted_budget = true;
                return false;
            }
            map[c] = y;
            if (assign_child(x, child_index + 1, greedy, witness)) return true;
            map[c] = -1;
            if (greedy || exhausted_budget) break;
        }
        if (!any_candidate && witness && *witness < 0) *witness = x;
        return false;
    }
};

} // namespace

Projection subuniversal_project(const Graph& g, const DegreeMatrix& d,
                                const std::vector<VertexSet>& subsets, int start,
                                int start_class, int r, bool backtracking,
                                std::int64_t node_budget) {
    require_valid(d);
    if (static_cast<int>(subsets.size()) != d.order())
        throw InputError("need one subset per degree-matrix row");
    if (start < 0 || start >= g.vertex_count()) throw InputError("start vertex out of range");
    if (start_class < 0 || start_class >= d.order()) throw InputError("start class out of range");
    if (node_budget <= 0) node_budget = Caps::get().backtrack_nodes;

    std::vector<std::vector<char>> member(d.order(), std::vector<char>(g.vertex_count(), 0));
    for (int i = 0; i < d.order(); ++i)
        for (int v : subsets[i]) {
            if (v < 0 || v >= g.vertex_count()) throw InputError("subset vertex out of range");
            member[i][v] = 1;
        }
    if (!member[start_class][start])
        throw HypothesisError("start vertex is not in the subset of its class");

    Projection out;
    out.ball = tree_ball(d, start_class, r);
    Searcher s(g, out.ball, member, node_budget);
    s.map[0] = start;
    int witness = -1;
    bool ok = s.place(0, !backtracking, &witness);
    out.nodes_explored = s.explored;
    if (ok) {
        out.status = ProjectStatus::Success;
        out.map = std::move(s.map);
    } else if (s.exhausted_budget) {
        out.status = ProjectStatus::Budget;
    } else if (backtracking) {
        out.status = ProjectStatus::Refuted;
    } else {
        out.status = ProjectStatus::Stuck;
        out.witness = witness;
    }
    return out;
}

} // namespace rlab
