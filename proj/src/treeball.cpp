#include "rlab/treeball.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>

#include "rlab/caps.hpp"
#include "rlab/errors.hpp"

namespace rlab {

namespace {

struct BallBuilder {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> labels;  // 1-based classes
    std::vector<int> depth;
    std::int64_t cap;

    explicit BallBuilder(std::int64_t cap_in) : cap(cap_in) {}

    int add_vertex(int cls1, int dep) {
        if (static_cast<std::int64_t>(labels.size()) >= cap)
            throw InstanceTooLarge("ball exceeds the vertex cap of " + std::to_string(cap));
        labels.push_back(cls1);
        depth.push_back(dep);
        return static_cast<int>(labels.size()) - 1;
    }

    TypedTreeBall finish(int radius, std::string source) {
        TypedTreeBall ball;
        ball.graph = Graph::from_edges(static_cast<int>(labels.size()), edges)
                         .with_labels(std::move(labels));
        ball.root = 0;
        ball.radius = radius;
        ball.depth = std::move(depth);
        ball.source = std::move(source);
        return ball;
    }
};

} // namespace

TypedTreeBall tree_ball(const DegreeMatrix& d, int root_class, int r) {
    require_valid(d);
    if (root_class < 0 || root_class >= d.order()) throw InputError("root class out of range");
    if (r < 0) throw InputError("radius must be >= 0");
    BallBuilder b(Caps::get().ball_vertices);
    struct Item {
        int vertex;
        int cls;        // 0-based
        int parent_cls; // -1 at root
        int dep;
    };
    std::queue<Item> q;
    b.add_vertex(root_class + 1, 0);
    q.push({0, root_class, -1, 0});
    while (!q.empty()) {
        Item it = q.front();
        q.pop();
        if (it.dep == r) continue;
        for (int cls = 0; cls < d.order(); ++cls) {
            std::int64_t count = d.at(it.cls, cls) - (cls == it.parent_cls ? 1 : 0);
            for (std::int64_t k = 0; k < count; ++k) {
                int child = b.add_vertex(cls + 1, it.dep + 1);
                b.edges.emplace_back(it.vertex, child);
                q.push({child, cls, it.cls, it.dep + 1});
            }
        }
    }
    return b.finish(r, "cover");
}

TypedTreeBall deficient_tree_ball(int d, int r) {
    if (d < 2) throw InputError("deficient tree needs degree >= 2");
    if (r < 0) throw InputError("radius must be >= 0");
    BallBuilder b(Caps::get().ball_vertices);
    struct Item {
        int vertex;
        int dep;
    };
    std::queue<Item> q;
    b.add_vertex(1, 0);
    q.push({0, 0});
    while (!q.empty()) {
        Item it = q.front();
        q.pop();
        if (it.dep == r) continue;
        // d-1 children everywhere: the root misses one edge, interior
        // vertices spend one edge on their parent.
        for (int k = 0; k < d - 1; ++k) {
            int child = b.add_vertex(1, it.dep + 1);
            b.edges.emplace_back(it.vertex, child);
            q.push({child, it.dep + 1});
        }
    }
    return b.finish(r, "deficient");
}

TypedTreeBall cycle_expanded_ball(int d, int g, int r) {
    if (d < 3 || g < 3) throw InputError("cycle expansion needs d >= 3 and g >= 3");
    if (r < 0) throw InputError("radius must be >= 0");
    const int slots = d - 2;
    const std::int64_t cap = Caps::get().ball_vertices;

    // Lazily materialized cycles: per cycle the g vertex slots and the
    // child cycle attached to each (position, tree slot).
    struct Cycle {
        std::vector<int> vertex;                 // per position, -1 if absent
        std::vector<std::vector<int>> child;     // [pos][slot] -> cycle id, -1 if none
        int parent_cycle = -1;                   // attaches at our position 0, slot 0
        int parent_pos = -1;
    };
    std::vector<Cycle> cycles;
    auto new_cycle = [&](int parent_cycle, int parent_pos) {
        Cycle c;
        c.vertex.assign(g, -1);
        c.child.assign(g, std::vector<int>(slots, -1));
        c.parent_cycle = parent_cycle;
        c.parent_pos = parent_pos;
        cycles.push_back(std::move(c));
        return static_cast<int>(cycles.size()) - 1;
    };

    std::vector<int> vertex_cycle, vertex_pos, depth;
    auto get_vertex = [&](int cycle, int pos, int dep) {
        int& id = cycles[cycle].vertex[pos];
        if (id < 0) {
            if (static_cast<std::int64_t>(vertex_cycle.size()) >= cap)
                throw InstanceTooLarge("ball exceeds the vertex cap of " + std::to_string(cap));
            id = static_cast<int>(vertex_cycle.size());
            vertex_cycle.push_back(cycle);
            vertex_pos.push_back(pos);
            depth.push_back(dep);
        }
        return id;
    };

    new_cycle(-1, -1);
    get_vertex(0, 0, 0);
    std::queue<int> q;
    q.push(0);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (depth[v] == r) continue;
        const int c = vertex_cycle[v], p = vertex_pos[v];
        auto visit = [&](int cycle, int pos) {
            int existing = cycles[cycle].vertex[pos];
            int w = get_vertex(cycle, pos, depth[v] + 1);
            if (existing < 0) q.push(w);
        };
        visit(c, (p + 1) % g);
        visit(c, (p + g - 1) % g);
        // Tree slots: slot 0 at position 0 of a non-root cycle is the
        // edge back to the parent; everything else spawns a new cycle.
        for (int slot = 0; slot < slots; ++slot) {
            if (c != 0 && p == 0 && slot == 0) {
                visit(cycles[c].parent_cycle, cycles[c].parent_pos);
                continue;
            }
            int& child = cycles[c].child[p][slot];
            if (child < 0) child = new_cycle(c, p);
            visit(child, 0);
        }
    }

    // Induced edges among materialized vertices.
    std::vector<std::pair<int, int>> edges;
    auto add_edge = [&](int a, int b) {
        if (a >= 0 && b >= 0) edges.emplace_back(std::min(a, b), std::max(a, b));
    };
    for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
        const Cycle& c = cycles[ci];
        for (int pos = 0; pos < g; ++pos) {
            if (c.vertex[pos] < 0) continue;
            // Each undirected cycle edge {pos, pos+1 mod g} is enumerated
            // once per pos; the wrap edge comes from pos = g-1.
            add_edge(c.vertex[pos], c.vertex[(pos + 1) % g]);
            for (int slot = 0; slot < slots; ++slot)
                if (c.child[pos][slot] >= 0)
                    add_edge(c.vertex[pos], cycles[c.child[pos][slot]].vertex[0]);
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    TypedTreeBall ball;
    std::vector<int> labels(vertex_cycle.size(), 1);
    ball.graph = Graph::from_edges(static_cast<int>(vertex_cycle.size()), edges)
                     .with_labels(std::move(labels));
    ball.root = 0;
    ball.radius = r;
    ball.depth = std::move(depth);
    ball.source = "cycle_expanded";
    return ball;
}

namespace {

// Shared construction for quotient(); refined = key states by parent
// state instead of parent class.
bool build_quotient(const DegreeMatrix& d, int root_class, int r, bool refined,
                    QuotientMatrix& out) {
    out.states.clear();
    out.children.clear();
    out.refined = refined;
    out.states.push_back({0, root_class, -1, -1});
    out.children.emplace_back();
    // key: (depth, class, parent class) or (depth, class, parent state)
    std::map<std::tuple<int, int, int>, int> index;
    std::vector<int> frontier{0};
    const std::int64_t cap = Caps::get().quotient_states;
    for (int dep = 0; dep < r; ++dep) {
        std::vector<int> next;
        for (int s : frontier) {
            const QuotientState st = out.states[s];  // by value: states grows below
            for (int cls = 0; cls < d.order(); ++cls) {
                std::int64_t count = d.at(st.cls, cls) - (cls == st.parent_cls ? 1 : 0);
                if (count <= 0) continue;
                auto key = refined ? std::make_tuple(dep + 1, cls, s)
                                   : std::make_tuple(dep + 1, cls, st.cls);
                auto it = index.find(key);
                int child;
                if (it == index.end()) {
                    if (static_cast<std::int64_t>(out.states.size()) >= cap)
                        throw InstanceTooLarge("quotient exceeds the state cap");
                    child = static_cast<int>(out.states.size());
                    out.states.push_back({dep + 1, cls, st.cls, s});
                    out.children.emplace_back();
                    index.emplace(key, child);
                    next.push_back(child);
                } else {
                    child = it->second;
                    if (out.states[child].parent != s) return false;  // ambiguous parent
                }
                out.children[s].emplace_back(child, count);
            }
        }
        frontier = std::move(next);
    }
    return true;
}

} // namespace

QuotientMatrix quotient(const DegreeMatrix& d, int root_class, int r) {
    require_valid(d);
    if (root_class < 0 || root_class >= d.order()) throw InputError("root class out of range");
    if (r < 0) throw InputError("radius must be >= 0");
    QuotientMatrix q;
    if (!build_quotient(d, root_class, r, false, q))
        build_quotient(d, root_class, r, true, q);
    return q;
}

std::int64_t QuotientMatrix::row_sum(int state) const {
    std::int64_t sum = states[state].parent >= 0 ? 1 : 0;
    for (auto [child, count] : children[state]) {
        (void)child;
        sum += count;
    }
    return sum;
}

std::vector<std::int64_t> QuotientMatrix::dense(int max_order) const {
    const int n = order();
    if (n > max_order) throw InstanceTooLarge("quotient too large for dense output");
    std::vector<std::int64_t> m(static_cast<std::size_t>(n) * n, 0);
    for (int s = 0; s < n; ++s) {
        for (auto [child, count] : children[s]) m[static_cast<std::size_t>(s) * n + child] = count;
        if (states[s].parent >= 0) m[static_cast<std::size_t>(s) * n + states[s].parent] = 1;
    }
    return m;
}

double quotient_rho(const QuotientMatrix& q) {
    const int n = q.order();
    if (n <= 1) return 0.0;
    // The state graph is a tree with positive weights both ways, so the
    // matrix is diagonally similar to the symmetric one whose squared
    // edge weight is count*1, and the leaf-first pivot sign test applies.
    std::vector<std::int64_t> up_weight2(n, 0);
    for (int s = 0; s < n; ++s)
        for (auto [child, count] : q.children[s]) up_weight2[child] = count;
    auto positive = [&](long double lambda) {
        std::vector<long double> acc(n, 0.0L);
        for (int s = n - 1; s >= 0; --s) {
            long double pivot = lambda - acc[s];
            if (pivot <= 0.0L) return false;
            int parent = q.states[s].parent;
            if (parent >= 0) acc[parent] += static_cast<long double>(up_weight2[s]) / pivot;
        }
        return true;
    };
    long double hi = 1.0L;
    for (int s = 0; s < n; ++s) hi = std::max(hi, static_cast<long double>(q.row_sum(s)));
    hi += 1.0L;
    long double lo = 0.0L;
    for (int iter = 0; iter < 200 && hi - lo > 1e-14L * hi; ++iter) {
        long double mid = 0.5L * (lo + hi);
        if (positive(mid)) hi = mid;
        else lo = mid;
    }
    return static_cast<double>(0.5L * (lo + hi));
}

double ball_quotient_rho(const DegreeMatrix& d, int root_class, int r) {
    require_valid(d);
    if (root_class < 0 || root_class >= d.order()) throw InputError("root class out of range");
    if (r <= 0) return 0.0;
    const int t = d.order();
    // Forward reachability of cone types (class, parent class) per depth.
    std::vector<std::vector<char>> reach(r + 1, std::vector<char>(t * t, 0));
    std::vector<char> root_child(t, 0);
    for (int cls = 0; cls < t; ++cls)
        if (d.at(root_class, cls) > 0) {
            reach[1][cls * t + root_class] = 1;
            root_child[cls] = 1;
        }
    for (int dep = 1; dep < r; ++dep)
        for (int j = 0; j < t; ++j)
            for (int p = 0; p < t; ++p) {
                if (!reach[dep][j * t + p]) continue;
                for (int qq = 0; qq < t; ++qq)
                    if (d.at(j, qq) - (qq == p ? 1 : 0) > 0) reach[dep + 1][qq * t + j] = 1;
            }
    std::int64_t hi_sum = 0;
    for (int i = 0; i < t; ++i) {
        std::int64_t row = 0;
        for (int j = 0; j < t; ++j) row += d.at(i, j);
        hi_sum = std::max(hi_sum, row);
    }
    // All pivots of lambda*I - A positive over the ball, evaluated per
    // cone type from the boundary inward.
    std::vector<long double> cur(t * t), next(t * t);
    auto positive = [&](long double lambda) {
        for (int dep = r; dep >= 1; --dep) {
            for (int j = 0; j < t; ++j)
                for (int p = 0; p < t; ++p) {
                    if (!reach[dep][j * t + p]) continue;
                    long double acc = 0.0L;
                    if (dep < r)
                        for (int qq = 0; qq < t; ++qq) {
                            std::int64_t c = d.at(j, qq) - (qq == p ? 1 : 0);
                            if (c > 0) acc += static_cast<long double>(c) / next[qq * t + j];
                        }
                    long double pivot = lambda - acc;
                    if (pivot <= 0.0L) return false;
                    cur[j * t + p] = pivot;
                }
            cur.swap(next);
        }
        long double acc = 0.0L;
        for (int qq = 0; qq < t; ++qq)
            if (d.at(root_class, qq) > 0)
                acc += static_cast<long double>(d.at(root_class, qq)) / next[qq * t + root_class];
        return lambda - acc > 0.0L;
    };
    long double lo = 0.0L, hi = static_cast<long double>(hi_sum) + 1.0L;
    for (int iter = 0; iter < 200 && hi - lo > 1e-14L * hi; ++iter) {
        long double mid = 0.5L * (lo + hi);
        if (positive(mid)) hi = mid;
        else lo = mid;
    }
    return static_cast<double>(0.5L * (lo + hi));
}

double cover_rho_upper(const DegreeMatrix& d, int root_class, double tol) {
    require_valid(d);
    if (root_class < 0 || root_class >= d.order()) throw InputError("root class out of range");
    const int t = d.order();
    std::vector<std::pair<int, int>> states;  // (class a, parent class b) with d_ba >= 1
    std::vector<int> state_of(t * t, -1);
    for (int a = 0; a < t; ++a)
        for (int bb = 0; bb < t; ++bb)
            if (d.at(bb, a) >= 1) {
                state_of[a * t + bb] = static_cast<int>(states.size());
                states.emplace_back(a, bb);
            }
    std::int64_t hi_sum = 0;
    for (int i = 0; i < t; ++i) {
        std::int64_t row = 0;
        for (int j = 0; j < t; ++j) row += d.at(i, j);
        hi_sum = std::max(hi_sum, row);
    }
    // Certified iff the monotone fixed-point iteration of the cone-type
    // recursion converges to positive values and the root satisfies the
    // supersolution inequality; then the lifted path-product vector is a
    // positive lambda-supersolution on the whole infinite tree.
    auto certified = [&](long double lambda) {
        std::vector<long double> cur(states.size(), 0.0L), nxt(states.size());
        const int max_iter = 400000;
        for (int iter = 0; iter < max_iter; ++iter) {
            long double change = 0.0L;
            for (std::size_t s = 0; s < states.size(); ++s) {
                auto [a, bb] = states[s];
                long double acc = 0.0L;
                for (int qq = 0; qq < t; ++qq) {
                    std::int64_t c = d.at(a, qq) - (qq == bb ? 1 : 0);
                    if (c > 0) acc += static_cast<long double>(c) * cur[state_of[qq * t + a]];
                }
                long double den = lambda - acc;
                if (den <= 0.0L) return false;
                nxt[s] = 1.0L / den;
                change = std::max(change, nxt[s] - cur[s]);
            }
            cur.swap(nxt);
            if (change < 1e-16L) {
                long double acc = 0.0L;
                for (int qq = 0; qq < t; ++qq)
                    if (d.at(root_class, qq) > 0)
                        acc += static_cast<long double>(d.at(root_class, qq)) *
                               cur[state_of[qq * t + root_class]];
                return acc <= lambda;
            }
        }
        return false;  // undecided within budget: treat as not certified
    };
    long double lo = 0.0L, hi = static_cast<long double>(hi_sum) + 1.0L;
    while (!certified(hi)) hi += 1.0L;  // max row sum + 1 certifies except at iteration-cap edge
    for (int iter = 0; iter < 200 && hi - lo > static_cast<long double>(tol); ++iter) {
        long double mid = 0.5L * (lo + hi);
        if (certified(mid)) hi = mid;
        else lo = mid;
    }
    return static_cast<double>(hi);
}

} // namespace rlab
