#include "rlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "rlab/caps.hpp"
#include "rlab/errors.hpp"
#include "rlab/treeball.hpp"

namespace rlab {

std::vector<double> adjacency_matrix(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) a[static_cast<std::size_t>(u) * n + v] = 1.0;
    return a;
}

namespace {

double off_norm(const std::vector<double>& a, int n) {
    double sum = 0.0;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
            double v = a[static_cast<std::size_t>(p) * n + q];
            sum += 2.0 * v * v;
        }
    return std::sqrt(sum);
}

} // namespace

std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n, double* residual_out) {
    const double target = 1e-10 * std::max(1, n);
    const int max_sweeps = 64;
    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = off_norm(a, n);
        if (off <= target) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = at(p, q);
                if (std::abs(apq) < 1e-300) continue;
                double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                double tau = s / (1.0 + c);
                double app = at(p, p), aqq = at(q, q);
                at(p, p) = app - t * apq;
                at(q, q) = aqq + t * apq;
                at(p, q) = 0.0;
                at(q, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    double akp = at(k, p), akq = at(k, q);
                    at(k, p) = akp - s * (akq + tau * akp);
                    at(p, k) = at(k, p);
                    at(k, q) = akq + s * (akp - tau * akq);
                    at(q, k) = at(k, q);
                }
            }
        }
    }
    if (residual_out) *residual_out = off_norm(a, n);
    std::vector<double> values(n);
    for (int i = 0; i < n; ++i) values[i] = at(i, i);
    std::sort(values.begin(), values.end(), std::greater<>());
    return values;
}

Spectrum eigen_full(const Graph& g) {
    const int n = g.vertex_count();
    if (n > Caps::get().dense_eigen)
        throw InstanceTooLarge("dense eigensolve capped at " +
                               std::to_string(Caps::get().dense_eigen) + " vertices");
    Spectrum s;
    s.method = "jacobi";
    s.values = jacobi_eigenvalues(adjacency_matrix(g), n, &s.residual);
    return s;
}

namespace {

// Compensated summation: plain accumulation drifts by ~n*eps, which
// would defeat a 1e-12 convergence window on million-vertex graphs.
struct KahanSum {
    double sum = 0.0, carry = 0.0;
    void add(double v) {
        double t = v - carry;
        double s = sum + t;
        carry = (s - sum) - t;
        sum = s;
    }
};

double power_iteration_component(const Graph& g, const VertexSet& comp) {
    if (comp.size() == 1) return 0.0;
    std::vector<int> pos(g.vertex_count(), -1);
    for (std::size_t i = 0; i < comp.size(); ++i) pos[comp[i]] = static_cast<int>(i);
    const std::size_t n = comp.size();
    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n))), y(n);
    double lambda = 0.0;
    int stable = 0;
    const int max_iter = 1'000'000;
    for (int iter = 0; iter < max_iter; ++iter) {
        // y = (A + I) x: the shift keeps bipartite components from
        // oscillating between the +-rho eigenspaces.
        for (std::size_t i = 0; i < n; ++i) {
            double acc = x[i];
            for (int w : g.neighbors(comp[i])) acc += x[pos[w]];
            y[i] = acc;
        }
        KahanSum dot, norm2;
        for (std::size_t i = 0; i < n; ++i) {
            dot.add(x[i] * y[i]);
            norm2.add(y[i] * y[i]);
        }
        double next = dot.sum;  // Rayleigh quotient of A + I at unit x
        // For the symmetric A + I the Rayleigh value sits within the
        // iterate residual of a true eigenvalue, and the positive
        // iterate pins that eigenvalue to the Perron one.
        double residual = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            residual = std::max(residual, std::abs(y[i] - next * x[i]));
        double norm = std::sqrt(norm2.sum);
        for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
        if (residual <= 1e-12 * std::max(1.0, std::abs(next))) {
            lambda = next;
            break;
        }
        if (std::abs(next - lambda) <= 1e-12 * std::max(1.0, std::abs(next))) {
            if (++stable >= 10) {
                lambda = next;
                break;
            }
        } else {
            stable = 0;
        }
        lambda = next;
    }
    return lambda - 1.0;
}

} // namespace

double spectral_radius(const Graph& g) {
    double best = 0.0;
    for (const auto& comp : components(g))
        best = std::max(best, power_iteration_component(g, comp));
    return best;
}

BigNat walk_count(const Graph& g, int u, int len) {
    if (u < 0 || u >= g.vertex_count()) throw InputError("walk origin out of range");
    if (len < 0) throw InputError("walk length must be >= 0");
    if (len > Caps::get().walk_q)
        throw InstanceTooLarge("walk length capped at " + std::to_string(Caps::get().walk_q));
    std::vector<BigNat> cur(g.vertex_count()), next(g.vertex_count());
    cur[u] = BigNat{1};
    for (int step = 0; step < len; ++step) {
        for (int v = 0; v < g.vertex_count(); ++v) {
            BigNat acc;
            for (int w : g.neighbors(v))
                if (!cur[w].is_zero()) acc += cur[w];
            next[v] = std::move(acc);
        }
        cur.swap(next);
    }
    return cur[u];
}

bool walk_identity_check(int d, int r, int q) {
    if (d < 2 || r < 0 || q < 0) throw InputError("walk identity needs d >= 2, r >= 0, q >= 0");
    TypedTreeBall deficient = deficient_tree_ball(d, r);
    BigNat lhs = walk_count(deficient.graph, deficient.root, 2 * q);
    BigNat rhs = BigNat::pow(BigNat{static_cast<std::uint64_t>(d - 1)}, static_cast<unsigned>(q)) *
                 walk_count(path_graph(r + 1), 0, 2 * q);
    return lhs == rhs;
}

bool interlace_check(const Graph& g, const VertexSet& subset) {
    const auto full = eigen_full(g).values;
    const auto sub = eigen_full(induced_subgraph(g, subset).graph).values;
    const int n = static_cast<int>(full.size());
    const int m = static_cast<int>(sub.size());
    const double slack = 1e-8;
    for (int i = 0; i < m; ++i) {
        if (full[i] + slack < sub[i]) return false;
        if (sub[i] + slack < full[i + n - m]) return false;
    }
    return true;
}

int count_above(const Spectrum& s, double threshold, double tie_tol) {
    int count = 0;
    for (double v : s.values)
        if (v > threshold + tie_tol) ++count;
    return count;
}

int count_below(const Spectrum& s, double threshold, double tie_tol) {
    int count = 0;
    for (double v : s.values)
        if (v < threshold - tie_tol) ++count;
    return count;
}

double tree_graph_rho(const Graph& forest) {
    const int n = forest.vertex_count();
    if (n == 0) return 0.0;
    if (forest.edge_count() != n - static_cast<std::int64_t>(components(forest).size()))
        throw InputError("tree_graph_rho requires a forest");
    // Leaf-first elimination order: children before parents.
    std::vector<int> order, parent(n, -1);
    order.reserve(n);
    std::vector<bool> seen(n, false);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::queue<int> q;
        q.push(s);
        seen[s] = true;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            order.push_back(u);
            for (int w : forest.neighbors(u))
                if (!seen[w]) {
                    seen[w] = true;
                    parent[w] = u;
                    q.push(w);
                }
        }
    }
    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i) rank[order[i]] = i;
    // lambda > rho(A) iff all pivots of lambda*I - A stay positive when
    // eliminating leaves first.
    auto pivots_positive = [&](long double lambda) {
        std::vector<long double> acc(n, 0.0L);
        for (int i = n - 1; i >= 0; --i) {
            int v = order[i];
            long double pivot = lambda - acc[v];
            if (pivot <= 0.0L) return false;
            if (parent[v] >= 0) acc[parent[v]] += 1.0L / pivot;
        }
        return true;
    };
    long double lo = 0.0L, hi = max_degree(forest) + 1.0L;
    for (int iter = 0; iter < 200 && hi - lo > 1e-14L * std::max<long double>(1.0L, hi); ++iter) {
        long double mid = 0.5L * (lo + hi);
        if (pivots_positive(mid)) hi = mid;
        else lo = mid;
    }
    return static_cast<double>(0.5L * (lo + hi));
}

} // namespace rlab
