#ifndef RLAB_SPECTRAL_HPP
#define RLAB_SPECTRAL_HPP

#include <string>
#include <vector>

#include "rlab/bigint.hpp"
#include "rlab/graph.hpp"

namespace rlab {

/// Real eigenvalues in descending order with solver metadata.
struct Spectrum {
    std::vector<double> values;  // descending, with multiplicity
    double residual = 0.0;       // achieved off-diagonal / iteration residual
    std::string method;          // "jacobi" or "power"

    double rho() const { return values.empty() ? 0.0 : values.front(); }
};

/// Dense symmetric eigenvalues via cyclic Jacobi rotations, descending.
/// residual_out (optional) receives the final off-diagonal Frobenius norm.
std::vector<double> jacobi_eigenvalues(std::vector<double> matrix, int n,
                                       double* residual_out = nullptr);

/// Full adjacency spectrum. Throws InstanceTooLarge above the dense cap.
Spectrum eigen_full(const Graph& g);

/// Spectral radius by shifted power iteration (A + I avoids the
/// bipartite +-rho oscillation); max over components, 0 for empty graphs.
double spectral_radius(const Graph& g);

/// Exact number of closed walks of the given length from u: (A^len)_{uu}.
BigNat walk_count(const Graph& g, int u, int len);

/// Exact check that closed-walk counts at the root of the deficient
/// d-regular radius-r ball factor through the path on r+1 vertices with
/// a (d-1)^q multiplier, at walk length 2q.
bool walk_identity_check(int d, int r, int q);

/// Two-sided eigenvalue interlacing between g and its induced subgraph
/// on the subset, within 1e-8 slack.
bool interlace_check(const Graph& g, const VertexSet& subset);

/// Count eigenvalues strictly above/below a threshold. tie_tol guards
/// comparisons against irrational thresholds: values within tie_tol of
/// the threshold are not counted.
int count_above(const Spectrum& s, double threshold, double tie_tol = 1e-9);
int count_below(const Spectrum& s, double threshold, double tie_tol = 1e-9);

/// Largest adjacency eigenvalue of a forest, certified by the sign of
/// the leaf-first LDL pivots of lambda*I - A; bisected to ~1e-13.
double tree_graph_rho(const Graph& forest);

std::vector<double> adjacency_matrix(const Graph& g);

} // namespace rlab

#endif
