#ifndef RLAB_CERTIFY_HPP
#define RLAB_CERTIFY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "rlab/bounds.hpp"
#include "rlab/degmat.hpp"
#include "rlab/graph.hpp"

namespace rlab {

enum class Verdict { Yes, No, Indeterminate };

/// Tri-state certification record. Yes is only issued against the
/// unfavorable (lower) end of the threshold bracket, No only against
/// the favorable (upper) end; anything inside, including ties within
/// tie_tol, stays Indeterminate.
struct RamanujanReport {
    Verdict verdict = Verdict::Indeterminate;
    double threshold_lo = 0.0;  // bracket for the cover-tree rho
    double threshold_hi = 0.0;
    int k = 1;                  // largest index with lambda_k(D) >= cover rho
    bool k_determined = true;
    int ambiguous_index = -1;   // 1-based D-spectrum index inside the bracket
    double compared_eigenvalue = 0.0;  // lambda_{k+1}(G)
    double tie_tol = 1e-9;
    std::vector<double> d_spectrum;    // empty in the regular case
};

/// Regular graphs: lambda_2 against 2 sqrt(d-1). Throws HypothesisError
/// when the graph is not regular.
RamanujanReport ramanujan_classic(const Graph& g);

/// Degree-matrix certification. equitable_mode verifies an exact
/// equitable partition; otherwise the subsets must satisfy the
/// at-least-d_ij subdegree condition. The index k comes from the
/// D-spectrum against the cover rho bracket; an eigenvalue of D inside
/// the bracket leaves the verdict Indeterminate.
RamanujanReport ramanujan_degree_matrix(const Graph& g, const std::vector<VertexSet>& sets,
                                        const DegreeMatrix& d, bool equitable_mode);

/// Instance check of the linear eigenvalue-count lower bound.
struct CountReport {
    double threshold = 0.0;
    int count = 0;
    long long required = 0;
    SerreConstant constant;
    bool pass = false;
};
CountReport serre_verify(const Graph& g, int d, int delta_max, double eps);
CountReport serre_verify_degmat(const Graph& g, const std::vector<VertexSet>& subsets,
                                const DegreeMatrix& d, int delta_max, double eps);

/// Bounded universal girth pushes the count threshold above 2 sqrt(d-1).
struct GirthBoostReport {
    int universal_girth = 0;
    int radius = 0;           // deepest expanded cycle ball
    double ball_rho = 0.0;
    double delta = 0.0;       // half the measured gap; <= 0 means inconclusive
    double limit_rho = 0.0;   // minimized formula value for the infinite graph
    double threshold = 0.0;
    int count = 0;
    long long required = 0;
    SerreConstant constant;
    bool conclusive = false;
    bool pass = false;
};
GirthBoostReport girth_boost_verify(const Graph& g, int d, int delta_max, int girth_cap);

/// Negative-side counts under an odd-girth hypothesis. Bipartite hosts
/// report exact spectral symmetry instead; odd girth below 5 is
/// inapplicable (the ball radius would be zero).
struct NegativeSideReport {
    bool applicable = false;
    bool bipartite = false;
    double symmetry_defect = 0.0;  // max |lambda_i + lambda_{n+1-i}| when bipartite
    int odd_girth = 0;             // 0 when infinite
    int radius = 0;
    bool balls_bipartite = false;
    double threshold = 0.0;        // nominal: the explicit epsilon term only
    int count = 0;
    long long required = 0;
    SerreConstant constant;
    int mirrored_count = 0;        // count above -threshold, for symmetry reporting
    bool pass = false;
};
NegativeSideReport negative_side_verify(const Graph& g, int d, int delta_max);
NegativeSideReport negative_side_verify_degmat(const Graph& g,
                                               const std::vector<VertexSet>& subsets,
                                               const DegreeMatrix& d, int delta_max,
                                               double eps);

} // namespace rlab

#endif
