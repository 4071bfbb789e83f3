#ifndef RLAB_BOUNDS_HPP
#define RLAB_BOUNDS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "rlab/degmat.hpp"

namespace rlab {

/// Two-sided bracket for the spectral radius of the infinite cover tree.
/// lower = rho of the deepest computed ball (monotone in the radius);
/// upper = min(rho(D), certified fixed-point upper bound).
struct RhoBracket {
    double lower = 0.0;
    double upper = 0.0;
    int radius_reached = 0;
    bool converged = false;  // width <= tol or ball increment < tol
    std::vector<std::pair<int, double>> samples;  // (radius, ball rho) schedule
    double rate_exponent = 0.0;  // fitted slope of log(gap) vs log(radius); diagnostic
    bool rate_fitted = false;
};

RhoBracket rho_universal_cover(const DegreeMatrix& d, int root_class, double tol = 1e-9,
                               int r_max = 10000);

/// Exact closed form when one is known: 2 sqrt(d-1) for [[d]] with
/// d >= 2, sqrt(d1-1) + sqrt(d2-1) for zero-diagonal 2x2 matrices with
/// both degrees >= 2. Degenerate finite-tree cases return nullopt (the
/// bracket pins them exactly instead).
std::optional<double> closed_form_rho(const DegreeMatrix& d);

/// rho of the radius-r ball of the root-deficient d-regular tree:
/// 2 sqrt(d-1) cos(pi / (r+2)).
double deficient_ball_rho(int d, int r);

/// Smallest radius whose regular-tree ball reaches 2 sqrt(d-1) - eps,
/// by exact scan of the quotient ball rho, plus the asymptotic estimate
/// pi (2 sqrt(d-1) / eps)^{1/2} for comparison.
struct SerreRadius {
    int r = 0;
    double target = 0.0;
    double ball_rho = 0.0;     // at radius r
    double asymptotic = 0.0;
};
SerreRadius serre_r(int d, double eps);
/// Degree-matrix version: smallest r whose ball rho reaches the target
/// from every root class.
SerreRadius serre_r_target(const DegreeMatrix& d, double target);

/// Eigenvalue-count constant c = 1/B with B the (2r+1)-ball size bound
/// at maximum degree delta_max. The commonly quoted display value
/// (delta/(delta-2)) (delta-1)^{-(2r+1)} differs from 1/B by
/// (delta/(delta-2))^2; both are reported, the smaller one is c.
struct SerreConstant {
    int r = 0;
    double c = 0.0;          // 1/B, conservative
    double c_display = 0.0;  // the larger display value
    double log_b = 0.0;      // natural log of B (B itself may overflow)
};
SerreConstant serre_c(int d, int delta_max, double eps);
SerreConstant serre_c_degmat(const DegreeMatrix& d, int delta_max, double eps);
/// The ball-size constant alone, via the radius.
SerreConstant serre_c_radius(int r, int delta_max);

/// Minimal count requirement ceil(c*n), at least 1 whenever c > 0.
long long required_count(const SerreConstant& sc, long long n);

/// Spectral radius of the cycle-expanded graph: minimize over s > 0 the
/// scalar formula (d-2) phi(coth(sg/2)/sinh s) + 2 cosh s with
/// phi(t) = t / (1 + sqrt(1 + t^2)); coarse log-spaced grid scan
/// followed by golden-section refinement (unimodality is not assumed).
struct PaschkeResult {
    double rho = 0.0;
    double s_star = 0.0;
    double h = 0.0;  // gap normalized by 2(d-2)/(d-1)^{(g+1)/2}
};
PaschkeResult paschke(int d, int g);
double paschke_rho(int d, int g);
double paschke_h(int d, int g);

/// The minimized scalar itself, exposed for oracles and sweeps.
double paschke_objective(int d, int g, double s);

} // namespace rlab

#endif
