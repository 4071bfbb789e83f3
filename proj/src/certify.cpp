#include "rlab/certify.hpp"

#include <algorithm>
#include <cmath>

#include "rlab/caps.hpp"
#include "rlab/errors.hpp"
#include "rlab/realize.hpp"
#include "rlab/spectral.hpp"
#include "rlab/treeball.hpp"

namespace rlab {

namespace {

Verdict compare_to_bracket(double value, double lo, double hi, double tie) {
    if (value <= lo - tie) return Verdict::Yes;
    if (value > hi + tie) return Verdict::No;
    return Verdict::Indeterminate;
}

// Cover-tree rho bracket: exact closed form when available, otherwise
// the two-sided numeric bracket.
std::pair<double, double> cover_bracket(const DegreeMatrix& d) {
    if (auto cf = closed_form_rho(d)) return {*cf, *cf};
    RhoBracket b = rho_universal_cover(d, 0, 1e-10, 4096);
    return {b.lower, b.upper};
}

} // namespace

RamanujanReport ramanujan_classic(const Graph& g) {
    if (g.vertex_count() < 2) throw HypothesisError("need at least two vertices");
    if (!is_regular(g)) throw HypothesisError("graph is not regular");
    const int d = g.degree(0);
    if (d < 1) throw HypothesisError("graph has no edges");
    RamanujanReport rep;
    const double theta = 2.0 * std::sqrt(static_cast<double>(d - 1));
    rep.threshold_lo = rep.threshold_hi = theta;
    rep.k = 1;
    rep.compared_eigenvalue = eigen_full(g).values[1];
    rep.verdict = compare_to_bracket(rep.compared_eigenvalue, theta, theta, rep.tie_tol);
    return rep;
}

RamanujanReport ramanujan_degree_matrix(const Graph& g, const std::vector<VertexSet>& sets,
                                        const DegreeMatrix& d, bool equitable_mode) {
    require_valid(d);
    PartitionWitness w;
    if (equitable_mode) {
        if (!verify_equitable(g, sets, d, &w))
            throw HypothesisError("partition is not equitable: vertex " +
                                  std::to_string(w.vertex) + " has " +
                                  std::to_string(w.actual) + " neighbors in class " +
                                  std::to_string(w.other + 1) + ", expected " +
                                  std::to_string(w.expected));
    } else {
        if (!verify_subdegree(g, sets, d, 0, false, &w))
            throw HypothesisError("subdegree condition fails: vertex " +
                                  std::to_string(w.vertex) + " has " +
                                  std::to_string(w.actual) + " neighbors in subset " +
                                  std::to_string(w.other + 1) + ", needs " +
                                  std::to_string(w.expected));
    }

    RamanujanReport rep;
    auto [lo, hi] = cover_bracket(d);
    rep.threshold_lo = lo;
    rep.threshold_hi = hi;
    rep.d_spectrum = degree_matrix_spectrum(d).values;

    // lambda_1(D) = rho(D) >= cover rho always; count the rest against
    // the bracket and bail out when one lands inside it.
    int k = 1;
    for (int i = 1; i < static_cast<int>(rep.d_spectrum.size()); ++i) {
        double v = rep.d_spectrum[i];
        if (v > hi + rep.tie_tol) {
            ++k;
        } else if (v < lo - rep.tie_tol) {
            break;
        } else {
            rep.k_determined = false;
            rep.ambiguous_index = i + 1;
            rep.verdict = Verdict::Indeterminate;
            rep.k = k;
            return rep;
        }
    }
    rep.k = k;
    Spectrum spec = eigen_full(g);
    if (k >= static_cast<int>(spec.values.size())) {
        rep.verdict = Verdict::Yes;  // nothing below lambda_k to violate the bound
        return rep;
    }
    rep.compared_eigenvalue = spec.values[k];
    rep.verdict = compare_to_bracket(rep.compared_eigenvalue, lo, hi, rep.tie_tol);
    return rep;
}

CountReport serre_verify(const Graph& g, int d, int delta_max, double eps) {
    if (d < 2 || eps <= 0) throw InputError("serre check needs d >= 2, eps > 0");
    if (min_degree(g) < d) throw HypothesisError("minimum degree below d");
    if (max_degree(g) > delta_max) throw HypothesisError("maximum degree above delta");
    CountReport rep;
    rep.constant = serre_c(d, delta_max, eps);
    rep.threshold = 2.0 * std::sqrt(static_cast<double>(d - 1)) - eps;
    rep.count = count_above(eigen_full(g), rep.threshold);
    rep.required = required_count(rep.constant, g.vertex_count());
    rep.pass = rep.count >= rep.required;
    return rep;
}

CountReport serre_verify_degmat(const Graph& g, const std::vector<VertexSet>& subsets,
                                const DegreeMatrix& d, int delta_max, double eps) {
    if (eps <= 0) throw InputError("serre check needs eps > 0");
    if (max_degree(g) > delta_max) throw HypothesisError("maximum degree above delta");
    PartitionWitness w;
    if (!verify_subdegree(g, subsets, d, 0, true, &w))
        throw HypothesisError("subdegree condition fails at vertex " + std::to_string(w.vertex));
    CountReport rep;
    auto [lo, hi] = cover_bracket(d);
    (void)lo;
    // Conservative on both sides: the threshold uses the certified upper
    // end, and so does the radius scan inside the constant.
    rep.constant = serre_c_degmat(d, delta_max, eps);
    rep.threshold = hi - eps;
    rep.count = count_above(eigen_full(g), rep.threshold);
    rep.required = required_count(rep.constant, g.vertex_count());
    rep.pass = rep.count >= rep.required;
    return rep;
}

GirthBoostReport girth_boost_verify(const Graph& g, int d, int delta_max, int girth_cap) {
    if (d < 3) throw InputError("girth boost needs d >= 3");
    if (min_degree(g) < d) throw HypothesisError("minimum degree below d");
    if (max_degree(g) > delta_max) throw HypothesisError("maximum degree above delta");
    auto m = universal_girth(g, girth_cap);
    if (!m) throw HypothesisError("universal girth not found within cap " +
                                  std::to_string(girth_cap));
    GirthBoostReport rep;
    rep.universal_girth = *m;
    rep.limit_rho = paschke_rho(d, *m);
    const double base = 2.0 * std::sqrt(static_cast<double>(d - 1));

    // Deepest expanded-cycle ball that stays power-iteration friendly.
    const std::int64_t size_cap = std::min<std::int64_t>(Caps::get().ball_vertices, 300'000);
    TypedTreeBall ball;
    int r = 0;
    std::int64_t grown = 1;
    while (r < 64 && grown <= size_cap) {
        TypedTreeBall next;
        try {
            next = cycle_expanded_ball(d, *m, r + 1);
        } catch (const InstanceTooLarge&) {
            break;
        }
        if (next.graph.vertex_count() > size_cap) break;
        ball = std::move(next);
        ++r;
        grown = ball.graph.vertex_count() * std::max(1, d - 1);
    }
    rep.radius = r;
    rep.ball_rho = r > 0 ? spectral_radius(ball.graph) : 0.0;
    // Half the measured gap absorbs ball truncation; the theorem only
    // promises some positive delta exists.
    rep.delta = (rep.ball_rho - base) / 2.0;
    rep.constant = serre_c_radius(r, delta_max);
    rep.threshold = base + rep.delta;
    if (rep.delta <= 0) {
        rep.conclusive = false;
        return rep;
    }
    rep.conclusive = true;
    rep.count = count_above(eigen_full(g), rep.threshold);
    rep.required = required_count(rep.constant, g.vertex_count());
    rep.pass = rep.count >= rep.required;
    return rep;
}

namespace {

double spectral_symmetry_defect(const Spectrum& s) {
    double worst = 0.0;
    const std::size_t n = s.values.size();
    for (std::size_t i = 0; i < n; ++i)
        worst = std::max(worst, std::abs(s.values[i] + s.values[n - 1 - i]));
    return worst;
}

bool all_balls_bipartite(const Graph& g, int r) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto b = ball(g, v, r);
        if (odd_girth(b.graph).length.has_value()) return false;
    }
    return true;
}

} // namespace

NegativeSideReport negative_side_verify(const Graph& g, int d, int delta_max) {
    if (d < 2) throw InputError("negative-side check needs d >= 2");
    if (min_degree(g) < d) throw HypothesisError("minimum degree below d");
    if (max_degree(g) > delta_max) throw HypothesisError("maximum degree above delta");
    NegativeSideReport rep;
    auto og = odd_girth(g);
    Spectrum spec = eigen_full(g);
    if (!og.length) {
        rep.bipartite = true;
        rep.symmetry_defect = spectral_symmetry_defect(spec);
        rep.pass = rep.symmetry_defect <= 1e-7;
        return rep;
    }
    rep.odd_girth = *og.length;
    rep.radius = *og.length / 2 - 1;
    if (rep.radius < 1) return rep;  // inapplicable
    rep.applicable = true;
    rep.balls_bipartite = all_balls_bipartite(g, rep.radius);
    const double base = 2.0 * std::sqrt(static_cast<double>(d - 1));
    const double eps = std::pow(2.0 * M_PI / rep.odd_girth, 2.0);  // nominal, O(g^-3) dropped
    rep.threshold = -base * (1.0 - eps);
    rep.count = count_below(spec, rep.threshold);
    rep.mirrored_count = count_above(spec, -rep.threshold);
    rep.constant = serre_c_radius(rep.radius, delta_max);
    rep.required = required_count(rep.constant, g.vertex_count());
    rep.pass = rep.balls_bipartite && rep.count >= rep.required;
    return rep;
}

NegativeSideReport negative_side_verify_degmat(const Graph& g,
                                               const std::vector<VertexSet>& subsets,
                                               const DegreeMatrix& d, int delta_max,
                                               double eps) {
    if (eps <= 0) throw InputError("negative-side check needs eps > 0");
    if (max_degree(g) > delta_max) throw HypothesisError("maximum degree above delta");
    PartitionWitness w;
    if (!verify_subdegree(g, subsets, d, 0, true, &w))
        throw HypothesisError("subdegree condition fails at vertex " + std::to_string(w.vertex));

    NegativeSideReport rep;
    auto [lo, hi] = cover_bracket(d);
    (void)lo;
    // Radius where the ball rho is within eps of the cover rho, from
    // every root class; bipartite balls at that radius mirror it below.
    SerreRadius sr = serre_r_target(d, hi - eps);
    rep.radius = sr.r;
    auto og = odd_girth(g);
    Spectrum spec = eigen_full(g);
    rep.bipartite = !og.length.has_value();
    if (rep.bipartite) rep.symmetry_defect = spectral_symmetry_defect(spec);
    rep.odd_girth = og.length.value_or(0);
    const int needed_girth = 2 * sr.r + 3;
    if (og.length && *og.length < needed_girth) return rep;  // inapplicable
    rep.applicable = true;
    rep.balls_bipartite = all_balls_bipartite(g, sr.r);
    rep.threshold = -hi + eps;
    rep.count = count_below(spec, rep.threshold);
    rep.mirrored_count = count_above(spec, -rep.threshold);
    rep.constant = serre_c_radius(sr.r, delta_max);
    rep.required = required_count(rep.constant, g.vertex_count());
    rep.pass = rep.balls_bipartite && rep.count >= rep.required;
    return rep;
}

} // namespace rlab
