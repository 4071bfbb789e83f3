#include "rlab/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "rlab/errors.hpp"
#include "rlab/treeball.hpp"

namespace rlab {

RhoBracket rho_universal_cover(const DegreeMatrix& d, int root_class, double tol, int r_max) {
    require_valid(d);
    if (root_class < 0 || root_class >= d.order()) throw InputError("root class out of range");
    if (tol <= 0 || r_max < 1) throw InputError("need tol > 0 and r_max >= 1");

    RhoBracket out;
    const double rho_d = degree_matrix_spectrum(d).rho();
    out.upper = std::min(rho_d, cover_rho_upper(d, root_class, std::min(tol, 1e-11)));

    std::vector<int> radii;
    for (int r = 1; r < r_max; r *= 2) radii.push_back(r);
    radii.push_back(r_max);

    double prev = 0.0;
    for (int r : radii) {
        double cur = ball_quotient_rho(d, root_class, r);
        out.samples.emplace_back(r, cur);
        out.lower = cur;
        out.radius_reached = r;
        if (out.upper - out.lower <= tol || (out.samples.size() > 1 && cur - prev < tol)) {
            out.converged = true;
            break;
        }
        prev = cur;
    }
    if (out.upper - out.lower <= tol) out.converged = true;

    // Diagnostic fit of the convergence rate: slope of log(gap) against
    // log(radius) over the sampled schedule.
    std::vector<double> xs, ys;
    for (auto [r, rho] : out.samples) {
        double gap = out.upper - rho;
        if (gap > 1e-13 && r >= 2) {
            xs.push_back(std::log(static_cast<double>(r)));
            ys.push_back(std::log(gap));
        }
    }
    if (xs.size() >= 3) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            sx += xs[i];
            sy += ys[i];
            sxx += xs[i] * xs[i];
            sxy += xs[i] * ys[i];
        }
        double denom = xs.size() * sxx - sx * sx;
        if (std::abs(denom) > 1e-12) {
            out.rate_exponent = (xs.size() * sxy - sx * sy) / denom;
            out.rate_fitted = true;
        }
    }
    return out;
}

std::optional<double> closed_form_rho(const DegreeMatrix& d) {
    if (d.order() == 1) {
        std::int64_t deg = d.at(0, 0);
        if (deg >= 2) return 2.0 * std::sqrt(static_cast<double>(deg - 1));
        return std::nullopt;
    }
    if (d.order() == 2 && d.at(0, 0) == 0 && d.at(1, 1) == 0 && d.at(0, 1) >= 2 &&
        d.at(1, 0) >= 2)
        return std::sqrt(static_cast<double>(d.at(0, 1) - 1)) +
               std::sqrt(static_cast<double>(d.at(1, 0) - 1));
    return std::nullopt;
}

double deficient_ball_rho(int d, int r) {
    if (d < 2 || r < 0) throw InputError("deficient ball rho needs d >= 2, r >= 0");
    return 2.0 * std::sqrt(static_cast<double>(d - 1)) * std::cos(M_PI / (r + 2));
}

SerreRadius serre_r(int d, double eps) {
    if (d < 2 || eps <= 0) throw InputError("serre_r needs d >= 2 and eps > 0");
    DegreeMatrix dm = DegreeMatrix::from_rows({{d}});
    SerreRadius out = serre_r_target(dm, 2.0 * std::sqrt(static_cast<double>(d - 1)) - eps);
    out.asymptotic = M_PI * std::sqrt(2.0 * std::sqrt(static_cast<double>(d - 1)) / eps);
    return out;
}

SerreRadius serre_r_target(const DegreeMatrix& d, double target) {
    require_valid(d);
    SerreRadius out;
    out.target = target;
    for (int r = 0; r <= 1'000'000; ++r) {
        double worst = 0.0;
        for (int cls = 0; cls < d.order(); ++cls) {
            double rho = ball_quotient_rho(d, cls, r);
            worst = cls == 0 ? rho : std::min(worst, rho);
        }
        if (worst >= target - 1e-12) {
            out.r = r;
            out.ball_rho = worst;
            return out;
        }
    }
    throw InstanceTooLarge("radius scan exceeded 10^6");
}

SerreConstant serre_c_radius(int r, int delta_max) {
    if (delta_max < 1 || r < 0) throw InputError("ball-size constant needs delta >= 1, r >= 0");
    SerreConstant out;
    out.r = r;
    if (delta_max <= 2) {
        // Paths/cycles: a (2r+1)-ball has at most 4r+3 vertices.
        out.log_b = std::log(4.0 * r + 3.0);
        out.c = 1.0 / (4.0 * r + 3.0);
        out.c_display = out.c;
        return out;
    }
    const double delta = delta_max;
    out.log_b = std::log(delta / (delta - 2.0)) + (2.0 * r + 1.0) * std::log(delta - 1.0);
    out.c = std::exp(-out.log_b);
    out.c_display = (delta / (delta - 2.0)) * std::exp(-(2.0 * r + 1.0) * std::log(delta - 1.0));
    return out;
}

SerreConstant serre_c(int d, int delta_max, double eps) {
    SerreConstant out = serre_c_radius(serre_r(d, eps).r, delta_max);
    return out;
}

SerreConstant serre_c_degmat(const DegreeMatrix& d, int delta_max, double eps) {
    // Conservative target: measured against the certified upper end of
    // the cover rho bracket, so the scanned radius is never too small.
    double upper = cover_rho_upper(d, 0, 1e-11);
    if (auto cf = closed_form_rho(d)) upper = std::min(upper, *cf);
    return serre_c_radius(serre_r_target(d, upper - eps).r, delta_max);
}

long long required_count(const SerreConstant& sc, long long n) {
    if (n <= 0) return 0;
    // c*n in log space; any positive c demands at least one eigenvalue.
    double log_cn = std::log(static_cast<double>(n)) - sc.log_b;
    if (log_cn <= 0.0) return 1;
    double cn = std::exp(log_cn);
    return static_cast<long long>(std::ceil(cn - 1e-9));
}

namespace {

double coth(double y) {
    if (y > 19.0) return 1.0 + 2.0 * std::exp(-2.0 * y);
    return std::cosh(y) / std::sinh(y);
}

} // namespace

double paschke_objective(int d, int g, double s) {
    // (1 + cosh(sg)) / (sinh(sg) sinh(s)) = coth(sg/2) / sinh(s),
    // which stays finite long after cosh(sg) overflows.
    const double t = coth(s * g / 2.0) / std::sinh(s);
    const double phi = t / (1.0 + std::sqrt(1.0 + t * t));
    return (d - 2) * phi + 2.0 * std::cosh(s);
}

PaschkeResult paschke(int d, int g) {
    if (d < 3 || g < 3) throw InputError("cycle-expansion formula needs d >= 3 and g >= 3");
    // Coarse log-spaced scan guards against local minima; golden-section
    // refinement runs on the bracketing neighbors of the grid minimum.
    const int grid = 4000;
    const double lo = 1e-4, hi = 10.0;
    const double step = std::log(hi / lo) / (grid - 1);
    int best_i = 0;
    double best_v = 0.0;
    std::vector<double> svals(grid);
    for (int i = 0; i < grid; ++i) {
        svals[i] = lo * std::exp(i * step);
        double v = paschke_objective(d, g, svals[i]);
        if (i == 0 || v < best_v) {
            best_v = v;
            best_i = i;
        }
    }
    double a = svals[std::max(0, best_i - 1)];
    double b = svals[std::min(grid - 1, best_i + 1)];
    const double gr = (std::sqrt(5.0) + 1.0) / 2.0;
    double c = b - (b - a) / gr;
    double e = a + (b - a) / gr;
    for (int iter = 0; iter < 200 && (b - a) > 1e-13; ++iter) {
        if (paschke_objective(d, g, c) < paschke_objective(d, g, e)) b = e;
        else a = c;
        c = b - (b - a) / gr;
        e = a + (b - a) / gr;
    }
    PaschkeResult out;
    out.s_star = 0.5 * (a + b);
    out.rho = paschke_objective(d, g, out.s_star);
    const double base = 2.0 * std::sqrt(static_cast<double>(d - 1));
    out.h = (out.rho - base) * std::pow(static_cast<double>(d - 1), (g + 1) / 2.0) /
            (2.0 * (d - 2));
    return out;
}

double paschke_rho(int d, int g) { return paschke(d, g).rho; }

double paschke_h(int d, int g) { return paschke(d, g).h; }

} // namespace rlab
