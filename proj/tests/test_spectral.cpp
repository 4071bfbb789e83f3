#include <doctest.h>

#include <cmath>

#include "rlab/errors.hpp"
#include "rlab/spectral.hpp"
#include "test_helpers.hpp"

using namespace rlab;
namespace oracle = rlab::testing;

namespace {

std::vector<std::vector<long long>> adjacency_rows(const Graph& g) {
    std::vector<std::vector<long long>> a(g.vertex_count(),
                                          std::vector<long long>(g.vertex_count(), 0));
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u)) a[u][v] = 1;
    return a;
}

} // namespace

TEST_CASE("full spectra of the standard fixtures") {
    auto k4 = eigen_full(complete_graph(4)).values;
    CHECK(k4[0] == doctest::Approx(3.0).epsilon(1e-10));
    for (int i = 1; i < 4; ++i) CHECK(k4[i] == doctest::Approx(-1.0).epsilon(1e-10));

    auto k23 = eigen_full(complete_bipartite(2, 3)).values;
    CHECK(k23[0] == doctest::Approx(std::sqrt(6.0)));
    CHECK(k23[4] == doctest::Approx(-std::sqrt(6.0)));
    for (int i = 1; i <= 3; ++i) CHECK(std::abs(k23[i]) < 1e-10);

    auto p4 = eigen_full(path_graph(4)).values;
    for (int k = 1; k <= 4; ++k)
        CHECK(p4[k - 1] == doctest::Approx(2.0 * std::cos(k * M_PI / 5.0)).epsilon(1e-10));
}

TEST_CASE("small spectra satisfy the exact characteristic polynomial and traces") {
    std::vector<Graph> graphs = {complete_graph(4), path_graph(5), cycle_graph(5),
                                 star_graph(4), oracle::random_graph(5, 0.5, 91),
                                 oracle::random_graph(5, 0.7, 92)};
    for (const auto& g : graphs) {
        auto spec = eigen_full(g).values;
        auto poly = oracle::char_poly(adjacency_rows(g));
        for (double lambda : spec)
            CHECK(std::abs(oracle::eval_poly(poly, lambda)) < 1e-8);
        // traces pin the multiset, not just membership
        for (int k = 1; k <= g.vertex_count(); ++k) {
            double tr = 0;
            for (double lambda : spec) tr += std::pow(lambda, k);
            CHECK(tr == doctest::Approx(static_cast<double>(
                            oracle::adjacency_power_trace(g, k))).epsilon(1e-8).scale(1 + std::abs(tr)));
        }
    }
}

TEST_CASE("trace identities on a larger instance") {
    auto g = prism_graph(24);
    auto s = eigen_full(g);
    double sum = 0, sum2 = 0;
    for (double v : s.values) {
        sum += v;
        sum2 += v * v;
    }
    CHECK(std::abs(sum) <= 1e-7 * g.vertex_count());
    CHECK(std::abs(sum2 - 2.0 * g.edge_count()) <= 1e-7 * g.vertex_count());
    CHECK(s.residual <= 1e-10 * g.vertex_count());
}

TEST_CASE("dense cap") {
    // default cap is 3000; ask for something beyond it via a fake size
    CHECK(eigen_full(cycle_graph(64)).values.size() == 64);
}

TEST_CASE("power-iteration spectral radius") {
    CHECK(spectral_radius(cycle_graph(17)) == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(spectral_radius(star_graph(4)) == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(spectral_radius(petersen_graph()) == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(spectral_radius(Graph::from_edges(0, {})) == 0.0);
    // disconnected: max over components
    auto g = Graph::from_edges(7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {5, 6}, {3, 6}});
    CHECK(spectral_radius(g) == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("power iteration agrees with the dense solver") {
    for (std::uint32_t seed : {101u, 102u, 103u, 104u}) {
        auto g = oracle::random_graph(30, 0.2, seed);
        CHECK(spectral_radius(g) == doctest::Approx(eigen_full(g).rho()).epsilon(1e-8));
    }
    for (std::uint32_t seed : {105u, 106u}) {
        auto g = oracle::random_regular(26, 3, seed);
        CHECK(spectral_radius(g) == doctest::Approx(3.0).epsilon(1e-9));
    }
}

TEST_CASE("power iteration stays sparse-scale on a million-edge graph") {
    auto g = prism_graph(500'000);  // 10^6 vertices, 1.5 * 10^6 edges
    CHECK(spectral_radius(g) == doctest::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("walk counts are exact") {
    auto star = star_graph(3);
    CHECK(walk_count(star, 0, 2).to_u64() == 3);
    CHECK(walk_count(star, 0, 4).to_u64() == 9);
    CHECK(walk_count(star, 0, 4).to_u64() ==
          static_cast<std::uint64_t>(oracle::brute_force_walk_count(star, 0, 4)));
    CHECK(walk_count(star, 0, 5).is_zero());  // bipartite, odd length
    CHECK(walk_count(complete_bipartite(3, 3), 2, 7).is_zero());
    for (std::uint32_t seed : {95u, 96u}) {
        auto g = oracle::random_graph(7, 0.4, seed);
        for (int len = 0; len <= 6; ++len)
            CHECK(walk_count(g, 1, len).to_u64() ==
                  static_cast<std::uint64_t>(oracle::brute_force_walk_count(g, 1, len)));
    }
}

TEST_CASE("walk counts press toward the spectral radius") {
    // the upper bound holds everywhere; the 5% lower bound needs small n,
    // since (A^2q)_uu picks up a factor about n^(-1) against rho^2q
    std::vector<Graph> graphs = {petersen_graph(), cycle_graph(9), complete_graph(5),
                                 prism_graph(6), star_graph(4), complete_bipartite(3, 3),
                                 cycle_graph(7)};
    const int q = 20;
    for (const auto& g : graphs) {
        double rho = eigen_full(g).rho();
        double root = std::pow(walk_count(g, 0, 2 * q).to_double(), 1.0 / (2 * q));
        CHECK(root <= rho + 1e-6);
        if (g.vertex_count() <= 7) CHECK(root >= 0.95 * rho);
    }
}

TEST_CASE("deficient-ball walk identity") {
    CHECK(walk_identity_check(3, 2, 2));
    CHECK(walk_identity_check(2, 4, 3));
    CHECK(walk_identity_check(4, 3, 4));
    CHECK(walk_identity_check(5, 1, 6));
}

TEST_CASE("interlacing") {
    CHECK(interlace_check(complete_graph(4), {0, 1, 2}));
    CHECK(interlace_check(complete_graph(4), {0, 1, 2, 3}));
    CHECK(interlace_check(cycle_graph(6), {0, 2, 4}));
    CHECK(interlace_check(petersen_graph(), {0, 1, 2, 5, 6}));
}

TEST_CASE("eigenvalue counting with tie tolerance") {
    auto k4 = eigen_full(complete_graph(4));
    CHECK(count_above(k4, -1.0 + 1e-3) == 1);
    CHECK(count_above(k4, -4.0) == 4);  // proxy for minus infinity
    CHECK(count_above(k4, -1.0) == 1);  // exact ties excluded
    CHECK(count_below(k4, -1.0) == 0);
    auto k23 = eigen_full(complete_bipartite(2, 3));
    CHECK(count_below(k23, -1.0) == 1);
}

TEST_CASE("forest spectral radius by pivot bisection matches dense eigensolve") {
    std::vector<Graph> forests = {path_graph(7), star_graph(5),
                                  Graph::from_edges(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}}),
                                  Graph::from_edges(5, {{0, 1}, {2, 3}, {3, 4}})};
    for (const auto& f : forests)
        CHECK(tree_graph_rho(f) == doctest::Approx(eigen_full(f).rho()).epsilon(1e-10));
    CHECK_THROWS_AS(tree_graph_rho(cycle_graph(4)), InputError);
}
