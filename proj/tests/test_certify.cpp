#include <doctest.h>

#include <cmath>

#include "rlab/certify.hpp"
#include "rlab/errors.hpp"
#include "rlab/realize.hpp"
#include "rlab/spectral.hpp"
#include "test_helpers.hpp"

using namespace rlab;
namespace oracle = rlab::testing;

namespace {

std::vector<VertexSet> whole_vertex_set(const Graph& g, int classes) {
    VertexSet all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
    return std::vector<VertexSet>(classes, all);
}

} // namespace

TEST_CASE("classic certification fixtures") {
    CHECK(ramanujan_classic(petersen_graph()).verdict == Verdict::Yes);
    CHECK(ramanujan_classic(complete_graph(4)).verdict == Verdict::Yes);
    auto prism = ramanujan_classic(prism_graph(24));
    CHECK(prism.verdict == Verdict::No);
    CHECK(prism.compared_eigenvalue ==
          doctest::Approx(1.0 + 2.0 * std::cos(M_PI / 12.0)).epsilon(1e-9));
    CHECK(prism.compared_eigenvalue - prism.threshold_hi > 0.1);
    CHECK_THROWS_AS(ramanujan_classic(star_graph(3)), HypothesisError);
}

TEST_CASE("degree-matrix certification fixtures") {
    auto c6 = cycle_graph(6);
    std::vector<VertexSet> alternating = {{0, 2, 4}, {1, 3, 5}};
    auto rep = ramanujan_degree_matrix(c6, alternating, DegreeMatrix::from_rows({{0, 2}, {2, 0}}),
                                       true);
    CHECK(rep.verdict == Verdict::Yes);
    CHECK(rep.k == 1);
    CHECK(rep.compared_eigenvalue == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(rep.threshold_lo == doctest::Approx(2.0));
    CHECK(rep.threshold_hi == doctest::Approx(2.0));

    // the regular case embedded as a one-class matrix
    auto k4 = realize(DegreeMatrix::from_rows({{3}}));
    auto rep2 = ramanujan_degree_matrix(k4.graph, k4.partition, DegreeMatrix::from_rows({{3}}),
                                        true);
    CHECK(rep2.verdict == Verdict::Yes);
    CHECK(rep2.verdict == ramanujan_classic(k4.graph).verdict);

    auto k23 = complete_bipartite(2, 3);
    std::vector<VertexSet> sides = {{0, 1}, {2, 3, 4}};
    auto rep3 =
        ramanujan_degree_matrix(k23, sides, DegreeMatrix::from_rows({{0, 3}, {2, 0}}), true);
    CHECK(rep3.verdict == Verdict::Yes);
    CHECK(rep3.k == 1);
    CHECK(rep3.compared_eigenvalue == doctest::Approx(0.0).scale(1.0).epsilon(1e-9));
    CHECK(rep3.threshold_lo == doctest::Approx(1.0 + std::sqrt(2.0)));

    // wrong partition for the matrix: hypothesis violation
    CHECK_THROWS_AS(
        ramanujan_degree_matrix(c6, alternating, DegreeMatrix::from_rows({{0, 1}, {1, 0}}), true),
        HypothesisError);
}

TEST_CASE("two eigenvalues of D above the cover value give k = 2") {
    // D = [[8,1],[1,8]] has spectrum {9, 7}; the cover tree is the
    // 9-regular tree with value 2 sqrt(8) ~ 5.657, so both count.
    auto d = DegreeMatrix::from_rows({{8, 1}, {1, 8}});
    auto r = realize(d);
    // two complete blocks joined by a perfect matching: spectrum {9, 7, 0^8, -2^8}
    CHECK(r.graph.vertex_count() == 18);
    auto rep = ramanujan_degree_matrix(r.graph, r.partition, d, true);
    CHECK(rep.k == 2);
    CHECK(rep.k_determined);
    CHECK(rep.verdict == Verdict::Yes);
    CHECK(rep.compared_eigenvalue == doctest::Approx(0.0).scale(1.0).epsilon(1e-8));
}

TEST_CASE("an eigenvalue of D inside the bracket leaves the verdict open") {
    // D = [[8,2],[2,8]] has lambda_2 = 6 = 2 sqrt(9), exactly the
    // 10-regular cover-tree value: no bracket can separate them.
    auto d = DegreeMatrix::from_rows({{8, 2}, {2, 8}});
    auto r = realize(d);
    auto rep = ramanujan_degree_matrix(r.graph, r.partition, d, true);
    CHECK_FALSE(rep.k_determined);
    CHECK(rep.ambiguous_index == 2);
    CHECK(rep.verdict == Verdict::Indeterminate);
    CHECK(rep.threshold_lo <= 6.0);
    CHECK(rep.threshold_hi >= 6.0 - 1e-9);
}

TEST_CASE("certified verdicts stay consistent with a much tighter bracket") {
    // matrices without closed forms exercise the bracket path
    std::vector<DegreeMatrix> ms = {DegreeMatrix::from_rows({{1, 2}, {1, 1}}),
                                    DegreeMatrix::from_rows({{0, 2, 1}, {2, 0, 1}, {1, 1, 0}})};
    for (const auto& m : ms) {
        auto r = realize(m);
        auto rep = ramanujan_degree_matrix(r.graph, r.partition, m, true);
        auto tight = rho_universal_cover(m, 0, 1e-12, 8192);
        if (rep.verdict == Verdict::Yes)
            CHECK(rep.compared_eigenvalue <= tight.upper + 1e-9);
        if (rep.verdict == Verdict::No)
            CHECK(rep.compared_eigenvalue > tight.lower - 1e-9);
    }
}

TEST_CASE("count verification on prisms and trivial thresholds") {
    auto rep = serre_verify(prism_graph(100), 3, 3, 0.5);
    CHECK(rep.pass);
    CHECK(rep.count >= rep.required);
    CHECK(rep.threshold == doctest::Approx(2.0 * std::sqrt(2.0) - 0.5));

    // threshold below -rho counts everything
    auto trivial = serre_verify(petersen_graph(), 3, 3, 4.0 * std::sqrt(2.0) + 0.1);
    CHECK(trivial.pass);
    CHECK(trivial.count == 10);

    CHECK_THROWS_AS(serre_verify(star_graph(3), 2, 3, 0.5), HypothesisError);
    CHECK_THROWS_AS(serre_verify(petersen_graph(), 3, 2, 0.5), HypothesisError);
}

TEST_CASE("count verification for regular graphs at several tolerances") {
    std::vector<Graph> suite = {prism_graph(50), cycle_graph(60),
                                oracle::random_regular(60, 3, 7u),
                                oracle::random_regular(600, 3, 11u)};
    for (const auto& g : suite) {
        int d = g.degree(0);
        for (double eps : {0.25, 0.5, 1.0}) {
            auto rep = serre_verify(g, d, d, eps);
            CHECK(rep.pass);
        }
    }
}

TEST_CASE("degree-matrix count verification") {
    auto k23 = complete_bipartite(2, 3);
    std::vector<VertexSet> sides = {{0, 1}, {2, 3, 4}};
    auto rep = serre_verify_degmat(k23, sides, DegreeMatrix::from_rows({{0, 3}, {2, 0}}), 3, 0.5);
    CHECK(rep.pass);
    CHECK(rep.count >= 1);
    CHECK(rep.threshold == doctest::Approx(1.0 + std::sqrt(2.0) - 0.5).epsilon(1e-6));
}

TEST_CASE("girth boost: bounded universal girth lifts the threshold") {
    auto k6 = girth_boost_verify(complete_graph(6), 5, 5, 10);
    CHECK(k6.universal_girth == 3);
    CHECK(k6.limit_rho > 4.0);
    CHECK(k6.conclusive);
    CHECK(k6.delta > 0.0);
    CHECK(k6.count >= 1);  // lambda_1 = 5 clears any threshold 4 + delta <= 5
    CHECK(k6.pass);

    auto pet = girth_boost_verify(petersen_graph(), 3, 3, 20);
    CHECK(pet.universal_girth == 5);
    CHECK(pet.limit_rho > 2.0 * std::sqrt(2.0));
    if (pet.conclusive) {
        CHECK(pet.delta > 0.0);
        CHECK(pet.pass);
    }

    // bipartite hosts work as long as the universal girth exists
    auto k33 = girth_boost_verify(complete_bipartite(3, 3), 3, 3, 12);
    CHECK(k33.universal_girth == 4);
    CHECK(k33.limit_rho > 2.0 * std::sqrt(2.0));

    CHECK_THROWS_AS(girth_boost_verify(petersen_graph(), 3, 3, 4), HypothesisError);
}

TEST_CASE("negative side on odd cycles") {
    auto rep = negative_side_verify(cycle_graph(101), 2, 2);
    CHECK(rep.applicable);
    CHECK(rep.odd_girth == 101);
    CHECK(rep.radius == 49);
    CHECK(rep.balls_bipartite);
    CHECK(rep.threshold ==
          doctest::Approx(-2.0 * (1.0 - std::pow(2.0 * M_PI / 101.0, 2.0))));
    CHECK(rep.count >= 1);
    CHECK(rep.pass);
    // cosine spectrum oracle: eigenvalues 2cos(2 pi k / 101)
    auto spec = eigen_full(cycle_graph(101));
    int expected = 0;
    for (int k = 0; k < 101; ++k)
        if (2.0 * std::cos(2.0 * M_PI * k / 101.0) < rep.threshold - 1e-9) ++expected;
    CHECK(rep.count == expected);
}

TEST_CASE("negative side on bipartite hosts reports spectral symmetry") {
    for (const auto& g : {complete_bipartite(3, 3), cycle_graph(8), prism_graph(8)}) {
        auto rep = negative_side_verify(g, 2, max_degree(g));
        CHECK(rep.bipartite);
        CHECK(rep.symmetry_defect <= 1e-7);
        CHECK(rep.pass);
    }
}

TEST_CASE("negative side needs odd girth at least five") {
    auto pet = negative_side_verify(petersen_graph(), 3, 3);
    CHECK(pet.applicable);  // odd girth 5, radius 1, star balls are trees
    CHECK(pet.radius == 1);
    CHECK(pet.balls_bipartite);

    auto k4 = negative_side_verify(complete_graph(4), 3, 3);
    CHECK_FALSE(k4.applicable);  // odd girth 3 leaves no usable radius
}

TEST_CASE("negative side, degree-matrix form") {
    auto c6 = cycle_graph(6);
    std::vector<VertexSet> alternating = {{0, 2, 4}, {1, 3, 5}};
    auto rep = negative_side_verify_degmat(c6, alternating,
                                           DegreeMatrix::from_rows({{0, 2}, {2, 0}}), 2, 1.5);
    CHECK(rep.applicable);
    CHECK(rep.threshold == doctest::Approx(-0.5));
    CHECK(rep.count == 3);
    CHECK(rep.pass);
    // bipartite mirror: counts match on both sides
    CHECK(rep.mirrored_count == rep.count);

    // a host with too small an odd girth is inapplicable
    auto k4 = complete_graph(4);
    auto rep2 = negative_side_verify_degmat(k4, whole_vertex_set(k4, 2),
                                            DegreeMatrix::from_rows({{0, 2}, {2, 0}}), 3, 0.2);
    CHECK_FALSE(rep2.applicable);
}

TEST_CASE("small odd girth forces bipartite balls") {
    // odd girth >= 2r+3 makes every r-ball bipartite
    std::vector<Graph> suite = {petersen_graph(), cycle_graph(9), cycle_graph(15),
                                oracle::random_regular(24, 3, 5u)};
    for (const auto& g : suite) {
        auto og = odd_girth(g).length;
        if (!og) continue;
        int r = (*og - 3) / 2;
        if (r < 1) continue;
        for (int v = 0; v < g.vertex_count(); ++v)
            CHECK_FALSE(odd_girth(ball(g, v, r).graph).length.has_value());
    }
}

TEST_CASE("interlacing chain on well-separated balls") {
    for (int n : {12, 24}) {
        auto g = prism_graph(n);
        auto spec = eigen_full(g).values;
        for (int r : {1, 2}) {
            auto centers = r_apart_greedy(g, 2 * r + 1);
            int k = static_cast<int>(centers.size());
            REQUIRE(k >= 1);
            double min_ball_rho = 1e300;
            for (int v : centers)
                min_ball_rho = std::min(min_ball_rho, eigen_full(ball(g, v, r).graph).rho());
            CHECK(spec[k - 1] >= min_ball_rho - 1e-8);
        }
    }
}
