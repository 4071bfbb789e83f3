#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "rlab/errors.hpp"
#include "rlab/io.hpp"
#include "rlab/spectral.hpp"
#include "rlab/treeball.hpp"

using namespace rlab;

namespace {

// Every interior vertex of class i must see exactly the prescribed
// number of neighbors of each class (root exactly; deeper interior
// vertices counting their parent).
void check_degree_rule(const TypedTreeBall& b, const DegreeMatrix& d) {
    const Graph& g = b.graph;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (b.depth[v] == b.radius) continue;
        std::vector<std::int64_t> counts(d.order(), 0);
        for (int w : g.neighbors(v)) ++counts[g.label(w) - 1];
        for (int j = 0; j < d.order(); ++j) CHECK(counts[j] == d.at(g.label(v) - 1, j));
    }
    CHECK(g.edge_count() == g.vertex_count() - 1);  // tree identity
}

} // namespace

TEST_CASE("cover-tree balls") {
    auto d = DegreeMatrix::from_rows({{0, 3}, {2, 0}});
    auto b = tree_ball(d, 0, 1);
    CHECK(b.graph.vertex_count() == 4);
    CHECK(b.graph.degree(0) == 3);
    CHECK(b.graph.label(0) == 1);
    for (int v = 1; v < 4; ++v) CHECK(b.graph.label(v) == 2);

    auto cubic = tree_ball(DegreeMatrix::from_rows({{3}}), 0, 2);
    CHECK(cubic.graph.vertex_count() == 10);
    check_degree_rule(cubic, DegreeMatrix::from_rows({{3}}));

    // a finite cover tree: single edge no matter the radius
    auto edge = tree_ball(DegreeMatrix::from_rows({{0, 1}, {1, 0}}), 0, 5);
    CHECK(edge.graph.vertex_count() == 2);
    CHECK(edge.graph.edge_count() == 1);
}

TEST_CASE("degree rule holds across a grid of matrices") {
    std::vector<DegreeMatrix> ms = {DegreeMatrix::from_rows({{0, 3}, {2, 0}}),
                                    DegreeMatrix::from_rows({{1, 2}, {1, 1}}),
                                    DegreeMatrix::from_rows({{0, 2, 1}, {2, 0, 1}, {1, 1, 0}}),
                                    DegreeMatrix::from_rows({{0, 2}, {2, 1}})};
    for (const auto& m : ms)
        for (int cls = 0; cls < m.order(); ++cls)
            for (int r = 0; r <= 4; ++r) check_degree_rule(tree_ball(m, cls, r), m);
}

TEST_CASE("deficient tree balls") {
    auto p3 = deficient_tree_ball(3, 1);
    CHECK(p3.graph.vertex_count() == 3);
    CHECK(p3.graph.degree(0) == 2);
    CHECK(deficient_tree_ball(3, 2).graph.vertex_count() == 7);
    auto path = deficient_tree_ball(2, 5);
    CHECK(path.graph.vertex_count() == 6);
    CHECK(max_degree(path.graph) == 2);
    CHECK(path.graph.edge_count() == 5);
}

TEST_CASE("cycle-expanded balls") {
    CHECK(cycle_expanded_ball(4, 4, 1).graph.vertex_count() == 5);
    CHECK(cycle_expanded_ball(3, 3, 1).graph.vertex_count() == 4);
    CHECK(cycle_expanded_ball(5, 7, 0).graph.vertex_count() == 1);
    // interior vertices reach full degree d; a g-cycle passes through the root
    for (auto [d, g] : std::vector<std::pair<int, int>>{{3, 5}, {4, 4}, {5, 3}}) {
        auto b = cycle_expanded_ball(d, g, 4);
        for (int v = 0; v < b.graph.vertex_count(); ++v) {
            CHECK(b.graph.degree(v) <= d);
            if (b.depth[v] < b.radius - 1) CHECK(b.graph.degree(v) == d);
        }
        CHECK(*retracting_free_girth(b.graph, b.root) == g);
        CHECK(*girth(b.graph) == g);
    }
}

TEST_CASE("cycle-expanded balls look the same from every vertex") {
    // ball around an interior vertex of a bigger ball == direct ball
    auto big = cycle_expanded_ball(4, 4, 5);
    int probe = -1;
    for (int v = 0; v < big.graph.vertex_count(); ++v)
        if (big.depth[v] == 2) {
            probe = v;
            break;
        }
    REQUIRE(probe >= 0);
    auto sub = ball(big.graph, probe, 3);
    auto direct = cycle_expanded_ball(4, 4, 3);
    CHECK(sub.graph.vertex_count() == direct.graph.vertex_count());
    CHECK(sub.graph.edge_count() == direct.graph.edge_count());
    CHECK(spectral_radius(sub.graph) ==
          doctest::Approx(spectral_radius(direct.graph)).epsilon(1e-9));
}

TEST_CASE("quotient of the regular tree ball is tridiagonal") {
    auto d3 = DegreeMatrix::from_rows({{3}});
    auto q = quotient(d3, 0, 4);
    REQUIRE(q.order() == 5);
    CHECK_FALSE(q.refined);
    auto dense = q.dense();
    auto at = [&](int i, int j) { return dense[static_cast<std::size_t>(i) * q.order() + j]; };
    CHECK(at(0, 1) == 3);
    for (int i = 1; i < 4; ++i) CHECK(at(i, i + 1) == 2);
    for (int i = 1; i <= 4; ++i) CHECK(at(i, i - 1) == 1);
    // row sums at interior states equal the class degree
    for (int s = 0; s + 1 < q.order(); ++s) CHECK(q.row_sum(s) == 3);
}

TEST_CASE("quotient spectral radius equals the explicit ball") {
    auto d3 = DegreeMatrix::from_rows({{3}});
    for (int r = 1; r <= 6; ++r) {
        double via_quotient = quotient_rho(quotient(d3, 0, r));
        double via_ball = tree_graph_rho(tree_ball(d3, 0, r).graph);
        CHECK(via_quotient == doctest::Approx(via_ball).epsilon(1e-9));
    }
    CHECK(quotient_rho(quotient(DegreeMatrix::from_rows({{5}}), 0, 1)) ==
          doctest::Approx(std::sqrt(5.0)).epsilon(1e-10));
    CHECK(quotient(d3, 0, 0).order() == 1);
    CHECK(quotient_rho(quotient(d3, 0, 0)) == 0.0);
}

TEST_CASE("quotient matches the ball across matrices, including refined states") {
    std::vector<DegreeMatrix> ms = {DegreeMatrix::from_rows({{0, 3}, {2, 0}}),
                                    DegreeMatrix::from_rows({{1, 2}, {1, 1}}),
                                    DegreeMatrix::from_rows({{0, 2, 1}, {2, 0, 1}, {1, 1, 0}}),
                                    DegreeMatrix::from_rows({{0, 2}, {2, 1}}),
                                    DegreeMatrix::from_rows({{0, 4, 0}, {1, 0, 3}, {0, 2, 0}})};
    bool saw_refined = false;
    for (const auto& m : ms)
        for (int cls = 0; cls < m.order(); ++cls)
            for (int r = 1; r <= 6; ++r) {
                auto q = quotient(m, cls, r);
                saw_refined = saw_refined || q.refined;
                double via_quotient = quotient_rho(q);
                double via_ball = tree_graph_rho(tree_ball(m, cls, r).graph);
                double via_cone = ball_quotient_rho(m, cls, r);
                CHECK(via_quotient == doctest::Approx(via_ball).epsilon(1e-8));
                CHECK(via_cone == doctest::Approx(via_ball).epsilon(1e-8));
            }
    CHECK(saw_refined);  // the grid must exercise the ambiguous-parent path
}

TEST_CASE("cone-type radius agrees with dense eigensolves on random matrices") {
    std::mt19937 rng(515);
    std::uniform_int_distribution<int> order_dist(1, 3), entry_dist(0, 3);
    int validated = 0;
    while (validated < 60) {
        int t = order_dist(rng);
        std::vector<std::vector<std::int64_t>> rows(t, std::vector<std::int64_t>(t));
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j) rows[i][j] = entry_dist(rng);
        auto d = DegreeMatrix::from_rows(rows);
        if (!validate(d).valid) continue;
        ++validated;
        int cls = std::uniform_int_distribution<int>(0, t - 1)(rng);
        int r = std::uniform_int_distribution<int>(1, 5)(rng);
        auto b = tree_ball(d, cls, r);
        while (r > 1 && b.graph.vertex_count() > 400) b = tree_ball(d, cls, --r);
        double dense = eigen_full(b.graph).rho();
        CHECK(ball_quotient_rho(d, cls, r) == doctest::Approx(dense).epsilon(1e-8));
        CHECK(quotient_rho(quotient(d, cls, r)) == doctest::Approx(dense).epsilon(1e-8));
    }
}

TEST_CASE("ball radius grows the spectral radius toward the matrix bound") {
    std::vector<DegreeMatrix> ms = {DegreeMatrix::from_rows({{3}}),
                                    DegreeMatrix::from_rows({{0, 3}, {2, 0}}),
                                    DegreeMatrix::from_rows({{0, 2, 1}, {2, 0, 1}, {1, 1, 0}})};
    for (const auto& m : ms) {
        double rho_d = degree_matrix_spectrum(m).rho();
        double prev = 0.0;
        for (int r = 1; r <= 12; ++r) {
            double cur = ball_quotient_rho(m, 0, r);
            CHECK(cur > prev);
            CHECK(cur <= rho_d + 1e-9);
            prev = cur;
        }
    }
}

TEST_CASE("certified upper bound brackets the ball values") {
    auto d3 = DegreeMatrix::from_rows({{3}});
    double upper = cover_rho_upper(d3, 0);
    CHECK(upper == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-9));
    CHECK(upper >= ball_quotient_rho(d3, 0, 2000));
    auto edge = DegreeMatrix::from_rows({{0, 1}, {1, 0}});
    CHECK(cover_rho_upper(edge, 0) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("ball export with labels") {
    auto b = tree_ball(DegreeMatrix::from_rows({{0, 3}, {2, 0}}), 0, 2);
    std::stringstream graph_out, labels_out;
    write_graph(graph_out, b.graph);
    write_ball_labels(labels_out, b);
    auto back = parse_graph(graph_out);
    CHECK(back.vertex_count() == b.graph.vertex_count());
    std::string first_line;
    std::getline(labels_out, first_line);
    CHECK(first_line == "0 1 0");  // root: vertex 0, class 1, depth 0
}

TEST_CASE("ball cap is enforced") {
    CHECK_THROWS_AS(tree_ball(DegreeMatrix::from_rows({{3}}), 0, 60), InstanceTooLarge);
}
