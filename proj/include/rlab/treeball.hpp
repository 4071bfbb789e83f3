#ifndef RLAB_TREEBALL_HPP
#define RLAB_TREEBALL_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rlab/degmat.hpp"
#include "rlab/graph.hpp"

namespace rlab {

/// Finite rooted ball of one of the infinite structures: the cover tree
/// of a degree matrix, the root-deficient regular tree, or the
/// cycle-expanded regular graph. Class labels are 1-based.
struct TypedTreeBall {
    Graph graph;              // labeled
    int root = 0;
    int radius = 0;
    std::vector<int> depth;   // per-vertex distance from root
    std::string source;       // "cover", "deficient", "cycle_expanded"
};

/// Radius-r ball of the cover tree of D around a class root_class vertex
/// (0-based class). Root gets d_{ij} children of class j; a non-root of
/// class j under a class-p parent gets d_jq children of class q except
/// d_jp - 1 of the parent class. Throws InstanceTooLarge over the ball cap.
TypedTreeBall tree_ball(const DegreeMatrix& d, int root_class, int r);

/// Radius-r ball of the d-regular tree with one root edge removed:
/// root degree d-1, interior degree d.
TypedTreeBall deficient_tree_ball(int d, int r);

/// Radius-r ball (graph distance) of the d-regular graph obtained from
/// the (d-2)g-regular tree by expanding every tree vertex into a
/// g-cycle, each cycle vertex carrying d-2 of the tree edges. The root
/// is a cycle vertex; the construction is the same from every vertex.
TypedTreeBall cycle_expanded_ball(int d, int g, int r);

/// Equitable quotient of a cover-tree ball. States are keyed by
/// (depth, class, parent class) whenever every state has a unique parent
/// state; otherwise states are refined by the parent state itself so the
/// partition stays equitable (refined = true).
struct QuotientState {
    int depth = 0;
    int cls = 0;         // 0-based class
    int parent_cls = -1; // -1 at the root
    int parent = -1;     // parent state index, -1 at the root
};

struct QuotientMatrix {
    std::vector<QuotientState> states;  // index 0 = root; parent < index
    // Down-transitions (child state, count); the up-transition to the
    // parent state always has count 1.
    std::vector<std::vector<std::pair<int, std::int64_t>>> children;
    bool refined = false;

    int order() const { return static_cast<int>(states.size()); }
    std::int64_t row_sum(int state) const;
    /// Dense row-major counts; guarded against large orders.
    std::vector<std::int64_t> dense(int max_order = 4096) const;
};

QuotientMatrix quotient(const DegreeMatrix& d, int root_class, int r);

/// Spectral radius of the quotient matrix, exact to ~1e-13 via sign
/// bisection of the leaf-first LDL pivots of its symmetrized form.
double quotient_rho(const QuotientMatrix& q);

/// Spectral radius of tree_ball(d, root_class, r) computed on the cone
/// types (depth, class, parent class) without materializing the ball;
/// O(r t^2) per bisection step.
double ball_quotient_rho(const DegreeMatrix& d, int root_class, int r);

/// Certified upper bound on the spectral radius of the infinite cover
/// tree: the smallest lambda (within tol) for which the cone-type
/// recursion has a positive fixed point that also satisfies the root
/// supersolution inequality. Always >= the true value.
double cover_rho_upper(const DegreeMatrix& d, int root_class, double tol = 1e-12);

} // namespace rlab

#endif
