#ifndef RLAB_PROJECT_HPP
#define RLAB_PROJECT_HPP

#include <cstdint>
#include <vector>

#include "rlab/degmat.hpp"
#include "rlab/graph.hpp"
#include "rlab/treeball.hpp"

namespace rlab {

enum class ProjectStatus {
    Success,   // locally 1-1 class-respecting homomorphism found
    Stuck,     // greedy: first tree vertex whose edge star cannot be matched
    Refuted,   // backtracking: exhaustive search found no mapping
    Budget,    // backtracking: node budget exhausted before a decision
};

struct Projection {
    ProjectStatus status = ProjectStatus::Stuck;
    TypedTreeBall ball;              // the radius-r cover-tree ball searched
    std::vector<int> map;            // tree vertex -> host vertex (Success)
    int witness = -1;                // Stuck: tree vertex with unmatchable star
    std::int64_t nodes_explored = 0;
};

/// Map the radius-r cover-tree ball rooted at class start_class into g,
/// root at start, classes landing in their subsets, edge-preserving and
/// injective on every vertex star. Greedy mode follows breadth-first
/// order picking the smallest host index; backtracking mode is complete
/// up to the node budget.
Projection subuniversal_project(const Graph& g, const DegreeMatrix& d,
                                const std::vector<VertexSet>& subsets, int start,
                                int start_class, int r, bool backtracking,
                                std::int64_t node_budget = 0 /* 0 = default cap */);

} // namespace rlab

#endif
