#ifndef RLAB_REALIZE_HPP
#define RLAB_REALIZE_HPP

#include <cstdint>
#include <vector>

#include "rlab/degmat.hpp"
#include "rlab/graph.hpp"

namespace rlab {

/// Finite graph with an equitable partition realizing a degree matrix.
struct Realization {
    Graph graph;                       // labeled by class (1-based)
    std::vector<VertexSet> partition;  // per class, disjoint, covers V
    std::int64_t multiplier = 1;       // class sizes are multiplier * minimal
    bool scaled = false;               // multiplier > 1
};

/// Canonical circulant realization: class i gets multiplier * n_i
/// vertices (n from class_sizes); cross blocks are biregular via
/// consecutive-residue assignment, diagonal blocks are circulant regular
/// graphs. The multiplier is the smallest value >= min_multiplier that
/// makes every block constructible as a simple graph.
Realization realize(const DegreeMatrix& d, std::int64_t min_multiplier = 1);

/// Per-vertex witness of a failed neighbor-count check.
struct PartitionWitness {
    int vertex = -1;
    int cls = -1;        // class of the vertex (0-based)
    int other = -1;      // class counted against
    std::int64_t expected = 0;
    std::int64_t actual = 0;
};

/// True iff the partition is disjoint, covers all vertices, and every
/// vertex of class i has exactly d_ij neighbors in class j.
bool verify_equitable(const Graph& g, const std::vector<VertexSet>& partition,
                      const DegreeMatrix& d, PartitionWitness* witness = nullptr);

/// True iff every vertex of subset i has at least d_ij + slack neighbors
/// in subset j. Subsets may overlap; require_cover additionally demands
/// that their union is the whole vertex set.
bool verify_subdegree(const Graph& g, const std::vector<VertexSet>& subsets,
                      const DegreeMatrix& d, int slack, bool require_cover = false,
                      PartitionWitness* witness = nullptr);

} // namespace rlab

#endif
