#include "rlab/realize.hpp"

#include <numeric>

#include "rlab/caps.hpp"
#include "rlab/errors.hpp"

namespace rlab {

namespace {

bool multiplier_works(const DegreeMatrix& d, const std::vector<std::int64_t>& n,
                      std::int64_t m) {
    const int t = d.order();
    for (int i = 0; i < t; ++i) {
        std::int64_t size_i = m * n[i];
        if (d.at(i, i) > 0) {
            if (d.at(i, i) > size_i - 1) return false;
            if ((size_i * d.at(i, i)) % 2 != 0) return false;
        }
        for (int j = 0; j < t; ++j)
            if (j != i && d.at(i, j) > m * n[j]) return false;
    }
    return true;
}

} // namespace

Realization realize(const DegreeMatrix& d, std::int64_t min_multiplier) {
    require_valid(d);
    if (min_multiplier < 1) throw InputError("multiplier must be >= 1");
    const int t = d.order();
    ClassSizes sizes = class_sizes(d);
    const auto& n = sizes.counts;

    std::int64_t m = min_multiplier;
    while (m <= Caps::get().multiplier && !multiplier_works(d, n, m)) ++m;
    if (m > Caps::get().multiplier)
        throw InstanceTooLarge("no feasible realization multiplier below the cap");

    std::vector<std::int64_t> size(t), offset(t + 1, 0);
    for (int i = 0; i < t; ++i) {
        size[i] = m * n[i];
        offset[i + 1] = offset[i] + size[i];
    }
    if (offset[t] > Caps::get().ball_vertices)
        throw InstanceTooLarge("realization exceeds the vertex cap");
    const int total = static_cast<int>(offset[t]);

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < t; ++i) {
        // Diagonal block: circulant d_ii-regular graph on size[i] vertices.
        std::int64_t dii = d.at(i, i);
        if (dii > 0) {
            std::int64_t half = dii / 2;
            for (std::int64_t a = 0; a < size[i]; ++a)
                for (std::int64_t delta = 1; delta <= half; ++delta)
                    edges.emplace_back(static_cast<int>(offset[i] + a),
                                       static_cast<int>(offset[i] + (a + delta) % size[i]));
            if (dii % 2 == 1) {
                // size[i] is even here (parity constraint): antipodal matching.
                for (std::int64_t a = 0; a < size[i] / 2; ++a)
                    edges.emplace_back(static_cast<int>(offset[i] + a),
                                       static_cast<int>(offset[i] + a + size[i] / 2));
            }
        }
        // Cross blocks: vertex a of class i takes d_ij consecutive
        // residues starting at a*d_ij in class j. Every class-j vertex
        // then receives exactly d_ji edges.
        for (int j = i + 1; j < t; ++j) {
            std::int64_t dij = d.at(i, j);
            for (std::int64_t a = 0; a < size[i]; ++a)
                for (std::int64_t s = 0; s < dij; ++s)
                    edges.emplace_back(static_cast<int>(offset[i] + a),
                                       static_cast<int>(offset[j] + (a * dij + s) % size[j]));
        }
    }

    Realization out;
    out.multiplier = m;
    out.scaled = m > 1;
    out.partition.resize(t);
    std::vector<int> labels(total);
    for (int i = 0; i < t; ++i)
        for (std::int64_t a = 0; a < size[i]; ++a) {
            out.partition[i].push_back(static_cast<int>(offset[i] + a));
            labels[offset[i] + a] = i + 1;
        }
    out.graph = Graph::from_edges(total, edges).with_labels(std::move(labels));

    PartitionWitness w;
    if (!verify_equitable(out.graph, out.partition, d, &w))
        throw std::logic_error("realization failed its own equitable check at vertex " +
                               std::to_string(w.vertex));
    return out;
}

namespace {

// Class membership indicator per subset; -1 entries where absent.
std::vector<std::vector<char>> membership(const Graph& g,
                                          const std::vector<VertexSet>& sets) {
    std::vector<std::vector<char>> member(sets.size(),
                                          std::vector<char>(g.vertex_count(), 0));
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (int v : sets[i]) {
            if (v < 0 || v >= g.vertex_count()) throw InputError("subset vertex out of range");
            member[i][v] = 1;
        }
    return member;
}

} // namespace

bool verify_equitable(const Graph& g, const std::vector<VertexSet>& partition,
                      const DegreeMatrix& d, PartitionWitness* witness) {
    if (static_cast<int>(partition.size()) != d.order())
        throw InputError("partition must have one class per degree-matrix row");
    std::vector<int> cls_of(g.vertex_count(), -1);
    for (std::size_t i = 0; i < partition.size(); ++i)
        for (int v : partition[i]) {
            if (v < 0 || v >= g.vertex_count()) throw InputError("partition vertex out of range");
            if (cls_of[v] != -1) throw InputError("partition classes overlap at vertex " +
                                                  std::to_string(v));
            cls_of[v] = static_cast<int>(i);
        }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (cls_of[v] == -1) throw InputError("partition misses vertex " + std::to_string(v));

    std::vector<std::int64_t> counts(d.order());
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::fill(counts.begin(), counts.end(), 0);
        for (int w : g.neighbors(v)) ++counts[cls_of[w]];
        for (int j = 0; j < d.order(); ++j)
            if (counts[j] != d.at(cls_of[v], j)) {
                if (witness) *witness = {v, cls_of[v], j, d.at(cls_of[v], j), counts[j]};
                return false;
            }
    }
    return true;
}

bool verify_subdegree(const Graph& g, const std::vector<VertexSet>& subsets,
                      const DegreeMatrix& d, int slack, bool require_cover,
                      PartitionWitness* witness) {
    if (static_cast<int>(subsets.size()) != d.order())
        throw InputError("need one subset per degree-matrix row");
    if (slack < 0) throw InputError("slack must be >= 0");
    auto member = membership(g, subsets);
    if (require_cover) {
        for (int v = 0; v < g.vertex_count(); ++v) {
            bool covered = false;
            for (const auto& mi : member) covered = covered || mi[v];
            if (!covered) throw InputError("subsets do not cover vertex " + std::to_string(v));
        }
    }
    for (int i = 0; i < d.order(); ++i)
        for (int v : subsets[i])
            for (int j = 0; j < d.order(); ++j) {
                std::int64_t have = 0;
                for (int w : g.neighbors(v)) have += member[j][w];
                if (have < d.at(i, j) + slack) {
                    if (witness) *witness = {v, i, j, d.at(i, j) + slack, have};
                    return false;
                }
            }
    return true;
}

} // namespace rlab
