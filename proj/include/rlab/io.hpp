#ifndef RLAB_IO_HPP
#define RLAB_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "rlab/degmat.hpp"
#include "rlab/graph.hpp"
#include "rlab/treeball.hpp"

namespace rlab {

// Graph text format: first line "n m", then m lines "u v" with
// 0-indexed u < v; lines starting with '#' are comments. Duplicate and
// self edges are rejected.
Graph parse_graph(std::istream& in);
Graph load_graph(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);

// Degree-matrix text format: first line "t", then t rows of t integers.
DegreeMatrix parse_degmat(std::istream& in);
DegreeMatrix load_degmat(const std::string& path);
void write_degmat(std::ostream& out, const DegreeMatrix& d);

// Partition/subset file: one line per class, "i: v1 v2 ..." with
// 1-based class index i. Returns sets indexed by class - 1.
std::vector<VertexSet> parse_partition(std::istream& in, int expected_classes);
std::vector<VertexSet> load_partition(const std::string& path, int expected_classes);

// Companion label file for exported balls: lines "vertex class depth".
void write_ball_labels(std::ostream& out, const TypedTreeBall& ball);

// Content digest for report provenance (FNV-1a 64, hex).
std::string content_digest(const std::string& bytes);
std::string file_digest(const std::string& path);

} // namespace rlab

#endif
