#ifndef RLAB_DEGMAT_HPP
#define RLAB_DEGMAT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rlab/spectral.hpp"

namespace rlab {

/// Square non-negative integer matrix of per-class neighbor counts.
/// Classes are 1-based at the user surface, 0-based in the API.
class DegreeMatrix {
public:
    DegreeMatrix() = default;
    static DegreeMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

    int order() const { return order_; }
    std::int64_t at(int i, int j) const { return entries_.at(static_cast<std::size_t>(i) * order_ + j); }

private:
    int order_ = 0;
    std::vector<std::int64_t> entries_;
};

/// Validation outcome. Invalidity is a result, not an error; the witness
/// pinpoints the offending entry pair, missing support connection, or
/// unbalanced non-tree support edge.
struct DegmatValidity {
    bool valid = false;
    std::string reason;                 // "", "D1", "D2", or "D3"
    std::pair<int, int> witness{-1, -1}; // 0-based indices when applicable

    explicit operator bool() const { return valid; }
};

/// Checks zero-symmetry of the support (D1), support connectivity (D2),
/// and balanced cycle products (D3). D3 is verified by propagating an
/// exact rational solution of n_i d_ij = n_j d_ji along a spanning tree
/// of the support and checking consistency on the non-tree edges, which
/// is equivalent to the all-cycles product condition given (D1)-(D2).
DegmatValidity validate(const DegreeMatrix& d);

/// Row sums. Requires a valid matrix.
std::vector<std::int64_t> degrees(const DegreeMatrix& d);

struct ClassSizes {
    std::vector<std::int64_t> counts;  // minimal positive integers, gcd 1
    bool scaled = false;               // set by realize() when multiplied
};
/// Minimal positive integer solution of n_i d_ij = n_j d_ji.
ClassSizes class_sizes(const DegreeMatrix& d);

/// Symmetric matrix with the same spectrum: entry (i,j) = sqrt(d_ij d_ji),
/// row-major order() x order().
std::vector<double> symmetrize(const DegreeMatrix& d);

/// Eigenvalues of the matrix (all real), descending.
Spectrum degree_matrix_spectrum(const DegreeMatrix& d);

/// Throws InputError when the matrix is invalid; returns the validity otherwise.
DegmatValidity require_valid(const DegreeMatrix& d);

} // namespace rlab

#endif
