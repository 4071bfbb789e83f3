#include "rlab/degmat.hpp"

#include <cmath>
#include <queue>

#include "rlab/bigint.hpp"
#include "rlab/errors.hpp"

namespace rlab {

DegreeMatrix DegreeMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    DegreeMatrix d;
    d.order_ = static_cast<int>(rows.size());
    if (d.order_ == 0) throw InputError("degree matrix must have order >= 1");
    d.entries_.reserve(static_cast<std::size_t>(d.order_) * d.order_);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != d.order_)
            throw InputError("degree matrix must be square");
        for (std::int64_t v : row) {
            if (v < 0) throw InputError("degree matrix entries must be non-negative");
            d.entries_.push_back(v);
        }
    }
    return d;
}

DegmatValidity validate(const DegreeMatrix& d) {
    const int t = d.order();
    DegmatValidity out;
    // (D1) zero-symmetric support
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j)
            if ((d.at(i, j) == 0) != (d.at(j, i) == 0)) {
                out.reason = "D1";
                out.witness = d.at(i, j) == 0 ? std::make_pair(j, i) : std::make_pair(i, j);
                return out;
            }
    // (D2) connected support
    std::vector<bool> seen(t, false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    while (!q.empty()) {
        int i = q.front();
        q.pop();
        for (int j = 0; j < t; ++j)
            if (j != i && d.at(i, j) > 0 && !seen[j]) {
                seen[j] = true;
                q.push(j);
            }
    }
    for (int i = 0; i < t; ++i)
        if (!seen[i]) {
            out.reason = "D2";
            out.witness = {0, i};
            return out;
        }
    // (D3) via spanning-tree propagation of the class-size ratios
    std::vector<BigRat> size(t);
    std::vector<bool> have(t, false);
    size[0] = BigRat(BigNat{1}, BigNat{1});
    have[0] = true;
    std::vector<std::pair<int, int>> tree_edges;
    std::queue<int> bfs;
    bfs.push(0);
    while (!bfs.empty()) {
        int i = bfs.front();
        bfs.pop();
        for (int j = 0; j < t; ++j) {
            if (j == i || d.at(i, j) == 0 || have[j]) continue;
            // n_i d_ij = n_j d_ji  =>  n_j = n_i * d_ij / d_ji
            size[j] = BigRat::mul(size[i], static_cast<std::uint64_t>(d.at(i, j)),
                                  static_cast<std::uint64_t>(d.at(j, i)));
            have[j] = true;
            tree_edges.emplace_back(i, j);
            bfs.push(j);
        }
    }
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) {
            if (d.at(i, j) == 0) continue;
            BigRat lhs = BigRat::mul(size[i], static_cast<std::uint64_t>(d.at(i, j)), 1);
            BigRat rhs = BigRat::mul(size[j], static_cast<std::uint64_t>(d.at(j, i)), 1);
            if (!BigRat::equal(lhs, rhs)) {
                out.reason = "D3";
                out.witness = {i, j};
                return out;
            }
        }
    out.valid = true;
    return out;
}

DegmatValidity require_valid(const DegreeMatrix& d) {
    DegmatValidity v = validate(d);
    if (!v.valid)
        throw InputError("degree matrix violates (" + v.reason + ") at entry (" +
                         std::to_string(v.witness.first + 1) + "," +
                         std::to_string(v.witness.second + 1) + ")");
    return v;
}

std::vector<std::int64_t> degrees(const DegreeMatrix& d) {
    require_valid(d);
    std::vector<std::int64_t> out(d.order(), 0);
    for (int i = 0; i < d.order(); ++i)
        for (int j = 0; j < d.order(); ++j) out[i] += d.at(i, j);
    return out;
}

ClassSizes class_sizes(const DegreeMatrix& d) {
    require_valid(d);
    const int t = d.order();
    // Re-propagate the exact ratios, clear denominators, reduce by gcd.
    std::vector<BigRat> size(t);
    std::vector<bool> have(t, false);
    size[0] = BigRat(BigNat{1}, BigNat{1});
    have[0] = true;
    std::queue<int> bfs;
    bfs.push(0);
    while (!bfs.empty()) {
        int i = bfs.front();
        bfs.pop();
        for (int j = 0; j < t; ++j) {
            if (j == i || d.at(i, j) == 0 || have[j]) continue;
            size[j] = BigRat::mul(size[i], static_cast<std::uint64_t>(d.at(i, j)),
                                  static_cast<std::uint64_t>(d.at(j, i)));
            have[j] = true;
            bfs.push(j);
        }
    }
    BigNat denom_lcm{1};
    for (int i = 0; i < t; ++i) {
        BigNat g = BigNat::gcd(denom_lcm, size[i].den);
        denom_lcm = (denom_lcm / g) * size[i].den;
    }
    std::vector<BigNat> counts(t);
    for (int i = 0; i < t; ++i) counts[i] = size[i].num * (denom_lcm / size[i].den);
    BigNat g = counts[0];
    for (int i = 1; i < t; ++i) g = BigNat::gcd(g, counts[i]);
    ClassSizes out;
    out.counts.resize(t);
    for (int i = 0; i < t; ++i) {
        BigNat reduced = counts[i] / g;
        if (!reduced.fits_u64() || reduced.to_u64() > (1ull << 62))
            throw InstanceTooLarge("minimal class sizes exceed 2^62");
        out.counts[i] = static_cast<std::int64_t>(reduced.to_u64());
    }
    return out;
}

std::vector<double> symmetrize(const DegreeMatrix& d) {
    require_valid(d);
    const int t = d.order();
    std::vector<double> s(static_cast<std::size_t>(t) * t, 0.0);
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j)
            s[static_cast<std::size_t>(i) * t + j] =
                std::sqrt(static_cast<double>(d.at(i, j)) * static_cast<double>(d.at(j, i)));
    return s;
}

Spectrum degree_matrix_spectrum(const DegreeMatrix& d) {
    Spectrum s;
    s.method = "jacobi";
    s.values = jacobi_eigenvalues(symmetrize(d), d.order(), &s.residual);
    return s;
}

} // namespace rlab
