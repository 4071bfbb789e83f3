#ifndef RLAB_CAPS_HPP
#define RLAB_CAPS_HPP

#include <cstdint>

namespace rlab {

// Size caps that keep the exact/dense code paths desk-scale.
// Overridable through the RLAB_CAPS environment variable, a
// comma-separated key=value list, e.g.
//   RLAB_CAPS="dense=5000,ball=2000000,alpha=48,walkq=256,nodes=20000000,mult=100000"
struct Caps {
    int dense_eigen = 3000;              // max order for full dense spectra
    std::int64_t ball_vertices = 5'000'000;  // max vertices in an expanded ball
    int exact_alpha = 40;                // max order for exact r-apart numbers
    int walk_q = 200;                    // max closed-walk half-length
    std::int64_t backtrack_nodes = 10'000'000; // projection search budget
    std::int64_t multiplier = 1'000'000; // max realization multiplier
    std::int64_t quotient_states = 2'000'000; // max states in a ball quotient

    // Process-wide caps, parsed from RLAB_CAPS once on first use.
    static const Caps& get();
};

} // namespace rlab

#endif
