#pragma once

#include <vector>

#include "ccmotion/config.hpp"

namespace ccm {

enum class Exec { Serial, Parallel };

// One Weisfeiler-Leman round: recolor every pair (x,y) by the signature
// (old color, multiset {(i,j) -> wl_ij(x,y)}), with new color ids assigned
// in lexicographic signature order. The parallel kernel fans the pair loop
// out over OpenMP threads; output is bit-identical to the serial kernel.
struct WlRound {
    std::vector<Color> colors;
    int rank;
};
WlRound wl_round(const std::vector<Color>& colors, int n, Exec mode);

// Iterates rounds to the fixed point. The result passes structure_constants
// and is canonically relabeled; an already-coherent input comes back
// unchanged.
Configuration wl_stabilize(const Configuration& cfg, Exec mode = Exec::Parallel);

struct IndividualizeResult {
    Configuration refined;
    bool splits_completely;  // every vertex class a singleton
};

// Fresh colors on (s,s) for each s in S, then wl_stabilize.
IndividualizeResult individualize_and_refine(const Configuration& cfg,
                                             const std::vector<int>& S,
                                             Exec mode = Exec::Parallel);

// Greedy covering set S such that every pair of distinct vertices is
// distinguished by some s in S. Size obeys |S| <= 2n ln(n)/D_min + 1.
std::vector<int> greedy_distinguishing_set(const Configuration& cfg);

bool is_distinguishing_set(const Configuration& cfg, const std::vector<int>& S);

}  // namespace ccm
