#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ccmotion/config.hpp"

namespace ccm::oracle {

// Brute-force ground truth for small instances: color-preserving
// automorphisms via backtracking over the WL-refined partition.

struct AutomorphismReport {
    std::uint64_t order = 0;                  // exact iff complete
    bool complete = true;                     // enumeration finished under the cap
    std::vector<std::vector<int>> elements;   // all permutations, identity included
    int min_support = 0;                      // 0 when the group is trivial
};

struct Options {
    int limit_n = 60;
    std::uint64_t element_cap = 1'000'000;
    bool wl_prune = true;         // pruning soundness is tested against false
    std::int64_t timeout_ms = 0;  // 0 = no budget
    bool store_elements = true;
};

AutomorphismReport automorphisms(const Configuration& cfg, const Options& opt = {});

struct MotionResult {
    bool rigid = false;
    int motion = 0;  // min support over non-identity automorphisms
};

// Full enumeration while the order fits the cap, otherwise minimal-support
// branch-and-bound; both paths agree where both run.
MotionResult exact_motion(const Configuration& cfg, const Options& opt = {});

// Direct branch-and-bound on the minimal support, without enumerating the
// whole group. Used as the fallback path and tested against enumeration.
MotionResult minimal_support_search(const Configuration& cfg, const Options& opt = {});

enum class Tristate { False, True, Unknown };

// Exact color-preserving isomorphism test with WL pruning. Size or rank
// mismatch is False, not an error. Unknown only on timeout.
Tristate isomorphic(const Configuration& a, const Configuration& b, const Options& opt = {});

// Graph isomorphism via adjacency configurations.
Tristate graphs_isomorphic(const Graph& a, const Graph& b, const Options& opt = {});

}  // namespace ccm::oracle
