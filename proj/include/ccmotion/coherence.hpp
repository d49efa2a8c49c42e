#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ccmotion/config.hpp"

namespace ccm {

// Intersection-number tensor p_{i,j}^t of a coherent configuration, stored
// sparsely per target color t as sorted ((i,j), count) runs. p(i,j,t) is 0
// for absent entries.
class StructureConstants {
public:
    StructureConstants() = default;
    StructureConstants(int n, int rank,
                       std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> rows,
                       std::vector<std::int64_t> out_degrees, std::vector<std::int64_t> in_degrees,
                       bool homogeneous);

    int n() const { return n_; }
    int rank() const { return rank_; }
    bool homogeneous() const { return homogeneous_; }

    std::int64_t p(int i, int j, int t) const;
    std::int64_t out_degree(int i) const { return out_degrees_[i]; }
    std::int64_t in_degree(int i) const { return in_degrees_[i]; }
    // k_i for homogeneous configurations (in = out).
    std::int64_t degree(int i) const;

    const std::vector<std::pair<std::uint32_t, std::int64_t>>& row(int t) const {
        return rows_[t];
    }

private:
    int n_ = 0;
    int rank_ = 0;
    bool homogeneous_ = false;
    // rows_[t] holds ((i << 16) | j, p_{i,j}^t) sorted by key
    std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> rows_;
    std::vector<std::int64_t> out_degrees_;
    std::vector<std::int64_t> in_degrees_;
};

// First coherence violation in row-major pair order: two pairs of color t
// whose (i,j)-walk counts differ.
struct CoherenceViolation {
    int i, j, t;
    std::pair<int, int> pair_a;  // reference pair (earliest of color t)
    std::pair<int, int> pair_b;  // first mismatching pair
    std::int64_t count_a, count_b;
    std::string describe() const;
};

struct CoherenceResult {
    std::optional<StructureConstants> sc;
    std::optional<CoherenceViolation> violation;
    bool coherent() const { return sc.has_value(); }
};

// Counts all (i,j)-walks pairwise and either produces the tensor or the
// first violation. Requires cfg to pass verify_configuration.
CoherenceResult structure_constants(const Configuration& cfg);

struct ClassificationReport {
    bool homogeneous = false;
    bool association_scheme = false;
    bool primitive = false;
    // per non-diagonal color: diameter of the constituent digraph, -1 if not
    // strongly connected
    std::vector<int> constituent_colors;
    std::vector<int> constituent_diameters;
    std::vector<bool> strongly_connected;
    std::vector<bool> weakly_connected;
    std::optional<int> scheme_diameter;  // max constituent diameter when all finite
    std::vector<int> oriented_colors;
};

ClassificationReport classify(const Configuration& cfg,
                              const StructureConstants* sc = nullptr);

// Shortest color-i walk length realizing color j, via the p-tensor
// reachability recursion. nullopt when unreachable.
std::optional<int> color_distance(const StructureConstants& sc, int i, int j);

}  // namespace ccm
