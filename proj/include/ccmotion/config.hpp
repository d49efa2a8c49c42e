#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ccmotion/graph.hpp"
#include "ccmotion/util.hpp"

namespace ccm {

using Color = std::uint16_t;
constexpr int kMaxRank = 1 << 16;  // colors are 16-bit ids

// A configuration: an r-coloring of V x V subject to the axioms
//   (i)  diagonal colors never appear off the diagonal,
//   (ii) c(u,v) determines c(v,u) through the involution i -> i*.
// Immutable after construction; cheap to copy rows, safe to share.
class Configuration {
public:
    Configuration() = default;
    Configuration(int n, int rank, std::vector<Color> colors, std::vector<Color> pairing);

    int n() const { return n_; }
    int rank() const { return rank_; }
    Color color(int u, int v) const { return colors_[std::size_t(u) * n_ + v]; }
    const std::vector<Color>& colors() const { return colors_; }
    Color paired(Color i) const { return pairing_[i]; }
    const std::vector<Color>& pairing() const { return pairing_; }
    const std::vector<Color>& diagonal_colors() const { return diagonal_colors_; }
    bool is_diagonal_color(Color i) const { return is_diagonal_[i]; }

    bool homogeneous() const;               // one diagonal color
    bool symmetric() const;                 // every color self-paired
    std::vector<Color> vertex_colors() const;

    // Partition of V x V by color, as color id per pair; used by tests for
    // "equal up to relabeling" comparisons.
    bool same_partition(const Configuration& other) const;

    // Digraph of one color class.
    Graph constituent_graph(Color i) const;              // requires i symmetric
    std::vector<std::vector<int>> out_neighbors(Color i) const;

    std::string to_json() const;
    static Configuration from_json(const std::string& text);

private:
    int n_ = 0;
    int rank_ = 0;
    std::vector<Color> colors_;
    std::vector<Color> pairing_;
    std::vector<Color> diagonal_colors_;
    std::vector<char> is_diagonal_;
};

// Axiom diagnostics. Violations are data, not errors.
struct ConfigViolation {
    enum Kind {
        kDiagonalColorOffDiagonal,  // axiom (i): c(v,v) == c(u,w), u != w; witness (v,u,w)
        kPairingMismatch,           // axiom (ii): c(v,u) != c(u,v)*; witness (u,v)
        kPairingNotInvolution,      // pairing[pairing[i]] != i; witness color in u
        kColorUnused,               // color never occurs; witness color in u
    };
    Kind kind;
    int u = -1, v = -1, w = -1;
    std::string describe() const;
};

std::vector<ConfigViolation> verify_configuration(const Configuration& cfg);
void require_verified(const Configuration& cfg);  // throws on first violation

// Distance configuration of a connected graph: colors[u][v] = dist(u,v).
Configuration build_distance_configuration(const Graph& g);

// Adjacency configuration {0 diagonal, 1 edge, 2 non-edge}; defined for any
// graph, used where connectivity is not guaranteed.
Configuration build_adjacency_configuration(const Graph& g);

// Relabel vertices by a permutation: colors'(pi(u), pi(v)) = colors(u, v).
Configuration permute_configuration(const Configuration& cfg, const std::vector<int>& pi);

}  // namespace ccm
