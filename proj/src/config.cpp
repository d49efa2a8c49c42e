#include "ccmotion/config.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

namespace ccm {

Configuration::Configuration(int n, int rank, std::vector<Color> colors,
                             std::vector<Color> pairing)
    : n_(n), rank_(rank), colors_(std::move(colors)), pairing_(std::move(pairing)) {
    if (n_ <= 0) throw error("Configuration: n must be positive");
    if (rank_ <= 0 || rank_ > kMaxRank) throw error("Configuration: rank out of range");
    if (colors_.size() != std::size_t(n_) * n_) throw error("Configuration: colors size mismatch");
    if (pairing_.size() != std::size_t(rank_)) throw error("Configuration: pairing size mismatch");
    for (Color c : colors_)
        if (c >= rank_) throw error("Configuration: color id out of range");
    for (Color c : pairing_)
        if (c >= rank_) throw error("Configuration: pairing target out of range");
    is_diagonal_.assign(rank_, 0);
    for (int v = 0; v < n_; ++v) is_diagonal_[color(v, v)] = 1;
    for (Color i = 0; i < rank_; ++i)
        if (is_diagonal_[i]) diagonal_colors_.push_back(i);
}

bool Configuration::homogeneous() const { return diagonal_colors_.size() == 1; }

bool Configuration::symmetric() const {
    for (Color i = 0; i < rank_; ++i)
        if (pairing_[i] != i) return false;
    return true;
}

std::vector<Color> Configuration::vertex_colors() const {
    std::vector<Color> vc(n_);
    for (int v = 0; v < n_; ++v) vc[v] = color(v, v);
    return vc;
}

bool Configuration::same_partition(const Configuration& other) const {
    if (n_ != other.n_ || rank_ != other.rank_) return false;
    // color ids on one side must map bijectively onto the other's
    std::vector<int> fwd(rank_, -1), bwd(rank_, -1);
    for (std::size_t p = 0; p < colors_.size(); ++p) {
        Color a = colors_[p], b = other.colors_[p];
        if (fwd[a] == -1 && bwd[b] == -1) { fwd[a] = b; bwd[b] = a; }
        else if (fwd[a] != b || bwd[b] != a) return false;
    }
    return true;
}

Graph Configuration::constituent_graph(Color i) const {
    if (pairing_[i] != i) throw error("constituent_graph: color is oriented");
    if (is_diagonal_[i]) throw error("constituent_graph: diagonal color");
    Graph g(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (color(u, v) == i) g.add_edge(u, v);
    return g;
}

std::vector<std::vector<int>> Configuration::out_neighbors(Color i) const {
    std::vector<std::vector<int>> out(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if (u != v && color(u, v) == i) out[u].push_back(v);
    return out;
}

std::string ConfigViolation::describe() const {
    switch (kind) {
        case kDiagonalColorOffDiagonal:
            return "axiom (i): c(" + std::to_string(u) + "," + std::to_string(u) +
                   ") equals c(" + std::to_string(v) + "," + std::to_string(w) + ")";
        case kPairingMismatch:
            return "axiom (ii): c(" + std::to_string(v) + "," + std::to_string(u) +
                   ") is not the pair of c(" + std::to_string(u) + "," + std::to_string(v) + ")";
        case kPairingNotInvolution:
            return "pairing is not an involution at color " + std::to_string(u);
        case kColorUnused:
            return "color " + std::to_string(u) + " never occurs";
    }
    return "unknown violation";
}

std::vector<ConfigViolation> verify_configuration(const Configuration& cfg) {
    std::vector<ConfigViolation> out;
    const int n = cfg.n();
    const int r = cfg.rank();

    std::vector<char> seen(r, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) seen[cfg.color(u, v)] = 1;
    for (Color i = 0; i < r; ++i)
        if (!seen[i]) out.push_back({ConfigViolation::kColorUnused, int(i), -1, -1});

    for (Color i = 0; i < r; ++i)
        if (cfg.paired(cfg.paired(i)) != i)
            out.push_back({ConfigViolation::kPairingNotInvolution, int(i), -1, -1});

    // axiom (i): a diagonal color used off-diagonal (or vice versa)
    for (int u = 0; u < n && out.empty(); ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            if (cfg.is_diagonal_color(cfg.color(u, v))) {
                // witness diagonal vertex carrying the same color
                int d = -1;
                for (int x = 0; x < n; ++x)
                    if (cfg.color(x, x) == cfg.color(u, v)) { d = x; break; }
                out.push_back({ConfigViolation::kDiagonalColorOffDiagonal, d, u, v});
                break;
            }
        }

    // axiom (ii)
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (cfg.color(v, u) != cfg.paired(cfg.color(u, v))) {
                out.push_back({ConfigViolation::kPairingMismatch, u, v, -1});
                return out;
            }
    return out;
}

void require_verified(const Configuration& cfg) {
    auto v = verify_configuration(cfg);
    if (!v.empty()) throw error("configuration fails axioms: " + v.front().describe());
}

Configuration build_distance_configuration(const Graph& g) {
    const int n = g.n();
    if (n == 0) throw error("distance configuration: empty graph");
    std::vector<Color> colors(std::size_t(n) * n, 0);
    int diam = 0;
    for (int v = 0; v < n; ++v) {
        auto d = g.bfs_distances(v);
        for (int w = 0; w < n; ++w) {
            if (d[w] < 0)
                throw error("distance configuration: graph disconnected, vertices " +
                            std::to_string(v) + " and " + std::to_string(w) + " unreachable");
            colors[std::size_t(v) * n + w] = Color(d[w]);
            diam = std::max(diam, d[w]);
        }
    }
    int rank = diam + 1;
    std::vector<Color> pairing(rank);
    for (int i = 0; i < rank; ++i) pairing[i] = Color(i);
    return Configuration(n, rank, std::move(colors), std::move(pairing));
}

Configuration build_adjacency_configuration(const Graph& g) {
    const int n = g.n();
    if (n == 0) throw error("adjacency configuration: empty graph");
    bool has_edge = g.edge_count() > 0;
    bool has_nonedge = std::int64_t(n) * (n - 1) / 2 > g.edge_count();
    int rank = 1 + (has_edge ? 1 : 0) + (has_nonedge ? 1 : 0);
    std::vector<Color> colors(std::size_t(n) * n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            colors[std::size_t(u) * n + v] = g.adjacent(u, v) ? 1 : Color(has_edge ? 2 : 1);
        }
    std::vector<Color> pairing(rank);
    for (int i = 0; i < rank; ++i) pairing[i] = Color(i);
    return Configuration(n, rank, std::move(colors), std::move(pairing));
}

Configuration permute_configuration(const Configuration& cfg, const std::vector<int>& pi) {
    const int n = cfg.n();
    if (int(pi.size()) != n) throw error("permute_configuration: permutation size mismatch");
    std::vector<Color> colors(std::size_t(n) * n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            colors[std::size_t(pi[u]) * n + pi[v]] = cfg.color(u, v);
    return Configuration(n, cfg.rank(), std::move(colors), cfg.pairing());
}

std::string Configuration::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n_;
    j["rank"] = rank_;
    auto rows = nlohmann::ordered_json::array();
    for (int u = 0; u < n_; ++u) {
        auto row = nlohmann::ordered_json::array();
        for (int v = 0; v < n_; ++v) row.push_back(int(color(u, v)));
        rows.push_back(std::move(row));
    }
    j["colors"] = std::move(rows);
    auto pair = nlohmann::ordered_json::array();
    for (Color p : pairing_) pair.push_back(int(p));
    j["pairing"] = std::move(pair);
    return j.dump();
}

Configuration Configuration::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // translate byte offset to line/column
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') { ++line; col = 1; }
            else ++col;
        }
        throw error("configuration JSON parse error at line " + std::to_string(line) +
                    ", column " + std::to_string(col) + ": " + e.what());
    }
    try {
        int n = j.at("n").get<int>();
        int rank = j.at("rank").get<int>();
        std::vector<Color> colors;
        colors.reserve(std::size_t(n) * n);
        for (const auto& row : j.at("colors"))
            for (const auto& c : row) colors.push_back(Color(c.get<int>()));
        std::vector<Color> pairing;
        for (const auto& p : j.at("pairing")) pairing.push_back(Color(p.get<int>()));
        return Configuration(n, rank, std::move(colors), std::move(pairing));
    } catch (const nlohmann::json::exception& e) {
        throw error(std::string("configuration JSON schema error: ") + e.what());
    }
}

}  // namespace ccm
