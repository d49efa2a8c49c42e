#include "ccmotion/coherence.hpp"

#include <algorithm>
#include <queue>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ccm {

StructureConstants::StructureConstants(
    int n, int rank, std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> rows,
    std::vector<std::int64_t> out_degrees, std::vector<std::int64_t> in_degrees, bool homogeneous)
    : n_(n),
      rank_(rank),
      homogeneous_(homogeneous),
      rows_(std::move(rows)),
      out_degrees_(std::move(out_degrees)),
      in_degrees_(std::move(in_degrees)) {}

std::int64_t StructureConstants::p(int i, int j, int t) const {
    const auto& row = rows_[t];
    std::uint32_t key = (std::uint32_t(i) << 16) | std::uint32_t(j);
    auto it = std::lower_bound(row.begin(), row.end(), key,
                               [](const auto& e, std::uint32_t k) { return e.first < k; });
    if (it != row.end() && it->first == key) return it->second;
    return 0;
}

std::int64_t StructureConstants::degree(int i) const {
    if (!homogeneous_) throw error("degree: configuration not homogeneous");
    return out_degrees_[i];
}

std::string CoherenceViolation::describe() const {
    return "pairs (" + std::to_string(pair_a.first) + "," + std::to_string(pair_a.second) +
           ") and (" + std::to_string(pair_b.first) + "," + std::to_string(pair_b.second) +
           ") both have color " + std::to_string(t) + " but " + std::to_string(count_a) +
           " vs " + std::to_string(count_b) + " walks of colors (" + std::to_string(i) + "," +
           std::to_string(j) + ")";
}

namespace {

// sorted (key, count) runs of (c(u,z), c(z,v)) over z
std::vector<std::pair<std::uint32_t, std::int64_t>> walk_counts(const Configuration& cfg, int u,
                                                                int v,
                                                                std::vector<std::uint32_t>& keys) {
    const int n = cfg.n();
    keys.clear();
    for (int z = 0; z < n; ++z)
        keys.push_back((std::uint32_t(cfg.color(u, z)) << 16) | cfg.color(z, v));
    std::sort(keys.begin(), keys.end());
    std::vector<std::pair<std::uint32_t, std::int64_t>> runs;
    for (std::size_t a = 0; a < keys.size();) {
        std::size_t b = a;
        while (b < keys.size() && keys[b] == keys[a]) ++b;
        runs.emplace_back(keys[a], std::int64_t(b - a));
        a = b;
    }
    return runs;
}

}  // namespace

CoherenceResult structure_constants(const Configuration& cfg) {
    require_verified(cfg);
    const int n = cfg.n();
    const int r = cfg.rank();

    std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> rows(r);
    std::vector<std::pair<int, int>> first_pair(r, {-1, -1});
    std::vector<char> seen(r, 0);

    std::vector<std::uint32_t> scratch;
    scratch.reserve(n);
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            int t = cfg.color(u, v);
            auto runs = walk_counts(cfg, u, v, scratch);
            if (!seen[t]) {
                seen[t] = 1;
                first_pair[t] = {u, v};
                rows[t] = std::move(runs);
                continue;
            }
            if (runs == rows[t]) continue;
            // locate the first differing (i,j) in key order
            const auto& ref = rows[t];
            std::size_t a = 0, b = 0;
            std::uint32_t key = 0;
            std::int64_t ca = 0, cb = 0;
            while (true) {
                if (a < ref.size() && (b >= runs.size() || ref[a].first < runs[b].first)) {
                    key = ref[a].first; ca = ref[a].second; cb = 0; break;
                }
                if (b < runs.size() && (a >= ref.size() || runs[b].first < ref[a].first)) {
                    key = runs[b].first; ca = 0; cb = runs[b].second; break;
                }
                if (ref[a].second != runs[b].second) {
                    key = ref[a].first; ca = ref[a].second; cb = runs[b].second; break;
                }
                ++a; ++b;
            }
            CoherenceViolation viol{int(key >> 16), int(key & 0xffff), t,
                                    first_pair[t],  {u, v}, ca, cb};
            return CoherenceResult{std::nullopt, viol};
        }
    }

    // degrees: k_i^+ = p_{i,i*}^{i-}, computed directly from rows of any vertex
    std::vector<std::int64_t> outd(r, 0), ind(r, 0);
    for (int v = 0; v < n; ++v) {
        std::vector<std::int64_t> row_count(r, 0), col_count(r, 0);
        for (int w = 0; w < n; ++w) {
            if (w == v) continue;
            row_count[cfg.color(v, w)]++;
            col_count[cfg.color(w, v)]++;
        }
        if (v == 0) {
            outd = row_count;
            ind = col_count;
        } else if (cfg.homogeneous()) {
            if (row_count != outd || col_count != ind) {
                // cannot happen for a coherent homogeneous configuration
                throw error("structure_constants: inconsistent degrees");
            }
        }
    }
    for (Color d : cfg.diagonal_colors()) { outd[d] = ind[d] = 0; }

    return CoherenceResult{
        StructureConstants(n, r, std::move(rows), std::move(outd), std::move(ind),
                           cfg.homogeneous()),
        std::nullopt};
}

namespace {

// Kosaraju on a constituent digraph
bool strongly_connected_color(const Configuration& cfg, Color i) {
    const int n = cfg.n();
    auto reach = [&](bool reversed) {
        std::vector<char> vis(n, 0);
        std::queue<int> q;
        q.push(0);
        vis[0] = 1;
        int count = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v = 0; v < n; ++v) {
                if (vis[v] || v == u) continue;
                Color c = reversed ? cfg.color(v, u) : cfg.color(u, v);
                if (c == i) { vis[v] = 1; ++count; q.push(v); }
            }
        }
        return count == n;
    };
    return reach(false) && reach(true);
}

bool weakly_connected_color(const Configuration& cfg, Color i) {
    const int n = cfg.n();
    std::vector<char> vis(n, 0);
    std::queue<int> q;
    q.push(0);
    vis[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v = 0; v < n; ++v) {
            if (vis[v] || v == u) continue;
            if (cfg.color(u, v) == i || cfg.color(v, u) == i) {
                vis[v] = 1;
                ++count;
                q.push(v);
            }
        }
    }
    return count == n;
}

// diameter of the constituent digraph; -1 if some vertex unreachable
int constituent_diameter(const Configuration& cfg, Color i) {
    const int n = cfg.n();
    int diam = 0;
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(n, -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v = 0; v < n; ++v)
                if (dist[v] < 0 && v != u && cfg.color(u, v) == i) {
                    dist[v] = dist[u] + 1;
                    q.push(v);
                }
        }
        for (int v = 0; v < n; ++v) {
            if (v == s) continue;
            if (dist[v] < 0) return -1;
            diam = std::max(diam, dist[v]);
        }
    }
    return diam;
}

}  // namespace

ClassificationReport classify(const Configuration& cfg, const StructureConstants* /*sc*/) {
    require_verified(cfg);
    ClassificationReport rep;
    rep.homogeneous = cfg.homogeneous();
    rep.association_scheme = rep.homogeneous && cfg.symmetric();

    bool all_strong = true;
    bool all_finite = true;
    int max_diam = 0;
    for (Color i = 0; i < cfg.rank(); ++i) {
        if (cfg.is_diagonal_color(i)) continue;
        rep.constituent_colors.push_back(i);
        bool strong = strongly_connected_color(cfg, i);
        bool weak = weakly_connected_color(cfg, i);
        rep.strongly_connected.push_back(strong);
        rep.weakly_connected.push_back(weak);
        int diam = strong ? constituent_diameter(cfg, i) : -1;
        rep.constituent_diameters.push_back(diam);
        if (!strong) all_strong = false;
        if (diam < 0) all_finite = false;
        else max_diam = std::max(max_diam, diam);
        if (cfg.paired(i) != i) rep.oriented_colors.push_back(i);
    }
    rep.primitive = rep.homogeneous && all_strong;
    if (all_finite && !rep.constituent_diameters.empty()) rep.scheme_diameter = max_diam;
    return rep;
}

std::optional<int> color_distance(const StructureConstants& sc, int i, int j) {
    if (!sc.homogeneous()) throw error("color_distance: configuration not homogeneous");
    const int r = sc.rank();
    if (i < 0 || i >= r || j < 0 || j >= r) throw error("color_distance: color out of range");
    // colors reachable as c(u_0, u_l) after l steps of color i
    std::vector<char> reach(r, 0);
    reach[i] = 1;
    if (i == j) return 1;
    for (int len = 2; len <= r; ++len) {
        std::vector<char> next(r, 0);
        bool grew = false;
        for (int s = 0; s < r; ++s) {
            if (!reach[s]) continue;
            for (int t = 0; t < r; ++t) {
                if (next[t]) continue;
                if (sc.p(s, i, t) > 0) { next[t] = 1; }
            }
        }
        for (int t = 0; t < r; ++t) {
            if (next[t] && !reach[t]) grew = true;
            next[t] = next[t] || reach[t];
        }
        if (next[j]) return len;
        if (!grew) return std::nullopt;
        reach = std::move(next);
    }
    return std::nullopt;
}

}  // namespace ccm
