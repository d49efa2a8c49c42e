#include "ccmotion/wl.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ccm {

namespace {

// (old color, sorted ((i,j), count) runs); lexicographic order
using Sig = std::pair<Color, std::vector<std::pair<std::uint32_t, std::int32_t>>>;

Sig pair_signature(const std::vector<Color>& colors, int n, int x, int y,
                   std::vector<std::uint32_t>& scratch) {
    scratch.clear();
    const Color* row_x = &colors[std::size_t(x) * n];
    for (int z = 0; z < n; ++z)
        scratch.push_back((std::uint32_t(row_x[z]) << 16) | colors[std::size_t(z) * n + y]);
    std::sort(scratch.begin(), scratch.end());
    Sig sig;
    sig.first = colors[std::size_t(x) * n + y];
    for (std::size_t a = 0; a < scratch.size();) {
        std::size_t b = a;
        while (b < scratch.size() && scratch[b] == scratch[a]) ++b;
        sig.second.emplace_back(scratch[a], std::int32_t(b - a));
        a = b;
    }
    return sig;
}

WlRound wl_round_serial(const std::vector<Color>& colors, int n) {
    std::map<Sig, int> discovered;  // signature -> discovery index
    std::vector<int> provisional(std::size_t(n) * n);
    std::vector<std::uint32_t> scratch;
    scratch.reserve(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            Sig sig = pair_signature(colors, n, x, y, scratch);
            auto [it, fresh] = discovered.emplace(std::move(sig), int(discovered.size()));
            provisional[std::size_t(x) * n + y] = it->second;
        }
    if (int(discovered.size()) > kMaxRank) throw error("wl_round: rank exceeds 2^16 cap");
    // canonical ids follow the map's lexicographic order
    std::vector<Color> rename(discovered.size());
    int next = 0;
    for (const auto& [sig, idx] : discovered) rename[idx] = Color(next++);
    WlRound out;
    out.rank = int(discovered.size());
    out.colors.resize(provisional.size());
    for (std::size_t p = 0; p < provisional.size(); ++p) out.colors[p] = rename[provisional[p]];
    return out;
}

WlRound wl_round_parallel(const std::vector<Color>& colors, int n) {
#ifndef _OPENMP
    return wl_round_serial(colors, n);
#else
    const std::size_t total = std::size_t(n) * n;
    const int threads = std::max(1, omp_get_max_threads());
    std::vector<std::map<Sig, int>> local_maps(threads);
    std::vector<std::pair<int, int>> provisional(total);  // (thread, local id)

#pragma omp parallel num_threads(threads)
    {
        const int t = omp_get_thread_num();
        auto& local = local_maps[t];
        std::vector<std::uint32_t> scratch;
        scratch.reserve(n);
#pragma omp for schedule(static)
        for (std::int64_t p = 0; p < std::int64_t(total); ++p) {
            int x = int(p / n), y = int(p % n);
            Sig sig = pair_signature(colors, n, x, y, scratch);
            auto [it, fresh] = local.emplace(std::move(sig), int(local.size()));
            provisional[p] = {t, it->second};
        }
    }

    // merge the per-thread signature sets and assign global canonical ids
    std::map<Sig, Color> global;
    for (const auto& local : local_maps)
        for (const auto& [sig, idx] : local) global.emplace(sig, 0);
    if (int(global.size()) > kMaxRank) throw error("wl_round: rank exceeds 2^16 cap");
    Color next = 0;
    for (auto& [sig, id] : global) id = next++;
    std::vector<std::vector<Color>> translate(threads);
    for (int t = 0; t < threads; ++t) {
        translate[t].resize(local_maps[t].size());
        for (const auto& [sig, idx] : local_maps[t]) translate[t][idx] = global.at(sig);
    }

    WlRound out;
    out.rank = int(global.size());
    out.colors.resize(total);
#pragma omp parallel for schedule(static)
    for (std::int64_t p = 0; p < std::int64_t(total); ++p)
        out.colors[p] = translate[provisional[p].first][provisional[p].second];
    return out;
#endif
}

}  // namespace

WlRound wl_round(const std::vector<Color>& colors, int n, Exec mode) {
    return mode == Exec::Serial ? wl_round_serial(colors, n) : wl_round_parallel(colors, n);
}

Configuration wl_stabilize(const Configuration& cfg, Exec mode) {
    require_verified(cfg);
    const int n = cfg.n();
    std::vector<Color> colors = cfg.colors();
    int rank = cfg.rank();
    while (true) {
        WlRound next = wl_round(colors, n, mode);
        if (next.colors == colors) break;
        if (next.rank < rank) throw error("wl_stabilize: rank decreased");
        colors = std::move(next.colors);
        rank = next.rank;
    }
    // recover the pairing from the refined coloring
    std::vector<Color> pairing(rank, 0);
    std::vector<char> set(rank, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            Color c = colors[std::size_t(u) * n + v];
            Color rc = colors[std::size_t(v) * n + u];
            if (!set[c]) { pairing[c] = rc; set[c] = 1; }
            else if (pairing[c] != rc)
                throw error("wl_stabilize: refined coloring lost the pairing axiom");
        }
    return Configuration(n, rank, std::move(colors), std::move(pairing));
}

IndividualizeResult individualize_and_refine(const Configuration& cfg, const std::vector<int>& S,
                                             Exec mode) {
    require_verified(cfg);
    const int n = cfg.n();
    for (int s : S)
        if (s < 0 || s >= n) throw error("individualize_and_refine: vertex out of range");

    std::vector<Color> colors = cfg.colors();
    int next = cfg.rank();
    std::vector<int> sorted(S);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int s : sorted) {
        if (next >= kMaxRank) throw error("individualize_and_refine: rank cap");
        colors[std::size_t(s) * n + s] = Color(next++);
    }
    // compact ids: individualization may leave colors unused
    std::vector<int> remap(next, -1);
    for (Color c : colors) remap[c] = 1;
    int compacted = 0;
    for (int c = 0; c < next; ++c)
        if (remap[c] == 1) remap[c] = compacted++;
    for (Color& c : colors) c = Color(remap[c]);
    std::vector<Color> pairing(compacted);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            pairing[colors[std::size_t(u) * n + v]] = colors[std::size_t(v) * n + u];

    Configuration refined =
        wl_stabilize(Configuration(n, compacted, std::move(colors), std::move(pairing)), mode);

    std::set<Color> vertex_classes;
    for (int v = 0; v < n; ++v) vertex_classes.insert(refined.color(v, v));
    return IndividualizeResult{std::move(refined), int(vertex_classes.size()) == n};
}

std::vector<int> greedy_distinguishing_set(const Configuration& cfg) {
    require_verified(cfg);
    const int n = cfg.n();
    if (n < 2) throw error("greedy_distinguishing_set: need n >= 2");

    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(std::size_t(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);

    std::vector<char> covered(pairs.size(), 0);
    std::size_t remaining = pairs.size();
    std::vector<int> S;
    while (remaining > 0) {
        int best = -1;
        std::size_t best_gain = 0;
        for (int x = 0; x < n; ++x) {
            std::size_t gain = 0;
            for (std::size_t p = 0; p < pairs.size(); ++p) {
                if (covered[p]) continue;
                auto [u, v] = pairs[p];
                if (cfg.color(x, u) != cfg.color(x, v)) ++gain;
            }
            if (gain > best_gain) { best_gain = gain; best = x; }
        }
        if (best < 0)
            throw error("greedy_distinguishing_set: indistinguishable pair remains");
        S.push_back(best);
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            if (covered[p]) continue;
            auto [u, v] = pairs[p];
            if (cfg.color(best, u) != cfg.color(best, v)) {
                covered[p] = 1;
                --remaining;
            }
        }
    }
    return S;
}

bool is_distinguishing_set(const Configuration& cfg, const std::vector<int>& S) {
    const int n = cfg.n();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool ok = false;
            for (int s : S)
                if (cfg.color(s, u) != cfg.color(s, v)) { ok = true; break; }
            if (!ok) return false;
        }
    return true;
}

}  // namespace ccm
