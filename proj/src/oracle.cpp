#include "ccmotion/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "ccmotion/wl.hpp"

namespace ccm::oracle {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
    std::optional<Clock::time_point> at;
    mutable int tick = 0;
    bool expired() const {
        if (!at) return false;
        if (++tick % 256 != 0) return false;
        return Clock::now() > *at;
    }
};

// Search order: smallest color class first (most constrained), deterministic.
std::vector<int> search_order(const Configuration& cfg) {
    const int n = cfg.n();
    std::vector<int> class_size(cfg.rank(), 0);
    for (int v = 0; v < n; ++v) class_size[cfg.color(v, v)]++;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        int cx = cfg.color(x, x), cy = cfg.color(y, y);
        if (class_size[cx] != class_size[cy]) return class_size[cx] < class_size[cy];
        if (cx != cy) return cx < cy;
        return x < y;
    });
    return order;
}

// Generic backtracking for color-preserving maps cfg_a -> cfg_b. The visit
// callback returns false to stop the search.
template <typename Visit>
bool map_search(const Configuration& a, const Configuration& b, const Deadline& deadline,
                bool& timed_out, Visit visit) {
    const int n = a.n();
    auto order = search_order(a);
    std::vector<int> image(n, -1);
    std::vector<char> used(n, 0);

    // recursive lambda via explicit stack of candidate lists
    struct Frame {
        int v;
        std::vector<int> cands;
        std::size_t next = 0;
    };
    std::vector<Frame> stack;

    auto candidates = [&](int depth) {
        int v = order[depth];
        std::vector<int> cands;
        for (int w = 0; w < n; ++w) {
            if (used[w]) continue;
            if (b.color(w, w) != a.color(v, v)) continue;
            bool ok = true;
            for (int j = 0; j < depth; ++j) {
                int u = order[j];
                if (b.color(w, image[u]) != a.color(v, u) ||
                    b.color(image[u], w) != a.color(u, v)) {
                    ok = false;
                    break;
                }
            }
            if (ok) cands.push_back(w);
        }
        return cands;
    };

    stack.push_back({order[0], candidates(0), 0});
    while (!stack.empty()) {
        if (deadline.expired()) { timed_out = true; return true; }
        Frame& f = stack.back();
        int depth = int(stack.size()) - 1;
        // undo previous choice at this depth
        if (f.next > 0) {
            int prev = f.cands[f.next - 1];
            used[prev] = 0;
            image[f.v] = -1;
        }
        if (f.next >= f.cands.size()) {
            stack.pop_back();
            continue;
        }
        int w = f.cands[f.next++];
        image[f.v] = w;
        used[w] = 1;
        if (depth + 1 == n) {
            if (!visit(image)) return false;
            used[w] = 0;
            image[f.v] = -1;
            f.next = f.next;  // continue with siblings
            continue;
        }
        stack.push_back({order[depth + 1], candidates(depth + 1), 0});
    }
    return true;
}

int support_of(const std::vector<int>& perm) {
    int s = 0;
    for (std::size_t v = 0; v < perm.size(); ++v)
        if (perm[v] != int(v)) ++s;
    return s;
}

Configuration maybe_refine(const Configuration& cfg, bool prune) {
    return prune ? wl_stabilize(cfg) : cfg;
}

}  // namespace

AutomorphismReport automorphisms(const Configuration& cfg, const Options& opt) {
    if (cfg.n() > opt.limit_n)
        throw error("oracle: n = " + std::to_string(cfg.n()) + " exceeds limit " +
                    std::to_string(opt.limit_n));
    require_verified(cfg);
    Configuration refined = maybe_refine(cfg, opt.wl_prune);

    AutomorphismReport rep;
    rep.min_support = 0;
    Deadline deadline;
    if (opt.timeout_ms > 0)
        deadline.at = Clock::now() + std::chrono::milliseconds(opt.timeout_ms);
    bool timed_out = false;
    int best_support = cfg.n() + 1;

    map_search(refined, refined, deadline, timed_out, [&](const std::vector<int>& image) {
        ++rep.order;
        int s = support_of(image);
        if (s > 0) best_support = std::min(best_support, s);
        if (opt.store_elements) rep.elements.push_back(image);
        if (rep.order >= opt.element_cap) {
            rep.complete = false;
            return false;
        }
        return true;
    });
    if (timed_out) rep.complete = false;
    if (best_support <= cfg.n()) rep.min_support = best_support;
    return rep;
}

MotionResult minimal_support_search(const Configuration& cfg, const Options& opt) {
    if (cfg.n() > opt.limit_n)
        throw error("oracle: n exceeds limit");
    require_verified(cfg);
    Configuration refined = maybe_refine(cfg, opt.wl_prune);
    const int n = refined.n();
    auto order = search_order(refined);

    int best = n + 1;
    std::vector<int> image(n, -1);
    std::vector<char> used(n, 0);

    // DFS with pruning on the number of certainly-moved points
    std::function<void(int, int)> rec = [&](int depth, int moved) {
        if (moved >= best) return;
        if (depth == n) {
            if (moved > 0) best = moved;
            return;
        }
        int v = order[depth];
        for (int w = 0; w < n; ++w) {
            if (used[w]) continue;
            if (refined.color(w, w) != refined.color(v, v)) continue;
            bool ok = true;
            for (int j = 0; j < depth; ++j) {
                int u = order[j];
                if (refined.color(w, image[u]) != refined.color(v, u) ||
                    refined.color(image[u], w) != refined.color(u, v)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[v] = w;
            used[w] = 1;
            rec(depth + 1, moved + (w != v ? 1 : 0));
            used[w] = 0;
            image[v] = -1;
        }
    };
    rec(0, 0);
    if (best > n) return MotionResult{true, 0};
    return MotionResult{false, best};
}

MotionResult exact_motion(const Configuration& cfg, const Options& opt) {
    Options pass = opt;
    pass.store_elements = false;
    auto rep = automorphisms(cfg, pass);
    if (rep.complete) {
        if (rep.order <= 1) return MotionResult{true, 0};
        return MotionResult{false, rep.min_support};
    }
    return minimal_support_search(cfg, opt);
}

Tristate isomorphic(const Configuration& a, const Configuration& b, const Options& opt) {
    if (a.n() != b.n()) return Tristate::False;
    if (a.n() > opt.limit_n) throw error("oracle: n exceeds limit");
    require_verified(a);
    require_verified(b);
    Configuration ra = maybe_refine(a, opt.wl_prune);
    Configuration rb = maybe_refine(b, opt.wl_prune);
    if (ra.rank() != rb.rank()) return Tristate::False;
    // canonical refinement makes color ids comparable: class size profiles
    // must agree exactly
    {
        std::vector<std::int64_t> ca(ra.rank(), 0), cb(rb.rank(), 0);
        for (int u = 0; u < ra.n(); ++u)
            for (int v = 0; v < ra.n(); ++v) {
                ca[ra.color(u, v)]++;
                cb[rb.color(u, v)]++;
            }
        if (ca != cb) return Tristate::False;
        if (ra.pairing() != rb.pairing()) return Tristate::False;
    }

    Deadline deadline;
    if (opt.timeout_ms > 0)
        deadline.at = Clock::now() + std::chrono::milliseconds(opt.timeout_ms);
    bool timed_out = false;
    bool found = false;
    map_search(ra, rb, deadline, timed_out, [&](const std::vector<int>&) {
        found = true;
        return false;
    });
    if (found) return Tristate::True;
    if (timed_out) return Tristate::Unknown;
    return Tristate::False;
}

Tristate graphs_isomorphic(const Graph& a, const Graph& b, const Options& opt) {
    if (a.n() != b.n() || a.edge_count() != b.edge_count()) return Tristate::False;
    if (a.n() == 0) return Tristate::True;
    return isomorphic(build_adjacency_configuration(a), build_adjacency_configuration(b), opt);
}

}  // namespace ccm::oracle
