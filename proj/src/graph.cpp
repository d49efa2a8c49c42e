#include "ccmotion/graph.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>

namespace ccm {

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw error("add_edge: vertex out of range");
    if (u == v) throw error("add_edge: self-loop");
    if (adjacent(u, v)) return;
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++m_;
}

bool Graph::adjacent(int u, int v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

bool Graph::is_regular() const {
    for (int v = 1; v < n_; ++v)
        if (degree(v) != degree(0)) return false;
    return true;
}

int Graph::common_neighbors(int u, int v) const {
    const auto& a = adj_[u];
    const auto& b = adj_[v];
    int count = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else { ++count; ++i; ++j; }
    }
    return count;
}

std::vector<int> Graph::bfs_distances(int src) const {
    std::vector<int> dist(n_, -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj_[v]) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

bool Graph::connected() const {
    if (n_ == 0) return true;
    auto d = bfs_distances(0);
    return std::find(d.begin(), d.end(), -1) == d.end();
}

int Graph::diameter() const {
    int diam = 0;
    for (int v = 0; v < n_; ++v) {
        auto d = bfs_distances(v);
        for (int x : d) {
            if (x < 0) throw error("diameter: graph disconnected");
            diam = std::max(diam, x);
        }
    }
    return diam;
}

bool Graph::bipartition(std::vector<int>* side) const {
    std::vector<int> color(n_, -1);
    for (int s = 0; s < n_; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj_[v]) {
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    q.push(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    if (side) *side = color;
    return true;
}

Graph Graph::complement() const {
    Graph g(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!adjacent(u, v)) g.add_edge(u, v);
    return g;
}

Graph Graph::line_graph() const {
    auto es = edges();
    Graph lg(int(es.size()));
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            auto [a, b] = es[i];
            auto [c, d] = es[j];
            if (a == c || a == d || b == c || b == d) lg.add_edge(int(i), int(j));
        }
    return lg;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> es;
    es.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) es.emplace_back(u, v);
    return es;
}

std::string Graph::to_edge_list() const {
    std::ostringstream out;
    out << n_ << " " << m_ << "\n";
    for (auto [u, v] : edges()) out << u << " " << v << "\n";
    return out.str();
}

namespace {

struct TokenReader {
    const std::string& text;
    std::size_t pos = 0;
    int line = 1;
    int col = 1;

    void advance() {
        if (text[pos] == '\n') { ++line; col = 1; }
        else ++col;
        ++pos;
    }
    void skip_space() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' ||
                                     text[pos] == '\r' || text[pos] == '\n'))
            advance();
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw error("edge list parse error at line " + std::to_string(line) + ", column " +
                    std::to_string(col) + ": " + what);
    }
    long next_int(const char* what) {
        skip_space();
        if (pos >= text.size()) fail(std::string("expected ") + what + ", got end of input");
        int at_line = line, at_col = col;
        bool neg = false;
        if (text[pos] == '-') { neg = true; advance(); }
        if (pos >= text.size() || text[pos] < '0' || text[pos] > '9') {
            line = at_line; col = at_col;
            fail(std::string("expected ") + what);
        }
        long v = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            v = v * 10 + (text[pos] - '0');
            if (v > 100000000) { line = at_line; col = at_col; fail("number too large"); }
            advance();
        }
        return neg ? -v : v;
    }
};

}  // namespace

Graph Graph::parse_edge_list(const std::string& text) {
    TokenReader r{text};
    long n = r.next_int("vertex count");
    if (n < 0 || n > 1000000) r.fail("vertex count out of range");
    long m = r.next_int("edge count");
    if (m < 0) r.fail("edge count out of range");
    Graph g(int(n));
    for (long e = 0; e < m; ++e) {
        long u = r.next_int("edge endpoint");
        long v = r.next_int("edge endpoint");
        if (u < 0 || v < 0 || u >= n || v >= n) r.fail("edge endpoint out of range");
        if (u == v) r.fail("self-loop");
        g.add_edge(int(u), int(v));
    }
    r.skip_space();
    if (r.pos != text.size()) r.fail("trailing input after last edge");
    return g;
}

Graph Graph::read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str());
}

}  // namespace ccm
