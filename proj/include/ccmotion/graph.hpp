#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ccmotion/util.hpp"

namespace ccm {

// Simple undirected graph on vertices 0..n-1, adjacency lists kept sorted.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n) {}

    int n() const { return n_; }
    int edge_count() const { return m_; }

    void add_edge(int u, int v);
    bool adjacent(int u, int v) const;
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return int(adj_[v].size()); }

    bool is_regular() const;
    int common_neighbors(int u, int v) const;

    // BFS distances from src; unreachable vertices get -1.
    std::vector<int> bfs_distances(int src) const;
    bool connected() const;
    int diameter() const;  // throws on disconnected input

    // Proper 2-coloring if bipartite.
    bool bipartition(std::vector<int>* side = nullptr) const;

    Graph complement() const;
    Graph line_graph() const;

    std::vector<std::pair<int, int>> edges() const;

    std::string to_edge_list() const;

    // Parses "n m" header then one "u v" line per edge. Throws ccm::error
    // mentioning line/column on malformed input.
    static Graph parse_edge_list(const std::string& text);
    static Graph read_edge_list_file(const std::string& path);

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
};

}  // namespace ccm
