#pragma once

#include <vector>

#include "ccmotion/graph.hpp"

namespace ccm {

// Eigenvalues with multiplicities, descending by value.
struct Spectrum {
    std::vector<std::pair<double, std::int64_t>> eigenvalues;
    double zero_weight_radius = 0;  // max |nontrivial eigenvalue|
    double theta_min = 0;           // smallest eigenvalue
    std::int64_t n = 0;

    double trivial() const { return eigenvalues.front().first; }
};

// Dense adjacency spectrum; eigenvalues grouped into multiplicity classes
// with absolute tolerance tol.
Spectrum adjacency_spectrum(const Graph& g, double tol = 1e-7);

// Raw eigenvalues of a symmetric matrix (row-major), ascending.
std::vector<double> symmetric_eigenvalues(const std::vector<double>& m, int n);

// Eigenvalues of a symmetric tridiagonal matrix, ascending.
std::vector<double> tridiagonal_eigenvalues(const std::vector<double>& diag,
                                            const std::vector<double>& subdiag);

// max common neighbors over all distinct vertex pairs
int max_common_neighbors(const Graph& g);

// max common neighbors over adjacent / non-adjacent pairs (-1 if no such pair)
int max_common_neighbors_adjacent(const Graph& g);
int min_common_neighbors_adjacent(const Graph& g);
int max_common_neighbors_nonadjacent(const Graph& g);

}  // namespace ccm
