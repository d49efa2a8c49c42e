#include "ccmotion/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace ccm {

namespace {

Spectrum group_descending(std::vector<double> vals, double tol) {
    std::sort(vals.begin(), vals.end(), std::greater<double>());
    Spectrum s;
    s.n = std::int64_t(vals.size());
    for (std::size_t a = 0; a < vals.size();) {
        std::size_t b = a;
        while (b < vals.size() && std::abs(vals[b] - vals[a]) <= tol) ++b;
        double rep = 0;
        for (std::size_t i = a; i < b; ++i) rep += vals[i];
        rep /= double(b - a);
        s.eigenvalues.emplace_back(rep, std::int64_t(b - a));
        a = b;
    }
    s.theta_min = vals.back();
    s.zero_weight_radius = 0;
    for (std::size_t i = 1; i < vals.size(); ++i)
        s.zero_weight_radius = std::max(s.zero_weight_radius, std::abs(vals[i]));
    return s;
}

}  // namespace

Spectrum adjacency_spectrum(const Graph& g, double tol) {
    const int n = g.n();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (auto [u, v] : g.edges()) {
        a(u, v) = 1;
        a(v, u) = 1;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    std::vector<double> vals(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    return group_descending(std::move(vals), tol);
}

std::vector<double> symmetric_eigenvalues(const std::vector<double>& m, int n) {
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = m[std::size_t(i) * n + j];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    return std::vector<double>(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
}

std::vector<double> tridiagonal_eigenvalues(const std::vector<double>& diag,
                                            const std::vector<double>& subdiag) {
    const int n = int(diag.size());
    Eigen::VectorXd d(n), e(std::max(0, n - 1));
    for (int i = 0; i < n; ++i) d(i) = diag[i];
    for (int i = 0; i + 1 < n; ++i) e(i) = subdiag[i];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(d, e, Eigen::EigenvaluesOnly);
    return std::vector<double>(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
}

int max_common_neighbors(const Graph& g) {
    int q = 0;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) q = std::max(q, g.common_neighbors(u, v));
    return q;
}

int max_common_neighbors_adjacent(const Graph& g) {
    int q = -1;
    for (auto [u, v] : g.edges()) q = std::max(q, g.common_neighbors(u, v));
    return q;
}

int min_common_neighbors_adjacent(const Graph& g) {
    int q = -1;
    for (auto [u, v] : g.edges()) {
        int c = g.common_neighbors(u, v);
        if (q < 0 || c < q) q = c;
    }
    return q;
}

int max_common_neighbors_nonadjacent(const Graph& g) {
    int q = -1;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.adjacent(u, v)) q = std::max(q, g.common_neighbors(u, v));
    return q;
}

}  // namespace ccm
