#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ccmotion/coherence.hpp"
#include "ccmotion/graph.hpp"
#include "ccmotion/spectrum.hpp"
#include "ccmotion/util.hpp"

namespace ccm::drg {

// Distance-regular graph parameters {b_0..b_{d-1}; c_1..c_d}.
struct IntersectionArray {
    std::vector<std::int64_t> b;  // b_0..b_{d-1}
    std::vector<std::int64_t> c;  // c_1..c_d (c[i] is c_{i+1})

    int d() const { return int(b.size()); }
    std::int64_t k() const { return b[0]; }
    std::int64_t bi(int i) const { return i < 0 ? 0 : (i < d() ? b[i] : 0); }
    std::int64_t ci(int i) const { return i <= 0 ? 0 : (i <= d() ? c[i - 1] : 0); }
    std::int64_t ai(int i) const { return k() - bi(i) - ci(i); }

    std::string str() const;                          // "{b0,...;c1,...}"
    static IntersectionArray parse(const std::string& text);
};

struct ArrayValidation {
    std::vector<std::string> diagnostics;  // empty iff valid
    std::vector<std::int64_t> k_i;         // sphere sizes, when valid
    std::int64_t n = 0;
    bool valid() const { return diagnostics.empty(); }
};

ArrayValidation validate_array(const IntersectionArray& a);

// Smith-style imprimitivity tests on the parameters.
bool array_is_bipartite(const IntersectionArray& a);
bool array_is_antipodal(const IntersectionArray& a);
bool array_is_primitive(const IntersectionArray& a);

struct NotDRG {
    int v = -1, w = -1, i = -1;
    std::string what;
};

struct ExtractResult {
    std::optional<IntersectionArray> array;
    std::optional<NotDRG> failure;
};

// BFS-counts the candidate constants from vertex 0 and checks them at every
// (v, w in N_i(v)); the failure carries the witnessing triple.
ExtractResult extract_intersection_array(const Graph& g);

// Full p_{i,j}^s tensor from the array via the algebra recurrence, exact
// integers. Throws on non-integral intermediates.
StructureConstants intersection_numbers(const IntersectionArray& a);

// Diameter-3 closed forms, parameters (k, lambda, mu, a = b_2, b = c_3).
StructureConstants diam3_closed_forms(std::int64_t k, std::int64_t lambda, std::int64_t mu,
                                      std::int64_t a2, std::int64_t c3);

// Eigenvalues of the (d+1)x(d+1) intersection matrix T(X) via the symmetric
// tridiagonal similarity, with exact multiplicities from the standard
// sequence norms.
Spectrum tridiagonal_spectrum(const IntersectionArray& a);

struct BipartiteDiam3 {
    IntersectionArray array;
    Spectrum spectrum;
};

// The bipartite diameter-3 family {k, k-1, k-mu; 1, mu, k} with eigenvalues
// {+-k, +-sqrt(k-mu)}.
BipartiteDiam3 bipartite_diam3(std::int64_t k, std::int64_t mu);

struct Tradeoff {
    Rational C;    // b_j / c_{j+1}
    Rational lhs;
    Rational rhs;  // 1 - 4/(C-1)
    bool holds;
};

// Intersection-number tradeoff at (j, s); exact rational arithmetic.
OrNA<Tradeoff> tradeoff_inequality(const IntersectionArray& a, int j, int s);

struct SpectralGapEstimate {
    double raw;      // k(1 - min(alpha,beta) + 2(d+2)^2 eps^(1/(d+1)))
    double bound;    // raw clamped to [0, k]
    double min_ab;
};

// The bound k(1 - min_ab + 2(d+2)^2 eps^(1/(d+1))), unclamped.
double spectral_gap_bound_value(int d, double k, double eps, double min_ab);

// Upper bound on the zero-weight spectral radius when b_i, c_i are small and
// b_{i-1}, c_{i+1} large. At i = d the c_{i+1} condition is vacuous and beta
// is ignored.
OrNA<SpectralGapEstimate> spectral_gap_estimate(const IntersectionArray& a, int i, double eps,
                                                double alpha, double beta);

// Best bound over all admissible i for the given eps, with alpha and beta
// taken maximal at each i.
OrNA<SpectralGapEstimate> best_spectral_gap_estimate(const IntersectionArray& a, double eps);

// Root perturbation bound for monic polynomials of equal degree; coeffs are
// [1, a_1, ..., a_n].
double poly_perturbation_bound(const std::vector<double>& f, const std::vector<double>& g);

// Ostrowski eigenvalue perturbation bound for equal-size square matrices
// (row-major).
double matrix_perturbation_bound(const std::vector<double>& A, const std::vector<double>& B,
                                 int n);

}  // namespace ccm::drg
