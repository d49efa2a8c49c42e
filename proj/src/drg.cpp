#include "ccmotion/drg.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace ccm::drg {

std::string IntersectionArray::str() const {
    std::ostringstream out;
    out << "{";
    for (int i = 0; i < d(); ++i) out << (i ? "," : "") << b[i];
    out << ";";
    for (int i = 0; i < d(); ++i) out << (i ? "," : "") << c[i];
    out << "}";
    return out.str();
}

IntersectionArray IntersectionArray::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.size() < 5 || s.front() != '{' || s.back() != '}')
        throw error("intersection array: expected \"{b0,..;c1,..}\"");
    s = s.substr(1, s.size() - 2);
    auto semi = s.find(';');
    if (semi == std::string::npos) throw error("intersection array: missing ';'");
    auto parse_list = [](const std::string& part) {
        std::vector<std::int64_t> out;
        std::size_t pos = 0;
        while (pos < part.size()) {
            std::size_t next = part.find(',', pos);
            if (next == std::string::npos) next = part.size();
            const std::string tok = part.substr(pos, next - pos);
            if (tok.empty()) throw error("intersection array: empty entry");
            out.push_back(std::stoll(tok));
            pos = next + 1;
        }
        return out;
    };
    IntersectionArray a;
    a.b = parse_list(s.substr(0, semi));
    a.c = parse_list(s.substr(semi + 1));
    if (a.b.empty() || a.b.size() != a.c.size())
        throw error("intersection array: b and c parts must be non-empty and equal length");
    return a;
}

ArrayValidation validate_array(const IntersectionArray& a) {
    ArrayValidation out;
    const int d = a.d();
    auto complain = [&](const std::string& s) { out.diagnostics.push_back(s); };

    for (int i = 0; i < d; ++i) {
        if (a.b[i] <= 0) complain("b_" + std::to_string(i) + " must be positive");
        if (a.c[i] <= 0) complain("c_" + std::to_string(i + 1) + " must be positive");
    }
    if (!out.diagnostics.empty()) return out;
    if (a.ci(1) != 1) complain("c_1 must equal 1");
    for (int i = 0; i + 1 < d; ++i) {
        if (a.b[i + 1] > a.b[i]) complain("b must be non-increasing at i=" + std::to_string(i));
        if (a.c[i + 1] < a.c[i]) complain("c must be non-decreasing at i=" + std::to_string(i));
    }
    for (int i = 0; i <= d; ++i)
        if (a.ai(i) < 0)
            complain("a_" + std::to_string(i) + " = " + std::to_string(a.ai(i)) + " < 0");
    if (!out.diagnostics.empty()) return out;

    out.k_i.assign(d + 1, 0);
    out.k_i[0] = 1;
    for (int i = 0; i < d; ++i) {
        std::int64_t num = checked_mul(out.k_i[i], a.bi(i));
        if (num % a.ci(i + 1) != 0) {
            complain("k_" + std::to_string(i + 1) + " not integral");
            return out;
        }
        out.k_i[i + 1] = num / a.ci(i + 1);
    }
    out.n = 0;
    for (auto k : out.k_i) out.n = checked_add(out.n, k);
    return out;
}

bool array_is_bipartite(const IntersectionArray& a) {
    for (int i = 0; i <= a.d(); ++i)
        if (a.ai(i) != 0) return false;
    return true;
}

bool array_is_antipodal(const IntersectionArray& a) {
    const int d = a.d();
    for (int i = 0; i <= d; ++i) {
        if (i == d / 2) continue;
        if (a.bi(i) != a.ci(d - i)) return false;
    }
    return true;
}

bool array_is_primitive(const IntersectionArray& a) {
    if (a.d() < 2) return a.d() == 1;
    return !array_is_bipartite(a) && !array_is_antipodal(a);
}

ExtractResult extract_intersection_array(const Graph& g) {
    const int n = g.n();
    if (n == 0 || !g.connected()) throw error("extract_intersection_array: graph must be connected");
    const int d = g.diameter();
    if (d == 0) throw error("extract_intersection_array: graph has a single vertex");

    for (int v = 1; v < n; ++v)
        if (g.degree(v) != g.degree(0))
            return {std::nullopt, NotDRG{0, v, 0, "degrees differ"}};

    std::vector<std::int64_t> b(d + 1, -1), c(d + 1, -1), cnt_a(d + 1, -1);
    for (int v = 0; v < n; ++v) {
        auto dist = g.bfs_distances(v);
        for (int w = 0; w < n; ++w) {
            if (w == v) continue;
            int i = dist[w];
            int same = 0, closer = 0, further = 0;
            for (int x : g.neighbors(w)) {
                if (dist[x] == i) ++same;
                else if (dist[x] == i - 1) ++closer;
                else ++further;
            }
            if (cnt_a[i] < 0) { cnt_a[i] = same; c[i] = closer; b[i] = further; }
            else if (cnt_a[i] != same || c[i] != closer || b[i] != further)
                return {std::nullopt, NotDRG{v, w, i, "distance partition counts differ"}};
        }
    }
    IntersectionArray a;
    a.b.assign(1, g.degree(0));
    for (int i = 1; i < d; ++i) a.b.push_back(b[i]);
    for (int i = 1; i <= d; ++i) a.c.push_back(c[i]);
    return {a, std::nullopt};
}

namespace {

using RatVec = std::vector<Rational>;  // coefficients over A_0..A_d

StructureConstants tensor_from_rationals(const IntersectionArray& a,
                                         const std::vector<std::vector<RatVec>>& prod,
                                         const std::vector<std::int64_t>& k_i, std::int64_t n) {
    const int r = a.d() + 1;
    std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> rows(r);
    for (int t = 0; t < r; ++t) {
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                const Rational& val = prod[i][j][t];
                if (!val.is_integer() || val.num() < 0)
                    throw error("intersection_numbers: non-integral or negative p_{" +
                                std::to_string(i) + "," + std::to_string(j) + "}^" +
                                std::to_string(t) + " = " + val.str());
                if (val.num() != 0)
                    rows[t].emplace_back((std::uint32_t(i) << 16) | std::uint32_t(j), val.num());
            }
        std::sort(rows[t].begin(), rows[t].end());
    }
    std::vector<std::int64_t> deg(r, 0);
    for (int i = 1; i < r; ++i) deg[i] = k_i[i];
    return StructureConstants(int(n), r, std::move(rows), deg, deg, true);
}

}  // namespace

StructureConstants intersection_numbers(const IntersectionArray& a) {
    auto val = validate_array(a);
    if (!val.valid()) throw error("intersection_numbers: invalid array: " + val.diagnostics[0]);
    const int d = a.d();
    const int r = d + 1;

    // prod[i][j] = coefficients of A_i * A_j in the basis A_0..A_d
    std::vector<std::vector<RatVec>> prod(r, std::vector<RatVec>(r, RatVec(r, Rational(0))));
    for (int j = 0; j < r; ++j) prod[0][j][j] = Rational(1);
    for (int j = 0; j < r; ++j) {
        if (j - 1 >= 0) prod[1][j][j - 1] = Rational(a.bi(j - 1));
        prod[1][j][j] = Rational(a.ai(j));
        if (j + 1 <= d) prod[1][j][j + 1] = Rational(a.ci(j + 1));
    }
    // A_{i+1} A_j = (A_1 (A_i A_j) - a_i (A_i A_j) - b_{i-1} (A_{i-1} A_j)) / c_{i+1}
    for (int i = 1; i < d; ++i) {
        for (int j = 0; j < r; ++j) {
            RatVec acc(r, Rational(0));
            for (int s = 0; s < r; ++s) {
                const Rational& coeff = prod[i][j][s];
                if (coeff == Rational(0)) continue;
                if (s - 1 >= 0) acc[s - 1] = acc[s - 1] + coeff * Rational(a.bi(s - 1));
                acc[s] = acc[s] + coeff * Rational(a.ai(s));
                if (s + 1 <= d) acc[s + 1] = acc[s + 1] + coeff * Rational(a.ci(s + 1));
            }
            for (int s = 0; s < r; ++s) {
                acc[s] = acc[s] - Rational(a.ai(i)) * prod[i][j][s];
                if (i - 1 >= 0) acc[s] = acc[s] - Rational(a.bi(i - 1)) * prod[i - 1][j][s];
                prod[i + 1][j][s] = acc[s] / Rational(a.ci(i + 1));
            }
        }
    }
    return tensor_from_rationals(a, prod, val.k_i, val.n);
}

StructureConstants diam3_closed_forms(std::int64_t k, std::int64_t lambda, std::int64_t mu,
                                      std::int64_t a2, std::int64_t c3) {
    if (mu == 0) throw error("diam3_closed_forms: mu must be positive");
    const Rational K(k), L(lambda), M(mu), A(a2), B(c3);

    auto div_exact = [](const Rational& v, const char* name) {
        if (!v.is_integer() || v.num() < 0)
            throw error(std::string("diam3_closed_forms: non-integral or negative ") + name +
                        " = " + v.str());
        return v.num();
    };

    const Rational k1 = K;
    const Rational k2 = K * (K - L - 1) / M;
    const Rational k3 = k2 * A / B;
    std::int64_t ki[4] = {1, div_exact(k1, "k_1"), div_exact(k2, "k_2"), div_exact(k3, "k_3")};
    std::int64_t n = 1 + ki[1] + ki[2] + ki[3];

    // p[i][j][t], diameter-3 formulas with a = b_2 and b = c_3
    Rational p[4][4][4];
    for (auto& pi : p)
        for (auto& pj : pi)
            for (auto& pt : pj) pt = Rational(0);

    p[1][1][1] = L;
    p[1][2][1] = K - L - 1;
    p[2][2][1] = (K - L - 1) * (K - A - M) / M;
    p[2][3][1] = A * (K - L - 1) / M;
    p[3][3][1] = (K - B) * (K - L - 1) * A / (B * M);
    p[1][1][2] = M;
    p[1][2][2] = K - A - M;
    p[1][3][2] = A;
    p[2][2][2] = (K - L - 1) + (B * A - K + (K - A - M) * (K - A - M - L)) / M;
    p[2][3][2] = ((K - B) + (K - A - L) - M) * A / M;
    p[3][3][2] = ((K - B) * (K - B) - L * (K - B) - K + A * B) / M * (A / B);
    p[1][1][3] = Rational(0);
    p[1][2][3] = B;
    p[1][3][3] = K - B;
    p[2][2][3] = ((K - B) + (K - A - L) - M) * B / M;
    p[2][3][3] = ((K - B) * (K - B) - (K - B) * L - K + A * B) / M;
    // symmetric closure, then row-sum completion for p_{3,3}^3
    // (the only entry the proposition leaves implicit; p_{3,0}^3 = 1)
    for (int t = 1; t <= 3; ++t)
        for (int i = 1; i <= 3; ++i)
            for (int j = i + 1; j <= 3; ++j) p[j][i][t] = p[i][j][t];
    p[3][3][3] = Rational(ki[3]) - Rational(1) - p[3][1][3] - p[3][2][3];
    // identity-color entries
    for (int j = 0; j <= 3; ++j) {
        p[0][j][j] = Rational(1);
        p[j][0][j] = Rational(1);
    }
    p[0][0][0] = Rational(1);
    for (int i = 1; i <= 3; ++i) p[i][i][0] = Rational(ki[i]);

    const int r = 4;
    std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> rows(r);
    for (int t = 0; t < r; ++t) {
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                std::int64_t v = div_exact(p[i][j][t], "p");
                if (v != 0) rows[t].emplace_back((std::uint32_t(i) << 16) | std::uint32_t(j), v);
            }
        std::sort(rows[t].begin(), rows[t].end());
    }
    std::vector<std::int64_t> deg = {0, ki[1], ki[2], ki[3]};
    return StructureConstants(int(n), r, std::move(rows), deg, deg, true);
}

Spectrum tridiagonal_spectrum(const IntersectionArray& a) {
    auto val = validate_array(a);
    if (!val.valid()) throw error("tridiagonal_spectrum: invalid array: " + val.diagnostics[0]);
    const int d = a.d();
    const std::int64_t n = val.n;

    // T(X) is similar to the symmetric tridiagonal with off-diagonals
    // sqrt(b_i c_{i+1}) (conjugation by diag(sqrt(k_i)))
    std::vector<double> diag(d + 1), sub(d);
    for (int i = 0; i <= d; ++i) diag[i] = double(a.ai(i));
    for (int i = 0; i < d; ++i) sub[i] = std::sqrt(double(a.bi(i)) * double(a.ci(i + 1)));
    auto vals = tridiagonal_eigenvalues(diag, sub);
    std::sort(vals.begin(), vals.end(), std::greater<double>());

    Spectrum s;
    s.n = n;
    s.theta_min = vals.back();
    const double k = double(a.k());
    std::int64_t total = 0;
    for (int e = 0; e <= d; ++e) {
        const double eta = vals[e];
        // standard sequence u_i(eta), u_0 = 1, u_1 = eta/k
        std::vector<double> u(d + 1);
        u[0] = 1;
        u[1] = eta / k;
        for (int i = 1; i < d; ++i)
            u[i + 1] = ((eta - double(a.ai(i))) * u[i] - double(a.ci(i)) * u[i - 1]) /
                       double(a.bi(i));
        double norm = 0;
        for (int i = 0; i <= d; ++i) norm += double(val.k_i[i]) * u[i] * u[i];
        double mult = double(n) / norm;
        std::int64_t rounded = std::llround(mult);
        if (std::abs(mult - double(rounded)) > 1e-6 * double(n))
            throw error("tridiagonal_spectrum: multiplicity " + std::to_string(mult) +
                        " not near an integer");
        s.eigenvalues.emplace_back(eta, rounded);
        total += rounded;
    }
    if (total != n) throw error("tridiagonal_spectrum: multiplicities sum to " +
                                std::to_string(total) + ", expected " + std::to_string(n));
    s.zero_weight_radius = 0;
    for (int e = 1; e <= d; ++e)
        s.zero_weight_radius = std::max(s.zero_weight_radius, std::abs(vals[e]));
    return s;
}

BipartiteDiam3 bipartite_diam3(std::int64_t k, std::int64_t mu) {
    if (mu < 1) throw error("bipartite_diam3: mu must be >= 1");
    if (mu >= k) throw error("bipartite_diam3: mu >= k collapses the diameter");
    IntersectionArray a;
    a.b = {k, k - 1, k - mu};
    a.c = {1, mu, k};
    auto val = validate_array(a);
    if (!val.valid()) throw error("bipartite_diam3: parameters not feasible: " + val.diagnostics[0]);
    const std::int64_t n = val.n;

    Spectrum s;
    s.n = n;
    const double root = std::sqrt(double(k - mu));
    s.eigenvalues = {{double(k), 1},
                     {root, n / 2 - 1},
                     {-root, n / 2 - 1},
                     {double(-k), 1}};
    s.zero_weight_radius = double(k);  // -k is a nontrivial eigenvalue
    s.theta_min = double(-k);
    return BipartiteDiam3{a, s};
}

OrNA<Tradeoff> tradeoff_inequality(const IntersectionArray& a, int j, int s) {
    auto val = validate_array(a);
    if (!val.valid()) throw error("tradeoff_inequality: invalid array: " + val.diagnostics[0]);
    const int d = a.d();
    if (d < 3) throw error("tradeoff_inequality: requires diameter >= 3");
    if (j < 1 || j > d - 2) throw error("tradeoff_inequality: j out of range");
    if (s < 1 || s > j + 1) throw error("tradeoff_inequality: s out of range");
    if (!array_is_primitive(a))
        return OrNA<Tradeoff>::no("array primitive", 0, 1);

    const Rational C = Rational(a.bi(j)) / Rational(a.ci(j + 1));
    if (C <= Rational(1))
        return OrNA<Tradeoff>::no("C = b_j/c_{j+1} > 1", C.to_double(), 1.0);

    auto inv_b_prefix = [&](int count) {
        Rational sum(0);
        for (int t = 1; t <= count; ++t) sum = sum + Rational(1) / Rational(a.bi(t - 1));
        return sum;
    };
    const Rational lhs = Rational(a.bi(j + 1)) * (inv_b_prefix(s) + inv_b_prefix(j + 2 - s)) +
                         Rational(a.ci(j + 2)) * inv_b_prefix(j + 1);
    const Rational rhs = Rational(1) - Rational(4) / (C - Rational(1));
    return OrNA<Tradeoff>::ok(Tradeoff{C, lhs, rhs, lhs >= rhs});
}

double spectral_gap_bound_value(int d, double k, double eps, double min_ab) {
    return k * (1.0 - min_ab + 2.0 * double((d + 2) * (d + 2)) * std::pow(eps, 1.0 / double(d + 1)));
}

OrNA<SpectralGapEstimate> spectral_gap_estimate(const IntersectionArray& a, int i, double eps,
                                                double alpha, double beta) {
    auto val = validate_array(a);
    if (!val.valid()) throw error("spectral_gap_estimate: invalid array: " + val.diagnostics[0]);
    const int d = a.d();
    if (i < 1 || i > d) throw error("spectral_gap_estimate: i out of range");
    const double k = double(a.k());

    using R = OrNA<SpectralGapEstimate>;
    if (double(a.bi(i)) > eps * k) return R::no("b_i <= eps*k", double(a.bi(i)), eps * k);
    if (double(a.ci(i)) > eps * k) return R::no("c_i <= eps*k", double(a.ci(i)), eps * k);
    if (double(a.bi(i - 1)) < alpha * k)
        return R::no("b_{i-1} >= alpha*k", double(a.bi(i - 1)), alpha * k);
    double min_ab = alpha;
    if (i < d) {
        if (double(a.ci(i + 1)) < beta * k)
            return R::no("c_{i+1} >= beta*k", double(a.ci(i + 1)), beta * k);
        min_ab = std::min(alpha, beta);
    }
    const double raw = spectral_gap_bound_value(d, k, eps, min_ab);
    SpectralGapEstimate est{raw, std::clamp(raw, 0.0, k), min_ab};
    return R::ok(est);
}

OrNA<SpectralGapEstimate> best_spectral_gap_estimate(const IntersectionArray& a, double eps) {
    const int d = a.d();
    const double k = double(a.k());
    std::optional<SpectralGapEstimate> best;
    NotApplicable last{"b_i <= eps*k and c_i <= eps*k for some i", 0, 0};
    for (int i = 1; i <= d; ++i) {
        const double alpha = double(a.bi(i - 1)) / k;
        const double beta = i < d ? double(a.ci(i + 1)) / k : 1.0;
        auto r = spectral_gap_estimate(a, i, eps, alpha, beta);
        if (!r.applicable()) { last = *r.na; continue; }
        if (!best || r->bound < best->bound) best = *r.value;
    }
    if (!best) return OrNA<SpectralGapEstimate>{std::nullopt, last};
    return OrNA<SpectralGapEstimate>::ok(*best);
}

double poly_perturbation_bound(const std::vector<double>& f, const std::vector<double>& g) {
    if (f.size() != g.size() || f.size() < 2)
        throw error("poly_perturbation_bound: need equal-degree polynomials of degree >= 1");
    if (f[0] != 1.0 || g[0] != 1.0) throw error("poly_perturbation_bound: polynomials must be monic");
    const int n = int(f.size()) - 1;
    double M = 0;
    for (int i = 1; i <= n; ++i) {
        M = std::max(M, std::pow(std::abs(f[i]), 1.0 / i));
        M = std::max(M, std::pow(std::abs(g[i]), 1.0 / i));
    }
    double sum = 0;
    for (int i = 1; i <= n; ++i) sum += std::abs(g[i] - f[i]) * std::pow(2.0 * M, double(n - i));
    return 2.0 * n * std::pow(sum, 1.0 / n);
}

double matrix_perturbation_bound(const std::vector<double>& A, const std::vector<double>& B,
                                 int n) {
    if (int(A.size()) != n * n || int(B.size()) != n * n)
        throw error("matrix_perturbation_bound: size mismatch");
    double M = 0;
    for (int i = 0; i < n * n; ++i) M = std::max({M, std::abs(A[i]), std::abs(B[i])});
    if (M == 0) return 0;
    double diff = 0;
    for (int i = 0; i < n * n; ++i) diff += std::abs(A[i] - B[i]);
    const double delta = diff / (double(n) * M);
    return 2.0 * double((n + 1) * (n + 1)) * M * std::pow(delta, 1.0 / n);
}

}  // namespace ccm::drg
