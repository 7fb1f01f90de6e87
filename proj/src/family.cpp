#include "signed_spectra/family.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace signed_spectra {

void FamilyParams::validate() const {
    if (n < 6 || tau < 0 || tau > n - 5) {
        throw std::invalid_argument("family parameters need n >= 6 and 0 <= tau <= n - 5 (got n=" +
                                    std::to_string(n) + ", tau=" + std::to_string(tau) + ")");
    }
}

namespace {

constexpr Vertex kV1 = 0, kV2 = 1, kV3 = 2, kV4 = 3, kV5 = 4;

std::vector<Vertex> x_part(const FamilyParams& p) {
    std::vector<Vertex> x;
    for (int i = 0; i < p.tau; ++i) x.push_back(5 + i);
    return x;
}

std::vector<Vertex> y_part(const FamilyParams& p) {
    std::vector<Vertex> y{kV4};
    for (Vertex v = 5 + p.tau; v < p.n; ++v) y.push_back(v);
    return y;
}

void add_clique(std::vector<SignedEdge>& edges, const std::vector<Vertex>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) edges.push_back({vs[i], vs[j], 1});
    }
}

}  // namespace

SignedGraph build_family(const FamilyParams& p) {
    p.validate();
    const auto x = x_part(p);
    const auto y = y_part(p);
    std::vector<SignedEdge> edges;
    edges.push_back({kV1, kV2, -1});
    edges.push_back({kV2, kV3, 1});
    edges.push_back({kV1, kV5, 1});
    for (Vertex v : x) {
        edges.push_back({kV1, v, 1});
        edges.push_back({kV5, v, 1});
    }
    add_clique(edges, x);
    // {v3, v5} ∪ Y minus v3v5, with v3v4 and v4v5 closing the induced 5-cycle
    for (Vertex v : y) {
        edges.push_back({kV3, v, 1});
        edges.push_back({kV5, v, 1});
    }
    add_clique(edges, y);
    for (Vertex a : x) {
        for (Vertex b : y) edges.push_back({a, b, 1});
    }
    return build(p.n, std::move(edges));
}

SignedGraph gamma_graph(int n) {
    if (n < 5) throw std::invalid_argument("Γ_n needs n >= 5");
    // v1 = 0, v2 = 1, K_{n-2} on 2..n-1 with u = 2, w = 3
    std::vector<SignedEdge> edges{{0, 1, -1}, {0, 2, 1}, {1, 3, 1}};
    for (Vertex a = 2; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            if (!(a == 2 && b == 3)) edges.push_back({a, b, 1});
        }
    }
    return build(n, std::move(edges));
}

std::array<int, 5> QuotientMatrix::cell_sizes() const {
    std::array<int, 5> s{};
    for (std::size_t i = 0; i < 5; ++i) s[i] = static_cast<int>(cells[i].size());
    return s;
}

IntegerMatrix QuotientMatrix::exact() const {
    IntegerMatrix m(5, std::vector<BigInt>(5));
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = entries(i, j);
    }
    return m;
}

Eigen::Matrix<double, 5, 5> QuotientMatrix::symmetrized() const {
    const auto sizes = cell_sizes();
    Eigen::Matrix<double, 5, 5> s;
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            s(i, j) = std::sqrt(static_cast<double>(sizes[static_cast<std::size_t>(i)]) /
                                static_cast<double>(sizes[static_cast<std::size_t>(j)])) *
                      static_cast<double>(entries(i, j));
        }
    }
    // s_i q_ij = s_j q_ji holds exactly; remove rounding asymmetry
    return (0.5 * (s + s.transpose())).eval();
}

QuotientMatrix quotient_matrix(const FamilyParams& p) {
    p.validate();
    const long long n = p.n, t = p.tau;
    QuotientMatrix q;
    q.entries << 0, -1, 0, t + 1, 0,
                 -1, 0, 1, 0, 0,
                 0, 1, 0, 0, n - t - 4,
                 1, 0, 0, t, n - t - 4,
                 0, 0, 1, t + 1, n - t - 5;
    auto x = x_part(p);
    std::vector<Vertex> v5x{kV5};
    v5x.insert(v5x.end(), x.begin(), x.end());
    q.cells = {std::vector<Vertex>{kV1}, std::vector<Vertex>{kV2}, std::vector<Vertex>{kV3}, v5x, y_part(p)};
    return q;
}

Polynomial f_tau(const FamilyParams& p) {
    p.validate();
    const long long n = p.n, t = p.tau;
    return Polynomial{n - 3,
                      n * t + 4 * n - t * t - 5 * t - 15,
                      2 * n * t + 3 * n - 2 * t * t - 10 * t - 15,
                      -(2 * n - 5),
                      -(n - 5),
                      1};
}

Polynomial g_poly(int n) {
    if (n < 6) throw std::invalid_argument("g_poly needs n >= 6");
    const long long m = n;
    return Polynomial{-m + 3, -3 * (m - 4), -(m - 6), 1};
}

double gamma_n(int n) { return largest_root(g_poly(n), n - 4.0, n - 3.0); }

std::vector<double> quotient_roots(const FamilyParams& p) {
    const auto q = quotient_matrix(p);
    const auto eig = jacobi_eigen(q.symmetrized());
    return {eig.values.data(), eig.values.data() + eig.values.size()};
}

namespace {

int sign_of(long double v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Roots closer than 1e-6 are confirmed by counting sign changes of f_τ around the cluster.
bool confirm_clusters(const Polynomial& f, const std::vector<double>& roots) {
    std::size_t i = 0;
    while (i < roots.size()) {
        std::size_t j = i;
        while (j + 1 < roots.size() && roots[j] - roots[j + 1] < 1e-6) ++j;
        if (j > i) {
            const double upper_gap = i > 0 ? roots[i - 1] - roots[i] : 1.0;
            const double lower_gap = j + 1 < roots.size() ? roots[j] - roots[j + 1] : 1.0;
            const double hi = roots[i] + std::min(1e-4, 0.5 * upper_gap);
            const double lo = roots[j] - std::min(1e-4, 0.5 * lower_gap);
            const int k = static_cast<int>(j - i + 1);
            const int expected = (k % 2 == 0) ? 1 : -1;
            if (sign_of(f.evaluate(hi)) * sign_of(f.evaluate(lo)) != expected) return false;
        }
        i = j + 1;
    }
    return true;
}

}  // namespace

FamilySpectrumReport verify_family_spectrum(const FamilyParams& p) {
    p.validate();
    if (p.n > 40) throw std::invalid_argument("verify_family_spectrum supports n <= 40");
    FamilySpectrumReport report;
    report.params = p;

    const auto spec = eigenvalues(build_family(p));
    report.eigenvalues.assign(spec.eigenvalues.data(), spec.eigenvalues.data() + spec.eigenvalues.size());
    report.lambda1 = spec.largest();

    const auto roots = quotient_roots(p);
    report.roots_confirmed = confirm_clusters(f_tau(p), roots);
    if (!report.roots_confirmed) report.failures.push_back("clustered quotient roots fail the sign check of f_tau");

    report.expected.assign(static_cast<std::size_t>(p.n - 5), -1.0);
    report.expected.insert(report.expected.end(), roots.begin(), roots.end());
    std::sort(report.expected.begin(), report.expected.end(), std::greater<>());

    for (double ev : report.eigenvalues) {
        if (std::abs(ev + 1.0) <= 1e-8) ++report.minus_one_multiplicity;
    }
    for (std::size_t i = 0; i < report.eigenvalues.size(); ++i) {
        const double dev = std::abs(report.eigenvalues[i] - report.expected[i]);
        if (dev > report.max_deviation) report.max_deviation = dev;
        if (dev > 1e-8 && !report.offending_eigenvalue) {
            report.offending_eigenvalue = report.eigenvalues[i];
            std::ostringstream os;
            os.precision(17);
            os << "eigenvalue " << report.eigenvalues[i] << " does not match expected " << report.expected[i];
            report.failures.push_back(os.str());
        }
    }
    report.spectrum_matches = !report.offending_eigenvalue.has_value();
    if (report.minus_one_multiplicity != p.n - 5) {
        report.failures.push_back("eigenvalue -1 has multiplicity " + std::to_string(report.minus_one_multiplicity) +
                                  ", expected " + std::to_string(p.n - 5));
    }
    if (p.tau == 0) {
        report.lambda1_exceeds_n_minus_4 = report.lambda1 > p.n - 4;
        if (!*report.lambda1_exceeds_n_minus_4) report.failures.push_back("lambda1 of Γ(n,0) does not exceed n - 4");
    }
    return report;
}

}  // namespace signed_spectra
