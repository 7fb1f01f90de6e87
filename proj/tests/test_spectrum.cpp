#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include <Eigen/Eigenvalues>

#include "oracles.hpp"
#include "signed_spectra/family.hpp"
#include "signed_spectra/spectrum.hpp"

using namespace signed_spectra;

namespace {

std::vector<Vertex> random_subset(std::mt19937_64& rng, int n) {
    std::vector<Vertex> u;
    for (Vertex v = 0; v < n; ++v) {
        if (rng() & 1U) u.push_back(v);
    }
    return u;
}

}  // namespace

TEST_CASE("spectra of small graphs") {
    const auto k3 = eigenvalues(complete_graph(3));
    CHECK(k3.eigenvalues(0) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(k3.eigenvalues(1) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(k3.eigenvalues(2) == doctest::Approx(-1.0).epsilon(1e-12));

    const auto c5 = eigenvalues(cycle_graph(5, 1));
    CHECK(c5.largest() == doctest::Approx(1.6180339887).epsilon(1e-9));
    CHECK(c5.smallest() == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(spectral_radius(cycle_graph(5, 1)) == doctest::Approx(2.0));

    CHECK(eigenvalues(build_family({7, 0})).largest() == doctest::Approx(3.7136).epsilon(5e-4 / 3.7136));
    CHECK(eigenvalues(build(1, {})).largest() == 0.0);
}

TEST_CASE("Jacobi agrees with Eigen's self-adjoint solver") {
    std::mt19937_64 rng(31);
    std::normal_distribution<double> normal;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 25);
        Eigen::MatrixXd m(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j <= i; ++j) m(i, j) = m(j, i) = normal(rng);
        }
        const auto mine = jacobi_eigen(m);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ref(m);
        const Eigen::VectorXd expected = ref.eigenvalues().reverse();
        CHECK((mine.values - expected).cwiseAbs().maxCoeff() < 1e-10 * std::max(1.0, m.norm()));
        // V is orthogonal and diagonalizes m
        CHECK((mine.vectors.transpose() * mine.vectors - Eigen::MatrixXd::Identity(n, n)).norm() < 1e-10);
        CHECK((m * mine.vectors - mine.vectors * mine.values.asDiagonal()).norm() < 1e-9 * std::max(1.0, m.norm()));
    }
    Eigen::MatrixXd asym(2, 2);
    asym << 0, 1, 0, 0;
    CHECK_THROWS_AS(jacobi_eigen(asym), std::invalid_argument);
    CHECK_THROWS_AS(jacobi_eigen(Eigen::MatrixXd(2, 3)), std::invalid_argument);
}

TEST_CASE("Jacobi works in long double") {
    Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic> m = adjacency<long double>(cycle_graph(5, 1));
    const auto e = jacobi_eigen(m);
    CHECK(static_cast<double>(e.values(4)) == doctest::Approx(-2.0).epsilon(1e-15));
}

TEST_CASE("spectrum is invariant under switching and relabeling, and negation reverses it") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const auto g = oracles::random_signed_graph(rng, n, 0.5, 0.5);
        const auto base = eigenvalues(g).eigenvalues;
        const auto sw = eigenvalues(switch_at(g, random_subset(rng, n))).eigenvalues;
        CHECK((base - sw).cwiseAbs().maxCoeff() < 1e-9);
        std::vector<Vertex> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto rl = eigenvalues(relabel(g, perm)).eigenvalues;
        CHECK((base - rl).cwiseAbs().maxCoeff() < 1e-9);
        const auto neg = eigenvalues(negate(g)).eigenvalues;
        CHECK((base + neg.reverse()).cwiseAbs().maxCoeff() < 1e-9);
    }
}

TEST_CASE("trace identities") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 500; ++trial) {
        const auto g = oracles::random_signed_graph(rng, 1 + static_cast<int>(rng() % 12), 0.5, 0.5);
        const auto ev = eigenvalues(g).eigenvalues;
        CHECK(std::abs(ev.sum()) < 1e-9);
        CHECK(std::abs(ev.squaredNorm() - 2.0 * static_cast<double>(g.size())) < 1e-9);
        // tr A^3 = 6 (positive triangles - negative triangles)
        int signed_triangles = 0;
        for (Vertex a = 0; a < g.order(); ++a) {
            for (Vertex b = a + 1; b < g.order(); ++b) {
                for (Vertex c = b + 1; c < g.order(); ++c) signed_triangles += g.sign(a, b) * g.sign(b, c) * g.sign(a, c);
            }
        }
        CHECK(std::abs(ev.array().cube().sum() - 6.0 * signed_triangles) < 1e-8);
    }
}

TEST_CASE("λ1 never exceeds the index of the underlying graph, with equality for balanced graphs") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 500; ++trial) {
        const auto g = oracles::random_signed_graph(rng, 2 + static_cast<int>(rng() % 10), 0.5, 0.4);
        std::vector<SignedEdge> plain;
        for (auto e : g.edges()) plain.push_back({e.u, e.v, 1});
        const double index = eigenvalues(build(g.order(), plain)).largest();
        const double l1 = eigenvalues(g).largest();
        CHECK(l1 <= index + 1e-9);
        CHECK(spectral_radius(g) <= index + 1e-9);
        if (is_balanced(g)) CHECK(l1 == doctest::Approx(index).epsilon(1e-9));
    }
}

TEST_CASE("leading eigenpair residual and Rayleigh bound") {
    std::mt19937_64 rng(53);
    std::normal_distribution<double> normal;
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 14);
        const auto g = oracles::random_signed_graph(rng, n, 0.5, 0.4);
        const auto a = adjacency(g);
        const auto pair = leading_eigenpair(g);
        CHECK(std::abs(pair.vector.norm() - 1.0) < 1e-12);
        CHECK((a * pair.vector - pair.value * pair.vector).norm() <= 1e-9);
        Eigen::VectorXd x(n);
        for (int i = 0; i < n; ++i) x(i) = normal(rng);
        if (x.norm() == 0.0) continue;
        CHECK(x.dot(a * x) / x.squaredNorm() <= pair.value + 1e-9);
    }
}

TEST_CASE("nonnegative switching") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const auto g = oracles::random_signed_graph(rng, n, 0.5, 0.4);
        const auto s = nonnegative_switching(g);
        CHECK(s.graph == switch_at(g, s.switched));
        CHECK(s.eigenvector.minCoeff() >= 0.0);
        CHECK(s.value == doctest::Approx(eigenvalues(g).largest()).epsilon(1e-9));
        CHECK((adjacency(s.graph) * s.eigenvector - s.value * s.eigenvector).norm() < 1e-9);
    }
}

TEST_CASE("equitable quotient") {
    const auto a = adjacency(build_family({8, 1}));
    const auto q = quotient_matrix({8, 1});
    std::vector<std::vector<Vertex>> cells(q.cells.begin(), q.cells.end());
    const auto b = equitable_quotient(a, cells);
    REQUIRE(b.has_value());
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) CHECK((*b)(i, j) == static_cast<double>(q.entries(i, j)));
    }
    // a non-equitable split
    CHECK_FALSE(equitable_quotient(adjacency(cycle_graph(5)), {{0, 1}, {2, 3, 4}}).has_value());
    // the quotient spectrum is contained in the graph spectrum
    const auto graph_ev = eigenvalues(build_family({8, 1})).eigenvalues;
    const Eigen::MatrixXd sym = q.symmetrized();
    for (double r : jacobi_eigen(sym).values) {
        CHECK((graph_ev.array() - r).abs().minCoeff() < 1e-9);
    }
}
