#include <doctest.h>

#include "oracles.hpp"
#include "signed_spectra/canonical.hpp"
#include "signed_spectra/family.hpp"
#include "signed_spectra/spectrum.hpp"

using namespace signed_spectra;

namespace {

Eigen::Matrix<long long, 5, 5> matrix5(std::initializer_list<std::initializer_list<long long>> rows) {
    Eigen::Matrix<long long, 5, 5> m;
    int i = 0;
    for (const auto& row : rows) {
        int j = 0;
        for (long long x : row) m(i, j++) = x;
        ++i;
    }
    return m;
}

}  // namespace

TEST_CASE("family parameters are validated") {
    CHECK_THROWS_AS(build_family({5, 0}), std::invalid_argument);
    CHECK_THROWS_AS(build_family({7, 3}), std::invalid_argument);
    CHECK_THROWS_AS(build_family({7, -1}), std::invalid_argument);
    CHECK_NOTHROW(build_family({7, 2}));
    CHECK_THROWS_AS(g_poly(5), std::invalid_argument);
}

TEST_CASE("Γ(6, 0) shape") {
    const auto g = build_family({6, 0});
    CHECK(g.order() == 6);
    // C(4,2) - 1 + 3 = 8 edges; the trace of A^2 agrees
    CHECK(g.size() == 8);
    CHECK(eigenvalues(g).eigenvalues.squaredNorm() == doctest::Approx(16.0));
    CHECK(g.negative_edge_count() == 1);
    CHECK(g.sign(0, 1) == -1);
}

TEST_CASE("edge count of Γ(n, τ)") {
    for (int n = 6; n <= 20; ++n) {
        for (int tau = 0; tau <= n - 5; ++tau) {
            const auto g = build_family({n, tau});
            CHECK(g.size() == static_cast<std::size_t>((n - 2) * (n - 3) / 2 - 1 + 3));
            CHECK(g.negative_edge_count() == 1);
        }
    }
}

TEST_CASE("family members are admissible") {
    for (int n = 6; n <= 12; ++n) {
        for (int tau = 0; tau <= n - 5; ++tau) {
            const auto g = build_family({n, tau});
            CHECK(is_c34_minus_free(g));
            CHECK_FALSE(is_balanced(g));
            CHECK(negative_girth(g) == 5);
        }
    }
}

TEST_CASE("Γ_n built directly matches the family at τ = 0") {
    for (int n = 6; n <= 10; ++n) {
        CHECK(canonical_code(gamma_graph(n)) == canonical_code(build_family({n, 0})));
        CHECK(canonical_code(build_family({n, n - 5})) == canonical_code(build_family({n, 0})));
    }
}

TEST_CASE("quotient matrices") {
    CHECK(quotient_matrix({6, 0}).entries ==
          matrix5({{0, -1, 0, 1, 0}, {-1, 0, 1, 0, 0}, {0, 1, 0, 0, 2}, {1, 0, 0, 0, 2}, {0, 0, 1, 1, 1}}));
    CHECK(quotient_matrix({7, 1}).entries ==
          matrix5({{0, -1, 0, 2, 0}, {-1, 0, 1, 0, 0}, {0, 1, 0, 0, 2}, {1, 0, 0, 1, 2}, {0, 0, 1, 2, 1}}));
    const auto q = quotient_matrix({9, 2});
    CHECK(q.cell_sizes() == std::array<int, 5>{1, 1, 1, 3, 3});
}

TEST_CASE("the partition is equitable for every small member") {
    for (int n = 6; n <= 12; ++n) {
        for (int tau = 0; tau <= n - 5; ++tau) {
            const auto q = quotient_matrix({n, tau});
            std::vector<std::vector<Vertex>> cells(q.cells.begin(), q.cells.end());
            const auto b = equitable_quotient(adjacency(build_family({n, tau})), cells);
            REQUIRE(b.has_value());
            CHECK((*b - q.entries.cast<double>()).cwiseAbs().maxCoeff() == 0.0);
        }
    }
}

TEST_CASE("f_τ closed form") {
    CHECK(f_tau({6, 0}) == Polynomial{3, 9, 3, -7, -1, 1});
    CHECK(f_tau({6, 0}).to_string() == "λ^5 - λ^4 - 7λ^3 + 3λ^2 + 9λ + 3");
    for (int n = 6; n <= 30; ++n) {
        for (int tau = 0; tau <= n - 5; ++tau) {
            const FamilyParams p{n, tau};
            REQUIRE(char_poly(quotient_matrix(p).exact()) == f_tau(p));
            CHECK(f_tau(p)(BigInt(-1)) == BigInt((tau + 1) * (n - tau - 4)));
            if (tau > 0) {
                CHECK(f_tau(p) - f_tau({n, tau - 1}) == Polynomial{0, n - 2 * tau - 4, 2 * (n - 2 * tau - 4)});
            }
        }
    }
}

TEST_CASE("f_τ agrees with a cofactor expansion of the quotient") {
    for (int n = 6; n <= 12; ++n) {
        for (int tau = 0; tau <= n - 5; ++tau) {
            CHECK(oracles::laplace_char_poly(quotient_matrix({n, tau}).exact()) == f_tau({n, tau}));
        }
    }
}

TEST_CASE("g and γ_n") {
    CHECK(g_poly(6) == Polynomial{-3, -6, 0, 1});
    for (int n = 6; n <= 50; ++n) {
        CHECK(Polynomial{-1, -1, 1} * g_poly(n) == f_tau({n, 0}));
        CHECK(g_poly(n)(BigInt(n - 4)) == BigInt(-n * n + 7 * n - 13));
        CHECK(g_poly(n)(BigInt(n - 3)) == BigInt(2 * n - 6));
        const double gamma = gamma_n(n);
        CHECK(gamma > n - 4);
        CHECK(gamma < n - 3);
    }
    CHECK(gamma_n(6) == doctest::Approx(2.6691).epsilon(5e-4 / 2.6691));
    CHECK(gamma_n(7) == doctest::Approx(3.7136).epsilon(5e-4 / 3.7136));
    CHECK(gamma_n(10) > 6.0);
    CHECK(gamma_n(10) < 7.0);
}

TEST_CASE("ρ(Γ_n) is λ1 and equals γ_n") {
    for (int n = 6; n <= 20; ++n) {
        const auto spectrum = eigenvalues(build_family({n, 0}));
        CHECK(spectrum.largest() == doctest::Approx(gamma_n(n)).epsilon(1e-10));
        CHECK(spectrum.largest() > -spectrum.smallest());
    }
}

TEST_CASE("quotient roots") {
    const auto roots = quotient_roots({6, 0});
    REQUIRE(roots.size() == 5);
    for (double r : roots) CHECK(std::abs(f_tau({6, 0}).evaluate(r)) < 1e-9);
    CHECK(roots.front() == doctest::Approx(gamma_n(6)).epsilon(1e-12));
    CHECK(std::is_sorted(roots.rbegin(), roots.rend()));
}

TEST_CASE("family spectrum reports") {
    const auto r6 = verify_family_spectrum({6, 0});
    CHECK(r6.ok());
    CHECK(r6.minus_one_multiplicity == 1);
    CHECK(r6.lambda1_exceeds_n_minus_4 == true);

    const auto r12 = verify_family_spectrum({12, 3});
    CHECK(r12.ok());
    CHECK(r12.minus_one_multiplicity == 7);
    CHECK_FALSE(r12.lambda1_exceeds_n_minus_4.has_value());
    CHECK(r12.max_deviation < 1e-8);

    CHECK_THROWS_AS(verify_family_spectrum({41, 0}), std::invalid_argument);
}

TEST_CASE("λ1 is maximized over τ exactly at the ends") {
    for (int n = 7; n <= 20; ++n) {
        const double top = eigenvalues(build_family({n, 0})).largest();
        for (int tau = 0; tau <= n - 5; ++tau) {
            const double l1 = eigenvalues(build_family({n, tau})).largest();
            CHECK(l1 <= top + 1e-9);
            const bool end = tau == 0 || tau == n - 5;
            CHECK((std::abs(l1 - top) <= 1e-9) == end);
        }
    }
}
