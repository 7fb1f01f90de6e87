#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "signed_spectra/polynomial.hpp"
#include "signed_spectra/signed_graph.hpp"
#include "signed_spectra/spectrum.hpp"

namespace signed_spectra {

/**
 * Parameters of the extremal family Γ(n, τ): n >= 6, 0 <= τ <= n - 5.
 *
 * The construction places v1..v5 at ids 0..4 (v_i -> i - 1), with v4 the
 * first member of Y. X takes ids 5..4+τ and the rest of Y follows, so
 * |X| = τ and |Y| = n - 4 - τ. τ = 0 gives Γ_n.
 */
struct FamilyParams {
    int n = 6;
    int tau = 0;

    void validate() const;
    int x_size() const { return tau; }
    int y_size() const { return n - 4 - tau; }
};

SignedGraph build_family(const FamilyParams& p);

/// Γ_n: K_{n-2} minus an edge uw, plus a negative edge v1v2 with v1 ~ u and v2 ~ w.
SignedGraph gamma_graph(int n);

/// Quotient over the equitable partition {v1}, {v2}, {v3}, {v5} ∪ X, Y.
struct QuotientMatrix {
    Eigen::Matrix<long long, 5, 5> entries;
    std::array<std::vector<Vertex>, 5> cells;

    std::array<int, 5> cell_sizes() const;
    IntegerMatrix exact() const;
    /// diag(√s) Q diag(1/√s): a symmetric matrix similar to Q.
    Eigen::Matrix<double, 5, 5> symmetrized() const;
};

QuotientMatrix quotient_matrix(const FamilyParams& p);

/// f_τ from its closed form.
Polynomial f_tau(const FamilyParams& p);

/// g(λ) = λ^3 - (n-6)λ^2 - 3(n-4)λ - n + 3.
Polynomial g_poly(int n);

/// Largest root of g_poly(n), bracketed in (n-4, n-3).
double gamma_n(int n);

/// The five roots of f_τ in descending order, from the symmetrized quotient.
std::vector<double> quotient_roots(const FamilyParams& p);

struct FamilySpectrumReport {
    FamilyParams params;
    std::vector<double> eigenvalues;  // of Γ(n, τ), descending
    std::vector<double> expected;     // {-1}^(n-5) ∪ roots of f_τ, descending
    int minus_one_multiplicity = 0;   // eigenvalues within 1e-8 of -1
    double lambda1 = 0.0;
    double max_deviation = 0.0;
    bool spectrum_matches = false;
    bool roots_confirmed = true;      // sign checks on clustered quotient roots
    std::optional<bool> lambda1_exceeds_n_minus_4;  // only evaluated at τ = 0
    std::optional<double> offending_eigenvalue;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

/// Compares the spectrum of Γ(n, τ) against {-1}^(n-5) ∪ roots(f_τ) to 1e-8. Requires n <= 40.
FamilySpectrumReport verify_family_spectrum(const FamilyParams& p);

}  // namespace signed_spectra
