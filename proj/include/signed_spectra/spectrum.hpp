#pragma once

#include <optional>
#include <vector>

#include "signed_spectra/jacobi.hpp"
#include "signed_spectra/signed_graph.hpp"

namespace signed_spectra {

/// Signed adjacency matrix A(Γ): σ(uv) on edges, 0 elsewhere.
template <typename Scalar = double>
DenseMatrix<Scalar> adjacency(const SignedGraph& g) {
    DenseMatrix<Scalar> a = DenseMatrix<Scalar>::Zero(g.order(), g.order());
    for (const auto& e : g.edges()) {
        a(e.u, e.v) = static_cast<Scalar>(e.sign);
        a(e.v, e.u) = static_cast<Scalar>(e.sign);
    }
    return a;
}

/// Real spectrum sorted descending.
template <typename Scalar>
struct BasicSpectrum {
    DenseVector<Scalar> eigenvalues;

    Scalar largest() const { return eigenvalues(0); }
    Scalar smallest() const { return eigenvalues(eigenvalues.size() - 1); }
    Scalar spectral_radius() const { return std::max(largest(), -smallest()); }
};

template <typename Scalar>
struct BasicEigenPair {
    Scalar value{};
    DenseVector<Scalar> vector;
};

using Spectrum = BasicSpectrum<double>;
using EigenPair = BasicEigenPair<double>;

template <typename Derived>
BasicSpectrum<typename Derived::Scalar> eigenvalues(const Eigen::MatrixBase<Derived>& m) {
    if (m.rows() < 1) throw std::invalid_argument("eigenvalues: empty matrix");
    return {jacobi_eigen(m).values};
}

Spectrum eigenvalues(const SignedGraph& g);

/// ρ(Γ) = max(λ1, -λn).
double spectral_radius(const SignedGraph& g);

/**
 * Unit eigenvector for λ1, signed so that its largest-magnitude entry
 * (first one, on near-ties) is nonnegative.
 */
EigenPair leading_eigenpair(const SignedGraph& g);

struct NonnegativeSwitching {
    std::vector<Vertex> switched;   // U = {v : x_v < 0}
    SignedGraph graph;              // Γ^U
    Eigen::VectorXd eigenvector;    // leading eigenvector of Γ^U, entrywise >= 0
    double value = 0.0;
};

NonnegativeSwitching nonnegative_switching(const SignedGraph& g);

/**
 * Quotient of `m` over an equitable partition, or nothing when some block
 * has non-constant row sums (beyond `tolerance`).
 */
std::optional<Eigen::MatrixXd> equitable_quotient(const Eigen::MatrixXd& m,
                                                  const std::vector<std::vector<Vertex>>& cells,
                                                  double tolerance = 1e-12);

}  // namespace signed_spectra
