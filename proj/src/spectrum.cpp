#include "signed_spectra/spectrum.hpp"

#include <cmath>

namespace signed_spectra {

Spectrum eigenvalues(const SignedGraph& g) { return eigenvalues(adjacency(g)); }

double spectral_radius(const SignedGraph& g) { return eigenvalues(g).spectral_radius(); }

EigenPair leading_eigenpair(const SignedGraph& g) {
    if (g.order() < 1) throw std::invalid_argument("leading_eigenpair: empty graph");
    const auto eig = jacobi_eigen(adjacency(g));
    Eigen::VectorXd x = eig.vectors.col(0);
    x.normalize();
    Eigen::Index pivot = 0;
    const double peak = x.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        if (std::abs(x(i)) >= peak - 1e-12) {
            pivot = i;
            break;
        }
    }
    if (x(pivot) < 0) x = -x;
    return {eig.values(0), x};
}

NonnegativeSwitching nonnegative_switching(const SignedGraph& g) {
    const auto pair = leading_eigenpair(g);
    NonnegativeSwitching out;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (pair.vector(v) < 0) out.switched.push_back(v);
    }
    out.graph = switch_at(g, out.switched);
    out.eigenvector = pair.vector.cwiseAbs();
    out.value = pair.value;
    return out;
}

std::optional<Eigen::MatrixXd> equitable_quotient(const Eigen::MatrixXd& m,
                                                  const std::vector<std::vector<Vertex>>& cells,
                                                  double tolerance) {
    const auto k = static_cast<Eigen::Index>(cells.size());
    Eigen::MatrixXd q(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
        for (Eigen::Index j = 0; j < k; ++j) {
            const auto& rows = cells[static_cast<std::size_t>(i)];
            const auto& cols = cells[static_cast<std::size_t>(j)];
            if (rows.empty()) return std::nullopt;
            std::optional<double> common;
            for (Vertex r : rows) {
                double sum = 0.0;
                for (Vertex c : cols) sum += m(r, c);
                if (!common) {
                    common = sum;
                } else if (std::abs(*common - sum) > tolerance) {
                    return std::nullopt;
                }
            }
            q(i, j) = *common;
        }
    }
    return q;
}

}  // namespace signed_spectra
