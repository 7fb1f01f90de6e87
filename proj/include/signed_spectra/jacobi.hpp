#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace signed_spectra {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

struct JacobiOptions {
    double off_diagonal_tolerance = 1e-14;  // relative to the Frobenius norm
    int max_sweeps = 100;
};

/// Eigenvalues in descending order; column k of `vectors` belongs to values(k).
template <typename Scalar>
struct SymmetricEigen {
    DenseVector<Scalar> values;
    DenseMatrix<Scalar> vectors;
    int sweeps = 0;
};

/**
 * Cyclic Jacobi eigen-decomposition of a dense symmetric matrix.
 *
 * Rotations are applied row by row over the strict upper triangle until the
 * off-diagonal Frobenius norm falls below the tolerance times the matrix
 * norm. Output is sorted descending; ties keep the diagonal order, so results
 * are deterministic for identical input.
 */
template <typename Derived>
SymmetricEigen<typename Derived::Scalar> jacobi_eigen(const Eigen::MatrixBase<Derived>& input,
                                                      const JacobiOptions& options = {}) {
    using Scalar = typename Derived::Scalar;
    using std::abs;
    using std::sqrt;

    if (input.rows() != input.cols()) throw std::invalid_argument("jacobi_eigen: matrix is not square");
    const Eigen::Index n = input.rows();
    DenseMatrix<Scalar> a = input;
    if (a != a.transpose()) throw std::invalid_argument("jacobi_eigen: matrix is not symmetric");
    DenseMatrix<Scalar> v = DenseMatrix<Scalar>::Identity(n, n);

    const Scalar norm = a.norm();
    const Scalar target = static_cast<Scalar>(options.off_diagonal_tolerance) * (norm > Scalar(1) ? norm : Scalar(1));

    auto off_norm = [&] {
        Scalar s(0);
        for (Eigen::Index p = 0; p < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) s += a(p, q) * a(p, q);
        }
        return sqrt(Scalar(2) * s);
    };

    int sweep = 0;
    for (; sweep < options.max_sweeps && off_norm() > target; ++sweep) {
        for (Eigen::Index p = 0; p < n - 1; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const Scalar apq = a(p, q);
                if (apq == Scalar(0)) continue;
                const Scalar theta = (a(q, q) - a(p, p)) / (Scalar(2) * apq);
                const Scalar t = (theta >= Scalar(0) ? Scalar(1) : Scalar(-1)) /
                                 (abs(theta) + sqrt(theta * theta + Scalar(1)));
                const Scalar c = Scalar(1) / sqrt(t * t + Scalar(1));
                const Scalar s = t * c;

                for (Eigen::Index k = 0; k < n; ++k) {
                    const Scalar akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    const Scalar apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = Scalar(0);
                a(q, p) = Scalar(0);
                for (Eigen::Index k = 0; k < n; ++k) {
                    const Scalar vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) { return a(i, i) > a(j, j); });

    SymmetricEigen<Scalar> out;
    out.values.resize(n);
    out.vectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        out.values(k) = a(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(k)]);
        out.vectors.col(k) = v.col(order[static_cast<std::size_t>(k)]);
    }
    out.sweeps = sweep;
    return out;
}

}  // namespace signed_spectra
