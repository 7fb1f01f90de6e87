#pragma once

#include <cmath>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Dense>

namespace signed_spectra {

using BigInt = boost::multiprecision::cpp_int;

/// Univariate polynomial with exact integer coefficients, lowest degree first.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<long long> coefficients);
    explicit Polynomial(std::vector<BigInt> coefficients);

    static Polynomial monomial(int degree, BigInt coefficient = 1);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    BigInt coefficient(int k) const;

    BigInt operator()(const BigInt& x) const;
    long double evaluate(long double x) const;
    Polynomial derivative() const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator-(Polynomial a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }
    bool operator==(const Polynomial&) const = default;

    /// e.g. "λ^5 - λ^4 - 7λ^3 + 3λ^2 + 9λ + 3"
    std::string to_string(const std::string& variable = "λ") const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/// Row-major square integer matrix used for exact work.
using IntegerMatrix = std::vector<std::vector<BigInt>>;

/// Exact det(λI - M) by Berkowitz's division-free algorithm.
Polynomial char_poly(const IntegerMatrix& m);

/// Same, for a dense matrix whose entries must all be integers; throws std::invalid_argument otherwise.
template <typename Derived>
Polynomial char_poly(const Eigen::MatrixBase<Derived>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: matrix is not square");
    IntegerMatrix exact(static_cast<std::size_t>(m.rows()), std::vector<BigInt>(static_cast<std::size_t>(m.cols())));
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            const auto value = static_cast<long double>(m(i, j));
            const long double rounded = std::round(value);
            if (value != rounded) throw std::invalid_argument("char_poly: non-integer matrix entry");
            exact[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<long long>(rounded);
        }
    }
    return char_poly(exact);
}

/**
 * Largest real root of p inside [lo, hi], to absolute accuracy 1e-12.
 *
 * Bisection on a sign change followed by Newton polishing. Throws
 * std::invalid_argument when p has no sign change over the bracket and no
 * root at an endpoint.
 */
double largest_root(const Polynomial& p, double lo, double hi);

}  // namespace signed_spectra
