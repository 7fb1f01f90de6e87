#include "signed_spectra/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace signed_spectra {

Polynomial::Polynomial(std::initializer_list<long long> coefficients) {
    for (long long c : coefficients) coeffs_.emplace_back(c);
    trim();
}

Polynomial::Polynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::monomial(int degree, BigInt coefficient) {
    std::vector<BigInt> c(static_cast<std::size_t>(degree + 1));
    c.back() = std::move(coefficient);
    return Polynomial(std::move(c));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt Polynomial::coefficient(int k) const {
    if (k < 0 || k > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

BigInt Polynomial::operator()(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

long double Polynomial::evaluate(long double x) const {
    long double acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->convert_to<long double>();
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<BigInt> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long long>(k);
    return Polynomial(std::move(d));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

std::string Polynomial::to_string(const std::string& variable) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const BigInt& c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        const BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || k == 0) os << mag;
        if (k >= 1) os << variable;
        if (k >= 2) os << "^" << k;
        first = false;
    }
    return os.str();
}

Polynomial char_poly(const IntegerMatrix& m) {
    const std::size_t n = m.size();
    for (const auto& row : m) {
        if (row.size() != n) throw std::invalid_argument("char_poly: matrix is not square");
    }
    if (n == 0) return Polynomial{1};

    // Coefficients highest degree first while iterating.
    std::vector<BigInt> c{1, -m[0][0]};
    for (std::size_t r = 1; r < n; ++r) {
        // Toeplitz column: 1, -a_rr, -R S, -R A S, ..., -R A^{r-1} S
        std::vector<BigInt> t(r + 2);
        t[0] = 1;
        t[1] = -m[r][r];
        std::vector<BigInt> s(r);
        for (std::size_t i = 0; i < r; ++i) s[i] = m[i][r];
        for (std::size_t k = 2; k < r + 2; ++k) {
            BigInt dot = 0;
            for (std::size_t i = 0; i < r; ++i) dot += m[r][i] * s[i];
            t[k] = -dot;
            std::vector<BigInt> next(r);
            for (std::size_t i = 0; i < r; ++i) {
                BigInt acc = 0;
                for (std::size_t j = 0; j < r; ++j) acc += m[i][j] * s[j];
                next[i] = std::move(acc);
            }
            s = std::move(next);
        }
        std::vector<BigInt> out(r + 2);
        for (std::size_t i = 0; i < r + 2; ++i) {
            for (std::size_t j = 0; j <= std::min(i, r); ++j) out[i] += t[i - j] * c[j];
        }
        c = std::move(out);
    }
    std::reverse(c.begin(), c.end());
    return Polynomial(std::move(c));
}

namespace {

int sign_at(const Polynomial& p, double x) {
    if (x == std::floor(x) && std::abs(x) < 1e15) {
        const BigInt v = p(BigInt(static_cast<long long>(x)));
        return v > 0 ? 1 : (v < 0 ? -1 : 0);
    }
    const long double v = p.evaluate(x);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

}  // namespace

double largest_root(const Polynomial& p, double lo, double hi) {
    if (!(lo < hi)) throw std::invalid_argument("largest_root: empty bracket");
    const int s_hi = sign_at(p, hi);
    if (s_hi == 0) return hi;
    const int s_lo = sign_at(p, lo);
    if (s_lo == 0) return lo;
    if (s_lo == s_hi) throw std::invalid_argument("largest_root: no sign change over bracket");

    long double a = lo, b = hi;
    for (int it = 0; it < 200 && b - a > 1e-15L * std::max(1.0L, std::abs(b)); ++it) {
        const long double mid = 0.5L * (a + b);
        const long double v = p.evaluate(mid);
        if (v == 0) return static_cast<double>(mid);
        if ((v > 0) == (s_hi > 0)) {
            b = mid;
        } else {
            a = mid;
        }
    }
    const Polynomial dp = p.derivative();
    long double x = 0.5L * (a + b);
    for (int it = 0; it < 3; ++it) {
        const long double d = dp.evaluate(x);
        if (d == 0) break;
        const long double next = x - p.evaluate(x) / d;
        if (next < a || next > b) break;
        x = next;
    }
    return static_cast<double>(x);
}

}  // namespace signed_spectra
