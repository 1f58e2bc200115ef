#pragma once

/**
 * @file linalg.hpp
 * @brief Exact linear algebra over the rationals.
 *
 * Reduced row echelon form is the single workhorse: nullspaces, subspace
 * canonical forms and generalized eigenspaces are all read off from it.
 * Characteristic polynomials use the Faddeev-LeVerrier recurrence, which
 * is exact over any field of characteristic zero.
 */

#include <nsgrad/matrix.hpp>
#include <nsgrad/polynomial.hpp>
#include <nsgrad/rational.hpp>

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nsgrad {

struct Echelon {
    Matrix form;
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

inline Echelon rref(Matrix m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col) == 0) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(row, p);
        const Rational inv = 1 / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0) continue;
            const Rational factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (m(row, c) != 0) m(r, c) -= factor * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank(); }

/// Basis of {x : m x = 0}. One vector per free column, ascending; the free
/// coordinate is 1, the other free coordinates 0.
inline std::vector<Vector> nullspace(const Matrix& m) {
    const Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.form(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline Matrix matrix_power(const Matrix& m, std::size_t k) {
    if (!m.is_square()) throw std::invalid_argument("matrix_power: non-square matrix");
    Matrix result = Matrix::identity(m.rows());
    Matrix base = m;
    while (k > 0) {
        if (k & 1U) result = result * base;
        k >>= 1U;
        if (k > 0) base = base * base;
    }
    return result;
}

/// Monic det(tI - m) via Faddeev-LeVerrier.
inline Polynomial char_poly(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("char_poly: non-square matrix");
    const std::size_t n = m.rows();
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    Matrix aux(n, n);  // M_0 = 0
    const Matrix id = Matrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        aux = m * aux + c[n - k + 1] * id;
        const Matrix am = m * aux;
        Rational trace = 0;
        for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
        c[n - k] = -trace / static_cast<long>(k);
    }
    return Polynomial(std::move(c));
}

struct RootSplit {
    std::map<Rational, std::size_t> roots;  // root -> multiplicity
    Polynomial residual;                    // p with every rational linear factor removed
    bool splits() const { return residual.degree() == 0; }
};

namespace detail {

inline std::vector<Integer> positive_divisors(Integer n) {
    if (n < 0) n = -n;
    std::vector<Integer> small, large;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d * d != n) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace detail

/// Rational roots with multiplicities, by the rational root theorem.
inline RootSplit rational_roots(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
    RootSplit out;
    std::vector<Rational> coeffs = p.coefficients();
    std::size_t zero_mult = 0;
    while (coeffs[zero_mult] == 0) ++zero_mult;
    if (zero_mult > 0) out.roots[Rational(0)] = zero_mult;
    Polynomial residual(std::vector<Rational>(coeffs.begin() + static_cast<long>(zero_mult), coeffs.end()));

    if (residual.degree() >= 1) {
        // Clear denominators to reach an integer polynomial with the same roots.
        Integer scale = 1;
        for (const auto& c : residual.coefficients()) {
            const Integer& d = boost::multiprecision::denominator(c);
            scale = scale / boost::multiprecision::gcd(scale, d) * d;
        }
        const Integer lead = boost::multiprecision::numerator(residual.leading() * scale);
        const Integer constant = boost::multiprecision::numerator(residual.coefficient(0) * scale);
        const auto num_divs = detail::positive_divisors(constant);
        const auto den_divs = detail::positive_divisors(lead);
        for (const auto& q : den_divs)
            for (const auto& pnum : num_divs)
                for (int sign : {1, -1}) {
                    if (residual.degree() < 1) break;
                    const Rational candidate(Integer(sign) * pnum, q);
                    if (out.roots.count(candidate) != 0) continue;
                    std::size_t mult = 0;
                    while (residual.degree() >= 1) {
                        auto [quot, rem] = residual.divide_linear(candidate);
                        if (rem != 0) break;
                        residual = std::move(quot);
                        ++mult;
                    }
                    if (mult > 0) out.roots[candidate] = mult;
                }
    }
    // Normalize the residual to be monic so that a split polynomial leaves exactly 1.
    const Rational lead = residual.leading();
    std::vector<Rational> monic = residual.coefficients();
    for (auto& c : monic) c /= lead;
    out.residual = Polynomial(std::move(monic));
    return out;
}

/// Basis of ker (m - lambda I)^n; empty when lambda is not an eigenvalue.
inline std::vector<Vector> generalized_eigenspace(const Matrix& m, const Rational& lambda) {
    if (!m.is_square()) throw std::invalid_argument("generalized_eigenspace: non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return {};
    const Matrix shifted = m - lambda * Matrix::identity(n);
    return nullspace(matrix_power(shifted, n));
}

}  // namespace nsgrad
