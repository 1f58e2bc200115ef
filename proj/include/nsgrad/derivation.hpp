#pragma once

/**
 * @file derivation.hpp
 * @brief Solving D(xy) = delta D(x) y + gamma x D(y) for linear maps D.
 *
 * A map D is stored as an n x n matrix whose column j is D(e_j). The
 * defining identity is linear in the n^2 entries of D, so the solution set
 * is the nullspace of an n^3 x n^2 system (one row per basis pair and
 * output coordinate). Entries are flattened row-major: D(i, j) -> i*n + j.
 */

#include <nsgrad/algebra.hpp>
#include <nsgrad/linalg.hpp>
#include <nsgrad/subspace.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace nsgrad {

struct DerivationProblem {
    Rational delta;
    Rational gamma;
};

inline Vector flatten(const Matrix& m) { return m.entries(); }

inline Matrix unflatten(const Vector& v, std::size_t n) { return Matrix(n, n, v); }

/// Span of a family of n x n matrices as a subspace of Q^(n*n).
inline Subspace matrix_span(const std::vector<Matrix>& maps, std::size_t n) {
    std::vector<Vector> gens;
    gens.reserve(maps.size());
    for (const auto& m : maps) gens.push_back(flatten(m));
    return Subspace::span(n * n, gens);
}

/// First basis pair (i, j) where the defining identity fails, by direct substitution.
inline std::optional<std::pair<std::size_t, std::size_t>> derivation_defect(const Algebra& alg,
                                                                           const DerivationProblem& prob,
                                                                           const Matrix& d) {
    const std::size_t n = alg.dim();
    if (d.rows() != n || d.cols() != n) throw std::invalid_argument("derivation_defect: map size mismatch");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vector lhs = d * alg.basis_product(i, j);
            Vector rhs = product(alg, d.column(i), unit_vector(n, j));
            const Vector right_term = product(alg, unit_vector(n, i), d.column(j));
            for (std::size_t k = 0; k < n; ++k) rhs[k] = prob.delta * rhs[k] + prob.gamma * right_term[k];
            if (lhs != rhs) return std::make_pair(i, j);
        }
    return std::nullopt;
}

inline bool is_derivation(const Algebra& alg, const DerivationProblem& prob, const Matrix& d) {
    return !derivation_defect(alg, prob, d).has_value();
}

/// Basis of all (delta, gamma)-derivations, in the canonical nullspace form.
inline std::vector<Matrix> derivation_space(const Algebra& alg, const DerivationProblem& prob) {
    const std::size_t n = alg.dim();
    if (n == 0) return {};
    auto var = [n](std::size_t row, std::size_t col) { return row * n + col; };
    Matrix system(n * n * n, n * n);
    std::size_t eq = 0;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            for (std::size_t k = 0; k < n; ++k, ++eq) {
                // D(e_p e_q)_k = sum_r c[p][q][r] D[k][r]
                for (std::size_t r = 0; r < n; ++r)
                    if (alg.coeff(p, q, r) != 0) system(eq, var(k, r)) += alg.coeff(p, q, r);
                // - delta (D e_p) e_q : sum_i D[i][p] c[i][q][k]
                for (std::size_t i = 0; i < n; ++i)
                    if (alg.coeff(i, q, k) != 0) system(eq, var(i, p)) -= prob.delta * alg.coeff(i, q, k);
                // - gamma e_p (D e_q) : sum_i D[i][q] c[p][i][k]
                for (std::size_t i = 0; i < n; ++i)
                    if (alg.coeff(p, i, k) != 0) system(eq, var(i, q)) -= prob.gamma * alg.coeff(p, i, k);
            }
    std::vector<Matrix> basis;
    for (const auto& v : nullspace(system)) basis.push_back(unflatten(v, n));
    return basis;
}

}  // namespace nsgrad
