#pragma once

/**
 * @file algebra.hpp
 * @brief Finite-dimensional algebras given by structure constants.
 *
 * The product of basis elements i and j is sum_k c[i][j][k] e_k. Nothing
 * about the product is assumed: associativity, commutativity and the
 * Jacobi identity are properties to be checked, not preconditions.
 */

#include <nsgrad/matrix.hpp>
#include <nsgrad/rational.hpp>
#include <nsgrad/subspace.hpp>

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nsgrad {

class Algebra {
public:
    Algebra() = default;

    /// Zero-multiplication algebra on the given basis labels.
    explicit Algebra(std::vector<std::string> basis_names)
        : dim_(basis_names.size()), names_(std::move(basis_names)), table_(dim_ * dim_ * dim_) {
        std::set<std::string> seen(names_.begin(), names_.end());
        if (seen.size() != names_.size()) throw std::invalid_argument("basis names must be pairwise distinct");
    }

    static Algebra with_default_names(std::size_t dim) {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < dim; ++i) names.push_back("x" + std::to_string(i + 1));
        return Algebra(std::move(names));
    }

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& basis_names() const { return names_; }

    const Rational& coeff(std::size_t i, std::size_t j, std::size_t k) const { return table_[index(i, j, k)]; }
    void set_coeff(std::size_t i, std::size_t j, std::size_t k, Rational value) {
        table_.at(index(i, j, k)) = std::move(value);
    }

    /// e_i e_j as a coordinate vector.
    Vector basis_product(std::size_t i, std::size_t j) const {
        Vector out(dim_);
        for (std::size_t k = 0; k < dim_; ++k) out[k] = coeff(i, j, k);
        return out;
    }

    bool is_zero_multiplication() const {
        for (const auto& c : table_)
            if (c != 0) return false;
        return true;
    }

    friend bool operator==(const Algebra&, const Algebra&) = default;

private:
    std::size_t index(std::size_t i, std::size_t j, std::size_t k) const { return (i * dim_ + j) * dim_ + k; }

    std::size_t dim_ = 0;
    std::vector<std::string> names_;
    std::vector<Rational> table_;
};

/// Bilinear extension of the structure constants.
inline Vector product(const Algebra& alg, const Vector& x, const Vector& y) {
    const std::size_t n = alg.dim();
    if (x.size() != n || y.size() != n) throw std::invalid_argument("product: vector length differs from algebra dimension");
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j] == 0) continue;
            const Rational s = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k)
                if (alg.coeff(i, j, k) != 0) out[k] += s * alg.coeff(i, j, k);
        }
    }
    return out;
}

enum class Identity { Associative, Commutative, Anticommutative, Jacobi };

/// Bracket used by the Jacobi check. Auto picks the raw product for
/// anticommutative algebras and the commutator xy - yx otherwise.
enum class JacobiBracket { Auto, Raw, Commutator };

struct IdentityCheck {
    /// Basis indices of the lexicographically first tuple where the identity fails.
    std::optional<std::vector<std::size_t>> witness;
    bool holds() const { return !witness.has_value(); }
};

namespace detail {

inline Vector add(Vector a, const Vector& b) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
    return a;
}
inline Vector sub(Vector a, const Vector& b) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
    return a;
}

}  // namespace detail

inline IdentityCheck check_identity(const Algebra& alg, Identity which,
                                    JacobiBracket bracket = JacobiBracket::Auto) {
    const std::size_t n = alg.dim();
    auto e = [n](std::size_t i) { return unit_vector(n, i); };
    IdentityCheck result;
    switch (which) {
    case Identity::Associative:
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    const Vector left = product(alg, alg.basis_product(i, j), e(k));
                    const Vector right = product(alg, e(i), alg.basis_product(j, k));
                    if (left != right) {
                        result.witness = std::vector<std::size_t>{i, j, k};
                        return result;
                    }
                }
        return result;
    case Identity::Commutative:
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (alg.basis_product(i, j) != alg.basis_product(j, i)) {
                    result.witness = std::vector<std::size_t>{i, j};
                    return result;
                }
        return result;
    case Identity::Anticommutative:
        // x^2 = 0 for all x  <=>  e_i e_j + e_j e_i = 0 for i <= j (characteristic 0).
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j)
                if (!is_zero(detail::add(alg.basis_product(i, j), alg.basis_product(j, i)))) {
                    result.witness = std::vector<std::size_t>{i, j};
                    return result;
                }
        return result;
    case Identity::Jacobi: {
        bool raw = bracket == JacobiBracket::Raw;
        if (bracket == JacobiBracket::Auto) raw = check_identity(alg, Identity::Anticommutative).holds();
        auto br = [&](const Vector& x, const Vector& y) {
            Vector xy = product(alg, x, y);
            return raw ? xy : detail::sub(std::move(xy), product(alg, y, x));
        };
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    Vector sum = br(br(e(i), e(j)), e(k));
                    sum = detail::add(std::move(sum), br(br(e(j), e(k)), e(i)));
                    sum = detail::add(std::move(sum), br(br(e(k), e(i)), e(j)));
                    if (!is_zero(sum)) {
                        result.witness = std::vector<std::size_t>{i, j, k};
                        return result;
                    }
                }
        return result;
    }
    }
    return result;
}

/// Canonical span of all products u_i w_j of basis vectors.
inline Subspace subspace_product(const Algebra& alg, const Subspace& u, const Subspace& w) {
    if (u.ambient_dim() != alg.dim() || w.ambient_dim() != alg.dim())
        throw std::invalid_argument("subspace_product: ambient dimension mismatch");
    std::vector<Vector> gens;
    for (const auto& x : u.basis_vectors())
        for (const auto& y : w.basis_vectors()) {
            Vector p = product(alg, x, y);
            if (!is_zero(p)) gens.push_back(std::move(p));
        }
    return Subspace::span(alg.dim(), gens);
}

}  // namespace nsgrad
