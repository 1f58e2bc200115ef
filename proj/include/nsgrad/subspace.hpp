#pragma once

#include <nsgrad/linalg.hpp>
#include <nsgrad/matrix.hpp>

#include <stdexcept>
#include <vector>

namespace nsgrad {

/// Linear subspace of Q^n held as the reduced echelon form of a spanning set.
/// Two subspaces are equal exactly when their basis matrices are equal.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

    static Subspace span(std::size_t ambient, const std::vector<Vector>& generators) {
        Subspace s(ambient);
        if (generators.empty()) return s;
        s.basis_ = canonical(Matrix::from_rows(generators, ambient));
        return s;
    }
    static Subspace whole(std::size_t ambient) {
        Subspace s(ambient);
        s.basis_ = Matrix::identity(ambient);
        return s;
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }
    const Matrix& basis() const { return basis_; }
    std::vector<Vector> basis_vectors() const {
        std::vector<Vector> out;
        for (std::size_t r = 0; r < basis_.rows(); ++r) out.push_back(basis_.row_vector(r));
        return out;
    }

    bool contains(const Vector& v) const {
        check_ambient(v.size());
        if (nsgrad::is_zero(v)) return true;
        auto gens = basis_vectors();
        gens.push_back(v);
        return rank(Matrix::from_rows(gens, ambient_)) == dim();
    }
    bool contains(const Subspace& other) const {
        check_ambient(other.ambient_);
        return sum(other).dim() == dim();
    }

    Subspace sum(const Subspace& other) const {
        check_ambient(other.ambient_);
        auto gens = basis_vectors();
        auto more = other.basis_vectors();
        gens.insert(gens.end(), more.begin(), more.end());
        return span(ambient_, gens);
    }

    Subspace intersection(const Subspace& other) const {
        check_ambient(other.ambient_);
        if (is_zero() || other.is_zero()) return Subspace(ambient_);
        // Solve sum_i a_i u_i - sum_j b_j w_j = 0 and map the a-part back.
        const std::size_t du = dim(), dw = other.dim();
        Matrix system(ambient_, du + dw);
        for (std::size_t k = 0; k < ambient_; ++k) {
            for (std::size_t i = 0; i < du; ++i) system(k, i) = basis_(i, k);
            for (std::size_t j = 0; j < dw; ++j) system(k, du + j) = -other.basis_(j, k);
        }
        std::vector<Vector> gens;
        for (const auto& sol : nullspace(system)) {
            Vector v(ambient_);
            for (std::size_t i = 0; i < du; ++i)
                if (sol[i] != 0)
                    for (std::size_t k = 0; k < ambient_; ++k) v[k] += sol[i] * basis_(i, k);
            gens.push_back(std::move(v));
        }
        return span(ambient_, gens);
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    static Matrix canonical(const Matrix& generators) {
        Echelon e = rref(generators);
        Matrix out(e.rank(), generators.cols());
        for (std::size_t r = 0; r < e.rank(); ++r)
            for (std::size_t c = 0; c < generators.cols(); ++c) out(r, c) = e.form(r, c);
        return out;
    }
    void check_ambient(std::size_t n) const {
        if (n != ambient_) throw std::invalid_argument("subspace ambient dimension mismatch");
    }

    std::size_t ambient_ = 0;
    Matrix basis_;
};

/// True when the subspaces are independent (their sum is direct).
inline bool independent(const std::vector<Subspace>& parts, std::size_t ambient) {
    Subspace total(ambient);
    std::size_t dims = 0;
    for (const auto& p : parts) {
        total = total.sum(p);
        dims += p.dim();
    }
    return total.dim() == dims;
}

}  // namespace nsgrad
