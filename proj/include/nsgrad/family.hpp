#pragma once

/**
 * @file family.hpp
 * @brief The four-map algebra family on Ke + Ka + V + V'.
 *
 * Basis order is fixed: e, a, v_1..v_n, v'_1..v'_n. A map f: V -> V acts
 * on column vectors, so f(v_j) is column j of its matrix. Nonzero basis
 * products:
 *
 *     e e   = e
 *     a v   = f_L(v)'      v a  = f_R(v)'
 *     a v'  = g_L(v)       v' a = g_R(v)
 */

#include <nsgrad/algebra.hpp>
#include <nsgrad/matrix.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace nsgrad {

struct FamilySpec {
    std::size_t v_dim = 0;
    Matrix f_left, f_right, g_left, g_right;

    void validate() const {
        for (const Matrix* m : {&f_left, &f_right, &g_left, &g_right})
            if (m->rows() != v_dim || m->cols() != v_dim)
                throw std::invalid_argument("family maps must all be v_dim x v_dim");
    }
};

/// Index helpers for the fixed family basis order.
struct FamilyBasis {
    std::size_t v_dim;
    static constexpr std::size_t e = 0;
    static constexpr std::size_t a = 1;
    std::size_t v(std::size_t i) const { return 2 + i; }
    std::size_t v_prime(std::size_t i) const { return 2 + v_dim + i; }
    std::size_t dim() const { return 2 + 2 * v_dim; }
};

inline Algebra build_family(const FamilySpec& spec) {
    spec.validate();
    const std::size_t n = spec.v_dim;
    const FamilyBasis b{n};
    std::vector<std::string> names{"e", "a"};
    for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i + 1));
    for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i + 1) + "'");
    Algebra alg(std::move(names));
    alg.set_coeff(b.e, b.e, b.e, 1);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            alg.set_coeff(b.a, b.v(j), b.v_prime(i), spec.f_left(i, j));
            alg.set_coeff(b.v(j), b.a, b.v_prime(i), spec.f_right(i, j));
            alg.set_coeff(b.a, b.v_prime(j), b.v(i), spec.g_left(i, j));
            alg.set_coeff(b.v_prime(j), b.a, b.v(i), spec.g_right(i, j));
        }
    return alg;
}

struct FamilyCheck {
    std::vector<std::string> violated;
    bool holds() const { return violated.empty(); }
};

/// The six composition equations equivalent to associativity of the family algebra.
inline FamilyCheck family_associativity_conditions(const FamilySpec& spec) {
    spec.validate();
    const Matrix& fl = spec.f_left;
    const Matrix& fr = spec.f_right;
    const Matrix& gl = spec.g_left;
    const Matrix& gr = spec.g_right;
    FamilyCheck out;
    auto require = [&](bool ok, const char* name) {
        if (!ok) out.violated.emplace_back(name);
    };
    require((fl * gl).is_zero(), "f_L o g_L = 0");
    require((gl * fl).is_zero(), "g_L o f_L = 0");
    require((fr * gr).is_zero(), "f_R o g_R = 0");
    require((gr * fr).is_zero(), "g_R o f_R = 0");
    require(gr * fl == gl * fr, "g_R o f_L = g_L o f_R");
    require(fr * gl == fl * gr, "f_R o g_L = f_L o g_R");
    return out;
}

}  // namespace nsgrad
