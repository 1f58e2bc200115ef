#pragma once

/**
 * @file lemma2.hpp
 * @brief Direct block parametrization of (delta, gamma)-derivations of the
 *        four-map family, valid when all four maps are nonzero and
 *        (delta, gamma) != (0, 0).
 *
 * A derivation has the block form
 *
 *     D(e)  = beta e          (beta = 0 unless delta + gamma = 1)
 *     D(a)  = alpha a + v_a + w_a'
 *     D(v)  = phi(v) + psi(v)'
 *     D(v') = phi~(v) + psi~(v)'
 *
 * subject to two kernel conditions on v_a, w_a and eight composition
 * identities linking phi, psi, phi~, psi~ with alpha and the four maps.
 * All of them are linear, so the solution set is one nullspace over the
 * unknown vector [alpha, beta?, v_a, w_a, phi, psi, phi~, psi~].
 */

#include <nsgrad/derivation.hpp>
#include <nsgrad/family.hpp>
#include <nsgrad/linalg.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace nsgrad {

struct Lemma2Solution {
    Rational alpha;
    Rational beta;
    Vector v_a;
    Vector w_a;
    Matrix phi, psi, phi_tilde, psi_tilde;
};

/// Raised when the parametrization's hypotheses do not hold.
class Lemma2HypothesisError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

struct Lemma2Layout {
    std::size_t n;
    bool has_beta;
    std::size_t alpha() const { return 0; }
    std::size_t beta() const { return 1; }
    std::size_t v_a(std::size_t i) const { return (has_beta ? 2 : 1) + i; }
    std::size_t w_a(std::size_t i) const { return v_a(0) + n + i; }
    std::size_t block(std::size_t which, std::size_t r, std::size_t c) const {
        return w_a(0) + n + which * n * n + r * n + c;
    }
    std::size_t unknowns() const { return w_a(0) + n + 4 * n * n; }
};

enum Block : std::size_t { Phi = 0, Psi = 1, PhiTilde = 2, PsiTilde = 3 };

inline void check_hypotheses(const FamilySpec& spec, const DerivationProblem& prob) {
    spec.validate();
    const std::pair<const Matrix*, const char*> maps[] = {
        {&spec.f_left, "f_L"}, {&spec.f_right, "f_R"}, {&spec.g_left, "g_L"}, {&spec.g_right, "g_R"}};
    for (const auto& [m, name] : maps)
        if (m->is_zero()) throw Lemma2HypothesisError(std::string("hypothesis violated: ") + name + " is zero");
    if (prob.delta == 0 && prob.gamma == 0)
        throw Lemma2HypothesisError("hypothesis violated: (delta, gamma) = (0, 0)");
}

}  // namespace detail

/// Basis of the solution set of the block conditions.
inline std::vector<Lemma2Solution> lemma2_solution_space(const FamilySpec& spec, const DerivationProblem& prob) {
    using namespace detail;
    check_hypotheses(spec, prob);
    const std::size_t n = spec.v_dim;
    const Rational& dl = prob.delta;
    const Rational& gm = prob.gamma;
    const Lemma2Layout L{n, dl + gm == 1};
    const Matrix& fl = spec.f_left;
    const Matrix& fr = spec.f_right;
    const Matrix& gl = spec.g_left;
    const Matrix& gr = spec.g_right;

    std::vector<Vector> rows;
    auto new_row = [&]() -> Vector& { return rows.emplace_back(L.unknowns()); };

    // (dl*f_R + gm*f_L) v_a = 0 and (dl*g_R + gm*g_L) w_a = 0
    const Matrix kv = dl * fr + gm * fl;
    const Matrix kw = dl * gr + gm * gl;
    for (std::size_t r = 0; r < n; ++r) {
        Vector& row_v = new_row();
        for (std::size_t c = 0; c < n; ++c) row_v[L.v_a(c)] += kv(r, c);
        Vector& row_w = new_row();
        for (std::size_t c = 0; c < n; ++c) row_w[L.w_a(c)] += kw(r, c);
    }

    // One term of a matrix identity, evaluated at entry (r, c):
    //   X o M     -> sum_k X[r][k] M[k][c]
    //   M o X     -> sum_k M[r][k] X[k][c]
    //   alpha M   -> M[r][c] alpha
    struct Term {
        enum Kind { UnknownThenMap, MapThenUnknown, AlphaTimesMap } kind;
        Block unknown;
        const Matrix* map;
        Rational coef;
    };
    auto identity = [&](std::initializer_list<Term> terms) {
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                Vector& row = new_row();
                for (const Term& t : terms) {
                    if (t.coef == 0) continue;
                    const Matrix& m = *t.map;
                    switch (t.kind) {
                    case Term::UnknownThenMap:
                        for (std::size_t k = 0; k < n; ++k) row[L.block(t.unknown, r, k)] += t.coef * m(k, c);
                        break;
                    case Term::MapThenUnknown:
                        for (std::size_t k = 0; k < n; ++k) row[L.block(t.unknown, k, c)] += t.coef * m(r, k);
                        break;
                    case Term::AlphaTimesMap:
                        row[L.alpha()] += t.coef * m(r, c);
                        break;
                    }
                }
            }
    };
    using K = Term;
    // phi~ o f_L = gm g_L o psi
    identity({{K::UnknownThenMap, PhiTilde, &fl, 1}, {K::MapThenUnknown, Psi, &gl, -gm}});
    // psi~ o f_L = dl alpha f_L + gm f_L o phi
    identity({{K::UnknownThenMap, PsiTilde, &fl, 1}, {K::AlphaTimesMap, Phi, &fl, -dl}, {K::MapThenUnknown, Phi, &fl, -gm}});
    // phi~ o f_R = dl g_R o psi
    identity({{K::UnknownThenMap, PhiTilde, &fr, 1}, {K::MapThenUnknown, Psi, &gr, -dl}});
    // psi~ o f_R = gm alpha f_R + dl f_R o phi
    identity({{K::UnknownThenMap, PsiTilde, &fr, 1}, {K::AlphaTimesMap, Phi, &fr, -gm}, {K::MapThenUnknown, Phi, &fr, -dl}});
    // phi o g_L = dl alpha g_L + gm g_L o psi~
    identity({{K::UnknownThenMap, Phi, &gl, 1}, {K::AlphaTimesMap, Phi, &gl, -dl}, {K::MapThenUnknown, PsiTilde, &gl, -gm}});
    // psi o g_L = gm f_L o phi~
    identity({{K::UnknownThenMap, Psi, &gl, 1}, {K::MapThenUnknown, PhiTilde, &fl, -gm}});
    // phi o g_R = gm alpha g_R + dl g_R o psi~
    identity({{K::UnknownThenMap, Phi, &gr, 1}, {K::AlphaTimesMap, Phi, &gr, -gm}, {K::MapThenUnknown, PsiTilde, &gr, -dl}});
    // psi o g_R = dl f_R o phi~
    identity({{K::UnknownThenMap, Psi, &gr, 1}, {K::MapThenUnknown, PhiTilde, &fr, -dl}});

    std::vector<Lemma2Solution> basis;
    for (const auto& x : nullspace(Matrix::from_rows(rows, L.unknowns()))) {
        Lemma2Solution s;
        s.alpha = x[L.alpha()];
        s.beta = L.has_beta ? x[L.beta()] : Rational(0);
        s.v_a.assign(n, Rational(0));
        s.w_a.assign(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            s.v_a[i] = x[L.v_a(i)];
            s.w_a[i] = x[L.w_a(i)];
        }
        Matrix* blocks[] = {&s.phi, &s.psi, &s.phi_tilde, &s.psi_tilde};
        for (std::size_t b = 0; b < 4; ++b) {
            *blocks[b] = Matrix(n, n);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) (*blocks[b])(r, c) = x[L.block(b, r, c)];
        }
        basis.push_back(std::move(s));
    }
    return basis;
}

/// Full-algebra matrix of the block description (basis order e, a, V, V').
inline Matrix assemble(const Lemma2Solution& sol, const FamilySpec& spec, const DerivationProblem& prob) {
    spec.validate();
    const std::size_t n = spec.v_dim;
    if (sol.v_a.size() != n || sol.w_a.size() != n)
        throw std::invalid_argument("assemble: v_a / w_a length differs from v_dim");
    for (const Matrix* m : {&sol.phi, &sol.psi, &sol.phi_tilde, &sol.psi_tilde})
        if (m->rows() != n || m->cols() != n) throw std::invalid_argument("assemble: block size differs from v_dim");
    const FamilyBasis b{n};
    Matrix d(b.dim(), b.dim());
    if (prob.delta + prob.gamma == 1) d(b.e, b.e) = sol.beta;
    d(b.a, b.a) = sol.alpha;
    for (std::size_t i = 0; i < n; ++i) {
        d(b.v(i), b.a) = sol.v_a[i];
        d(b.v_prime(i), b.a) = sol.w_a[i];
    }
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            d(b.v(r), b.v(c)) = sol.phi(r, c);
            d(b.v_prime(r), b.v(c)) = sol.psi(r, c);
            d(b.v(r), b.v_prime(c)) = sol.phi_tilde(r, c);
            d(b.v_prime(r), b.v_prime(c)) = sol.psi_tilde(r, c);
        }
    return d;
}

}  // namespace nsgrad
