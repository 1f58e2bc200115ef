#pragma once

/**
 * @file grading.hpp
 * @brief Root space decompositions and the gradings they induce.
 *
 * For a (delta, gamma)-derivation D, products of generalized eigenspaces
 * obey A_l A_m ⊆ A_{delta l + gamma m}. The weight set with the induced
 * partial operation is the grading set; find_nonassoc_witness looks for
 * a triple whose two bracketings are both defined and provably differ.
 */

#include <nsgrad/algebra.hpp>
#include <nsgrad/derivation.hpp>
#include <nsgrad/linalg.hpp>
#include <nsgrad/magma/partial_magma.hpp>
#include <nsgrad/subspace.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nsgrad {

using Decomposition = std::map<Rational, Subspace, WeightOrder>;

struct WeightPairOrder {
    bool operator()(const std::pair<Rational, Rational>& a, const std::pair<Rational, Rational>& b) const {
        WeightOrder less;
        if (a.first != b.first) return less(a.first, b.first);
        return less(a.second, b.second);
    }
};

/// The characteristic polynomial has an irreducible factor of degree > 1 over Q.
class NonRationalSpectrum : public std::runtime_error {
public:
    explicit NonRationalSpectrum(Polynomial residual)
        : std::runtime_error("non-rational spectrum: residual factor " + residual.to_string()),
          residual_(std::move(residual)) {}
    const Polynomial& residual() const { return residual_; }

private:
    Polynomial residual_;
};

/// Some nonzero component product does not lie inside a single component.
class NotAGrading : public std::runtime_error {
public:
    NotAGrading(Rational left, Rational right)
        : std::runtime_error("not a grading: product of components " + to_string(left) + " and " + to_string(right) +
                             " is not contained in a single component"),
          left_(std::move(left)), right_(std::move(right)) {}
    const Rational& left() const { return left_; }
    const Rational& right() const { return right_; }

private:
    Rational left_, right_;
};

inline Decomposition root_space_decomposition(const Algebra& alg, const Matrix& d) {
    if (d.rows() != alg.dim() || d.cols() != alg.dim())
        throw std::invalid_argument("root_space_decomposition: map size differs from algebra dimension");
    const RootSplit split = rational_roots(char_poly(d));
    if (!split.splits()) throw NonRationalSpectrum(split.residual);
    Decomposition out;
    for (const auto& [lambda, mult] : split.roots) {
        Subspace s = Subspace::span(alg.dim(), generalized_eigenspace(d, lambda));
        if (!s.is_zero()) out.emplace(lambda, std::move(s));
    }
    return out;
}

struct Grading {
    std::vector<Rational> weights;  // in WeightOrder
    Decomposition components;
    std::map<std::pair<Rational, Rational>, Rational, WeightPairOrder> products;

    std::optional<Rational> product(const Rational& l, const Rational& m) const {
        auto it = products.find({l, m});
        if (it == products.end()) return std::nullopt;
        return it->second;
    }
};

inline Grading grading_from_decomposition(const Algebra& alg, const Decomposition& decomp) {
    std::vector<Subspace> parts;
    std::size_t total = 0;
    for (const auto& [w, s] : decomp) {
        if (s.ambient_dim() != alg.dim()) throw std::invalid_argument("component ambient dimension mismatch");
        if (s.is_zero()) throw std::invalid_argument("zero component for weight " + to_string(w));
        parts.push_back(s);
        total += s.dim();
    }
    if (total != alg.dim() || !independent(parts, alg.dim()))
        throw std::invalid_argument("components must be independent and span the algebra");

    Grading g;
    g.components = decomp;
    for (const auto& [w, s] : decomp) g.weights.push_back(w);
    for (const auto& [l, ul] : decomp)
        for (const auto& [m, um] : decomp) {
            const Subspace prod = subspace_product(alg, ul, um);
            if (prod.is_zero()) continue;
            std::optional<Rational> target;
            for (const auto& [t, ut] : decomp)
                if (ut.contains(prod)) {
                    target = t;
                    break;
                }
            if (!target) throw NotAGrading(l, m);
            g.products.emplace(std::make_pair(l, m), *target);
        }
    return g;
}

struct WeightFormulaViolation {
    Rational left, right;
    std::string detail;
};

/// Checks every ordered pair of weights against the rule l*m = delta l + gamma m,
/// and that pairs whose formula value is not a weight multiply to zero.
inline std::vector<WeightFormulaViolation> check_weight_formula(const Algebra& alg, const Grading& g,
                                                                const DerivationProblem& prob) {
    std::vector<WeightFormulaViolation> out;
    for (const auto& l : g.weights)
        for (const auto& m : g.weights) {
            const Rational expected = prob.delta * l + prob.gamma * m;
            const auto got = g.product(l, m);
            const bool is_weight = g.components.count(expected) != 0;
            if (got && *got != expected)
                out.push_back({l, m, "defined product " + to_string(*got) + " differs from " + to_string(expected)});
            if (!is_weight &&
                !subspace_product(alg, g.components.at(l), g.components.at(m)).is_zero())
                out.push_back({l, m, "formula value " + to_string(expected) + " is not a weight but product is nonzero"});
        }
    return out;
}

struct NonassocWitness {
    Rational lambda, eta, mu, theta, xi;
    Rational left;   // (lambda*eta)*mu
    Rational right;  // lambda*(eta*mu)
};

/// Exhaustive search over (lambda, eta, mu) in WeightOrder-lexicographic order.
/// theta = lambda*eta and xi = eta*mu come from the table; the triple qualifies
/// when theta*mu and lambda*xi are defined and
/// (delta^2 - delta) lambda != (gamma^2 - gamma) mu. The two bracketings
/// are compared directly as well, which matters for tables not induced by a
/// derivation.
inline std::optional<NonassocWitness> find_nonassoc_witness(const Grading& g, const DerivationProblem& prob) {
    const Rational dd = prob.delta * prob.delta - prob.delta;
    const Rational gg = prob.gamma * prob.gamma - prob.gamma;
    for (const auto& l : g.weights)
        for (const auto& e : g.weights) {
            const auto theta = g.product(l, e);
            if (!theta) continue;
            for (const auto& m : g.weights) {
                const auto xi = g.product(e, m);
                if (!xi) continue;
                const auto left = g.product(*theta, m);
                const auto right = g.product(l, *xi);
                if (!left || !right) continue;
                if (dd * l == gg * m || *left == *right) continue;
                NonassocWitness w{l, e, m, *theta, *xi, *left, *right};
                return w;
            }
        }
    return std::nullopt;
}

enum class CorollaryCase { HeadingI, HeadingII, Neither };

inline const char* to_string(CorollaryCase c) {
    switch (c) {
    case CorollaryCase::HeadingI: return "heading (i)";
    case CorollaryCase::HeadingII: return "heading (ii)";
    case CorollaryCase::Neither: return "neither";
    }
    return "neither";
}

inline CorollaryCase corollary_check(const DerivationProblem& prob, const Rational& lambda, const Rational& mu) {
    const Rational& d = prob.delta;
    const Rational& g = prob.gamma;
    if (d == g && d != 0 && d != 1 && lambda != mu) return CorollaryCase::HeadingI;
    if (d != g && d + g != 1 && lambda == mu && lambda != 0) return CorollaryCase::HeadingII;
    return CorollaryCase::Neither;
}

/// The grading set as a partial magma; element labels are the weights as "p/q" strings.
inline magma::PartialMagma to_partial_magma(const Grading& g) {
    std::vector<std::string> labels;
    for (const auto& w : g.weights) labels.push_back(to_string(w));
    magma::PartialMagma m(labels);
    auto idx = [&](const Rational& w) {
        for (std::size_t i = 0; i < g.weights.size(); ++i)
            if (g.weights[i] == w) return i;
        throw std::logic_error("weight not in grading");
    };
    for (const auto& [pair, r] : g.products) m.define(idx(pair.first), idx(pair.second), idx(r));
    return m;
}

}  // namespace nsgrad
