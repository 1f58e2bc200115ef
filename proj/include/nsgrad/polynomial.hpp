#pragma once

#include <nsgrad/matrix.hpp>
#include <nsgrad/rational.hpp>

#include <string>
#include <utility>
#include <vector>

namespace nsgrad {

/// Univariate polynomial over the rationals, coefficients in ascending degree.
/// Trailing zeros are always stripped, so the zero polynomial has no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { normalize(); }

    static Polynomial constant(const Rational& c) { return Polynomial({c}); }
    /// t - r
    static Polynomial linear_factor(const Rational& r) { return Polynomial({-r, Rational(1)}); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    /// Degree of the zero polynomial is reported as -1.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
    const Rational& leading() const { return coeffs_.back(); }

    Rational operator()(const Rational& t) const {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    /// Horner evaluation at a square matrix.
    Matrix operator()(const Matrix& m) const {
        Matrix acc(m.rows(), m.cols());
        const Matrix id = Matrix::identity(m.rows());
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * m + *it * id;
        return acc;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(out));
    }

    /// Synthetic division by (t - r): returns quotient and remainder.
    std::pair<Polynomial, Rational> divide_linear(const Rational& r) const {
        if (coeffs_.empty()) return {Polynomial(), Rational(0)};
        std::vector<Rational> q(coeffs_.size() - 1);
        Rational carry = 0;
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            carry = carry * r + coeffs_[k];
            if (k > 0) q[k - 1] = carry;
        }
        return {Polynomial(std::move(q)), carry};
    }

    std::string to_string(const std::string& var = "t") const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            const Rational& c = coeffs_[k];
            if (c == 0) continue;
            Rational mag = c < 0 ? Rational(-c) : c;
            if (out.empty()) {
                if (c < 0) out += "-";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            if (k == 0 || mag != 1) out += nsgrad::to_string(mag);
            if (k > 0) {
                if (mag != 1) out += "*";
                out += var;
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

}  // namespace nsgrad
