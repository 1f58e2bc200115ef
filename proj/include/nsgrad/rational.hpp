#pragma once

/**
 * @file rational.hpp
 * @brief Exact rationals over arbitrary-precision integers.
 *
 * Every scalar in the library is a Rational. Values are always kept in
 * lowest terms with a positive denominator; zero is 0/1. The textual form
 * used by every file format is "p/q", or "p" when the denominator is 1.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nsgrad {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>, boost::multiprecision::et_off>;
using Vector = std::vector<Rational>;

inline std::string to_string(const Rational& r) {
    const Integer& den = boost::multiprecision::denominator(r);
    std::string out = boost::multiprecision::numerator(r).str();
    if (den != 1) {
        out += '/';
        out += den.str();
    }
    return out;
}

/// Parses "p", "-p", "+p" or "p/q". Decimal points and exponents are rejected.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&](const char* why) {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "': " + why);
    };
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    auto digits = [&](std::size_t from) {
        std::size_t end = from;
        while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
        return end;
    };
    const std::size_t num_end = digits(pos);
    if (num_end == pos) fail("expected digits");
    Integer num(std::string(text.substr(pos, num_end - pos)));
    Integer den = 1;
    pos = num_end;
    if (pos < text.size()) {
        if (text[pos] != '/') fail("unexpected character");
        const std::size_t den_end = digits(pos + 1);
        if (den_end == pos + 1) fail("expected denominator digits");
        if (den_end != text.size()) fail("trailing characters");
        den = Integer(std::string(text.substr(pos + 1, den_end - pos - 1)));
        if (den == 0) fail("zero denominator");
    }
    if (negative) num = -num;
    return Rational(num, den);
}

inline bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

/// Order used wherever weights are listed: by absolute value, negatives first on ties
/// (0, -1, 1, -2, 2, ...).
struct WeightOrder {
    bool operator()(const Rational& a, const Rational& b) const {
        const Rational aa = boost::multiprecision::abs(a);
        const Rational ab = boost::multiprecision::abs(b);
        if (aa != ab) return aa < ab;
        return a < b;
    }
};

}  // namespace nsgrad
