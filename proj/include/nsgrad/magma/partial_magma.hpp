#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nsgrad::magma {

/// Words over the element indices of a partial magma.
using Word = std::vector<std::size_t>;

/// Finite set with a partially defined binary operation. Elements are
/// addressed by index; the element order is the order of the label list.
class PartialMagma {
public:
    PartialMagma() = default;
    explicit PartialMagma(std::vector<std::string> elements)
        : labels_(std::move(elements)), table_(labels_.size() * labels_.size()) {
        std::set<std::string> seen(labels_.begin(), labels_.end());
        if (seen.size() != labels_.size()) throw std::invalid_argument("magma element labels must be distinct");
    }

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& elements() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }

    std::optional<std::size_t> index_of(const std::string& label) const {
        for (std::size_t i = 0; i < labels_.size(); ++i)
            if (labels_[i] == label) return i;
        return std::nullopt;
    }

    std::optional<std::size_t> at(std::size_t a, std::size_t b) const { return table_.at(a * size() + b); }
    bool defined(std::size_t a, std::size_t b) const { return at(a, b).has_value(); }

    void define(std::size_t a, std::size_t b, std::size_t result) {
        if (a >= size() || b >= size() || result >= size()) throw std::out_of_range("magma index out of range");
        table_[a * size() + b] = result;
    }
    void define(const std::string& a, const std::string& b, const std::string& result) {
        define(require(a), require(b), require(result));
    }

    std::size_t defined_count() const {
        std::size_t n = 0;
        for (const auto& v : table_) n += v.has_value() ? 1 : 0;
        return n;
    }
    bool is_total() const { return defined_count() == table_.size(); }

    /// Defined entries as (left, right, result) in row-major order.
    std::vector<std::array<std::size_t, 3>> entries() const {
        std::vector<std::array<std::size_t, 3>> out;
        for (std::size_t a = 0; a < size(); ++a)
            for (std::size_t b = 0; b < size(); ++b)
                if (auto r = at(a, b)) out.push_back({a, b, *r});
        return out;
    }

    friend bool operator==(const PartialMagma&, const PartialMagma&) = default;

private:
    std::size_t require(const std::string& label) const {
        auto i = index_of(label);
        if (!i) throw std::invalid_argument("unknown magma element '" + label + "'");
        return *i;
    }

    std::vector<std::string> labels_;
    std::vector<std::optional<std::size_t>> table_;
};

/// Triples (a, b, c) where (a*b)*c and a*(b*c) are both defined and differ.
inline std::vector<std::array<std::size_t, 3>> associativity_defect(const PartialMagma& m) {
    std::vector<std::array<std::size_t, 3>> out;
    const std::size_t n = m.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            auto ab = m.at(a, b);
            if (!ab) continue;
            for (std::size_t c = 0; c < n; ++c) {
                auto bc = m.at(b, c);
                if (!bc) continue;
                auto left = m.at(*ab, c);
                auto right = m.at(a, *bc);
                if (left && right && *left != *right) out.push_back({a, b, c});
            }
        }
    return out;
}

/// First pair (a, b), a < b, with a*b and b*a both defined and different.
inline std::optional<std::pair<std::size_t, std::size_t>> commutative_compatible(const PartialMagma& m) {
    for (std::size_t a = 0; a < m.size(); ++a)
        for (std::size_t b = a + 1; b < m.size(); ++b) {
            auto ab = m.at(a, b);
            auto ba = m.at(b, a);
            if (ab && ba && *ab != *ba) return std::make_pair(a, b);
        }
    return std::nullopt;
}

}  // namespace nsgrad::magma
