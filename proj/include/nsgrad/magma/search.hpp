#pragma once

#include <nsgrad/magma/certificate.hpp>
#include <nsgrad/magma/partial_magma.hpp>

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace nsgrad::magma {

struct SearchResult {
    std::optional<CayleyTable> table;
    bool budget_exhausted = false;
    std::size_t nodes = 0;
    std::size_t extra_elements_tried = 0;
};

/// Labels for fresh elements: "_s1", "_s2", ...; underscores are prepended
/// until the label is unused.
inline std::vector<std::string> fresh_labels(const PartialMagma& m, std::size_t count) {
    std::set<std::string> used(m.elements().begin(), m.elements().end());
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= count; ++i) {
        std::string label = "_s" + std::to_string(i);
        while (used.count(label)) label = "_" + label;
        used.insert(label);
        out.push_back(label);
    }
    return out;
}

namespace detail {

class TableSearch {
public:
    TableSearch(const PartialMagma& m, std::size_t extra, std::size_t budget, std::size_t& nodes)
        : n_(m.size()), size_(m.size() + extra), budget_(budget), nodes_(nodes), t_(size_ * size_, unset) {
        for (const auto& [a, b, r] : m.entries()) t_[a * size_ + b] = static_cast<int>(r);
        for (std::size_t c = 0; c < t_.size(); ++c)
            if (t_[c] == unset) open_.push_back(c);
        std::stable_sort(open_.begin(), open_.end(), [this](std::size_t x, std::size_t y) {
            return std::max(x / size_, x % size_) < std::max(y / size_, y % size_);
        });
    }

    /// true: found (table in solution()); false: none at this size. Sets budget_hit.
    bool run() {
        if (!consistent_all()) return false;
        return dfs(0, static_cast<long>(n_) - 1);
    }
    bool budget_hit() const { return budget_hit_; }
    std::vector<std::size_t> solution() const { return {t_.begin(), t_.end()}; }

private:
    static constexpr int unset = -1;

    int at(std::size_t a, std::size_t b) const { return t_[a * size_ + b]; }

    bool triple_ok(std::size_t x, std::size_t y, std::size_t z) const {
        const int xy = at(x, y), yz = at(y, z);
        if (xy == unset || yz == unset) return true;
        const int l = at(static_cast<std::size_t>(xy), z), r = at(x, static_cast<std::size_t>(yz));
        return l == unset || r == unset || l == r;
    }

    bool consistent_all() const {
        for (std::size_t x = 0; x < size_; ++x)
            for (std::size_t y = 0; y < size_; ++y)
                for (std::size_t z = 0; z < size_; ++z)
                    if (!triple_ok(x, y, z)) return false;
        return true;
    }

    /// Triples in which cell (a, b) takes part, in any of its four roles.
    bool consistent_after(std::size_t a, std::size_t b) const {
        for (std::size_t z = 0; z < size_; ++z)
            if (!triple_ok(a, b, z) || !triple_ok(z, a, b)) return false;
        for (std::size_t x = 0; x < size_; ++x)
            for (std::size_t y = 0; y < size_; ++y) {
                if (at(x, y) == static_cast<int>(a) && !triple_ok(x, y, b)) return false;
                if (at(x, y) == static_cast<int>(b) && !triple_ok(a, x, y)) return false;
            }
        return true;
    }

    // Fresh elements are interchangeable, so a value may exceed the largest
    // element mentioned so far (as a cell argument or value) by at most one.
    // This is sound because cells are visited in max-argument order.
    bool dfs(std::size_t k, long mentioned) {
        if (k == open_.size()) return true;
        const std::size_t cell = open_[k];
        const std::size_t a = cell / size_, b = cell % size_;
        const long here = std::max(mentioned, static_cast<long>(std::max(a, b)));
        const std::size_t limit = std::min<std::size_t>(size_, static_cast<std::size_t>(here + 2));
        for (std::size_t v = 0; v < limit; ++v) {
            if (++nodes_ > budget_) {
                budget_hit_ = true;
                return false;
            }
            t_[cell] = static_cast<int>(v);
            if (consistent_after(a, b)) {
                if (dfs(k + 1, std::max(here, static_cast<long>(v)))) return true;
                if (budget_hit_) return false;
            }
        }
        t_[cell] = unset;
        return false;
    }

    std::size_t n_, size_, budget_;
    std::size_t& nodes_;
    std::vector<int> t_;
    std::vector<std::size_t> open_;
    bool budget_hit_ = false;
};

}  // namespace detail

/// Backtracking over total tables on the elements plus up to
/// max_extra_elements fresh ones, smallest size first. Open cells are filled
/// in order of their larger argument, then row-major; values are tried in
/// element order. The first associative extension found is returned.
inline SearchResult finite_completion_search(const PartialMagma& m, std::size_t max_extra_elements,
                                             std::size_t node_budget = 5'000'000) {
    SearchResult res;
    for (std::size_t extra = 0; extra <= max_extra_elements; ++extra) {
        if (m.size() + extra == 0) continue;
        res.extra_elements_tried = extra;
        detail::TableSearch search(m, extra, node_budget, res.nodes);
        if (search.run()) {
            CayleyTable t;
            t.elements = m.elements();
            for (auto& l : fresh_labels(m, extra)) t.elements.push_back(l);
            t.table = search.solution();
            res.table = std::move(t);
            return res;
        }
        if (search.budget_hit()) {
            res.budget_exhausted = true;
            return res;
        }
    }
    return res;
}

}  // namespace nsgrad::magma
