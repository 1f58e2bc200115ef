#pragma once

#include <nsgrad/magma/certificate.hpp>
#include <nsgrad/magma/partial_magma.hpp>

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace nsgrad::magma {

struct ClosureResult {
    std::size_t word_len = 0;  // bound actually used
    /// Trace identifying the first pair of distinct generators (in element order) found equal.
    std::optional<Trace> identification;
    /// Equality classes with at least two words, each sorted shortlex, ordered by first word.
    std::vector<std::vector<Word>> classes;
};

namespace detail {

/// Bijection between words of length 1..L over n letters and 0..count-1,
/// shortlex-monotone.
class WordIndex {
public:
    WordIndex(std::size_t letters, std::size_t max_len) : n_(letters), max_len_(max_len) {
        offset_.assign(max_len + 2, 0);
        std::size_t power = 1;
        for (std::size_t len = 1; len <= max_len; ++len) {
            power *= n_;
            offset_[len + 1] = offset_[len] + power;
        }
    }
    static std::size_t count(std::size_t letters, std::size_t max_len) {
        std::size_t total = 0, power = 1;
        for (std::size_t len = 1; len <= max_len; ++len) {
            power *= letters;
            total += power;
        }
        return total;
    }
    std::size_t size() const { return offset_[max_len_ + 1]; }
    std::size_t id(const Word& w) const {
        std::size_t x = 0;
        for (auto c : w) x = x * n_ + c;
        return offset_[w.size()] + x;
    }
    Word word(std::size_t id) const {
        std::size_t len = 1;
        while (id >= offset_[len + 1]) ++len;
        std::size_t x = id - offset_[len];
        Word w(len);
        for (std::size_t i = len; i-- > 0;) {
            w[i] = x % n_;
            x /= n_;
        }
        return w;
    }

private:
    std::size_t n_, max_len_;
    std::vector<std::size_t> offset_;
};

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        parent_[b] = a;  // smallest id is the root
    }

private:
    std::vector<std::size_t> parent_;
};

struct Neighbor {
    Word word;
    TraceStep step;
};

/// All words one elementary step away from w, within length max_len, sorted shortlex.
inline std::vector<Neighbor> neighbors(const PartialMagma& m, const Word& w, std::size_t max_len,
                                       const std::vector<std::vector<std::pair<std::size_t, std::size_t>>>& preimage) {
    std::vector<Neighbor> out;
    for (std::size_t p = 0; p + 1 < w.size(); ++p)
        if (auto r = m.at(w[p], w[p + 1]))
            out.push_back({replace_at(w, p, 2, Word{*r}), TraceStep{p, w[p], w[p + 1], *r, true}});
    if (w.size() < max_len)
        for (std::size_t p = 0; p < w.size(); ++p)
            for (const auto& [x, y] : preimage[w[p]])
                out.push_back({replace_at(w, p, 1, Word{x, y}), TraceStep{p, x, y, w[p], false}});
    std::stable_sort(out.begin(), out.end(),
                     [](const Neighbor& a, const Neighbor& b) { return shortlex_less(a.word, b.word); });
    return out;
}

}  // namespace detail

/// Congruence generated by the defined products, restricted to words of
/// length <= max_word_len. Each identification it reports is a genuine
/// consequence of the presentation. The bound is lowered if the word count
/// would exceed max_words.
inline ClosureResult bounded_congruence_closure(const PartialMagma& m, std::size_t max_word_len,
                                                std::size_t max_words = 4'000'000) {
    if (max_word_len < 2) throw std::invalid_argument("bounded_congruence_closure: max_word_len must be >= 2");
    ClosureResult result;
    const std::size_t n = m.size();
    if (n == 0) return result;
    std::size_t len = max_word_len;
    while (len > 2 && detail::WordIndex::count(n, len) > max_words) --len;
    result.word_len = len;

    const detail::WordIndex index(n, len);
    detail::UnionFind uf(index.size());
    for (std::size_t id = n; id < index.size(); ++id) {
        const Word w = index.word(id);
        for (std::size_t p = 0; p + 1 < w.size(); ++p)
            if (auto r = m.at(w[p], w[p + 1])) uf.unite(id, index.id(replace_at(w, p, 2, Word{*r})));
    }

    std::vector<std::vector<std::size_t>> members(index.size());
    for (std::size_t id = 0; id < index.size(); ++id) members[uf.find(id)].push_back(id);
    for (const auto& cls : members)
        if (cls.size() >= 2) {
            std::vector<Word> words;
            for (auto id : cls) words.push_back(index.word(id));
            result.classes.push_back(std::move(words));
        }

    std::optional<std::pair<std::size_t, std::size_t>> pair;
    for (std::size_t a = 0; a < n && !pair; ++a)
        for (std::size_t b = a + 1; b < n && !pair; ++b)
            if (uf.find(a) == uf.find(b)) pair = {a, b};
    if (!pair) return result;

    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> preimage(n);
    for (const auto& [x, y, r] : m.entries()) preimage[r].push_back({x, y});

    // Shortest trace by breadth-first search over the step graph.
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> parent(index.size(), none);
    std::vector<TraceStep> via(index.size());
    std::deque<std::size_t> queue{pair->first};
    parent[pair->first] = pair->first;
    while (!queue.empty() && parent[pair->second] == none) {
        const std::size_t cur = queue.front();
        queue.pop_front();
        for (auto& nb : detail::neighbors(m, index.word(cur), len, preimage)) {
            const std::size_t nid = index.id(nb.word);
            if (parent[nid] != none) continue;
            parent[nid] = cur;
            via[nid] = nb.step;
            queue.push_back(nid);
        }
    }
    if (parent[pair->second] == none) throw std::logic_error("closure: union-find and step graph disagree");

    Trace trace;
    trace.first = pair->first;
    trace.second = pair->second;
    std::vector<std::size_t> path;
    for (std::size_t id = pair->second; id != pair->first; id = parent[id]) path.push_back(id);
    path.push_back(pair->first);
    std::reverse(path.begin(), path.end());
    for (std::size_t i = 0; i < path.size(); ++i) {
        trace.words.push_back(index.word(path[i]));
        if (i > 0) trace.steps.push_back(via[path[i]]);
    }
    result.identification = std::move(trace);
    return result;
}

/// Trace for an associativity defect (a, b, c): (a*b)*c ~ (a*b).c ~ a.b.c ~ a.(b*c) ~ a*(b*c).
inline Trace defect_trace(const PartialMagma& m, std::size_t a, std::size_t b, std::size_t c) {
    const std::size_t ab = *m.at(a, b);
    const std::size_t bc = *m.at(b, c);
    const std::size_t left = *m.at(ab, c);
    const std::size_t right = *m.at(a, bc);
    Trace t;
    t.first = left;
    t.second = right;
    t.words = {{left}, {ab, c}, {a, b, c}, {a, bc}, {right}};
    t.steps = {TraceStep{0, ab, c, left, false}, TraceStep{0, a, b, ab, false}, TraceStep{1, b, c, bc, true},
               TraceStep{0, a, bc, right, true}};
    return t;
}

}  // namespace nsgrad::magma
