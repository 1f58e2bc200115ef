#pragma once

/**
 * @file replay.hpp
 * @brief Independent verification of embeddability certificates.
 *
 * Only the partial magma's table and the certificate are consulted; no
 * backend state is reused. Rewriting systems are re-normalized here with a
 * local rewriter rather than the completion code.
 */

#include <nsgrad/magma/certificate.hpp>
#include <nsgrad/magma/partial_magma.hpp>

#include <algorithm>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace nsgrad::magma {

struct ReplayResult {
    bool valid = true;
    std::string reason;
    explicit operator bool() const { return valid; }
};

namespace replay_detail {

inline ReplayResult fail(std::string why) { return {false, std::move(why)}; }

inline ReplayResult check_table(const PartialMagma& m, const CayleyTable& t) {
    const std::size_t n = t.size();
    if (n < m.size()) return fail("table has fewer elements than the magma");
    for (std::size_t i = 0; i < m.size(); ++i)
        if (t.elements[i] != m.label(i)) return fail("table element " + std::to_string(i) + " does not match magma label");
    if (std::set<std::string>(t.elements.begin(), t.elements.end()).size() != n) return fail("duplicate table labels");
    if (t.table.size() != n * n) return fail("table is not total");
    for (auto v : t.table)
        if (v >= n) return fail("table entry out of range");
    for (const auto& [a, b, r] : m.entries())
        if (t.at(a, b) != r) return fail("table does not preserve " + m.label(a) + "*" + m.label(b));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                if (t.at(t.at(x, y), z) != t.at(x, t.at(y, z)))
                    return fail("table is not associative at (" + t.elements[x] + "," + t.elements[y] + "," +
                                t.elements[z] + ")");
    return {};
}

inline ReplayResult check_trace(const PartialMagma& m, const Trace& tr) {
    const std::size_t n = m.size();
    if (tr.first >= n || tr.second >= n) return fail("trace endpoints out of range");
    if (tr.first == tr.second) return fail("trace endpoints are the same generator");
    if (tr.words.empty() || tr.words.front() != Word{tr.first} || tr.words.back() != Word{tr.second})
        return fail("trace does not run between the named generators");
    if (tr.steps.size() + 1 != tr.words.size()) return fail("trace step count does not match word count");
    for (std::size_t i = 0; i < tr.steps.size(); ++i) {
        const TraceStep& s = tr.steps[i];
        const Word& w = tr.words[i];
        for (auto c : w)
            if (c >= n) return fail("trace word letter out of range");
        if (s.left >= n || s.right >= n || s.result >= n) return fail("trace step cites an out-of-range element");
        const auto entry = m.at(s.left, s.right);
        if (!entry || *entry != s.result)
            return fail("step " + std::to_string(i) + " cites a nonexistent table entry");
        Word expected;
        if (s.contract) {
            if (s.position + 1 >= w.size() || w[s.position] != s.left || w[s.position + 1] != s.right)
                return fail("step " + std::to_string(i) + " does not match its word");
            expected = replace_at(w, s.position, 2, Word{s.result});
        } else {
            if (s.position >= w.size() || w[s.position] != s.result)
                return fail("step " + std::to_string(i) + " does not match its word");
            expected = replace_at(w, s.position, 1, Word{s.left, s.right});
        }
        if (tr.words[i + 1] != expected) return fail("step " + std::to_string(i) + " produces a different word");
    }
    return {};
}

class Rewriter {
public:
    explicit Rewriter(std::vector<std::pair<Word, Word>> rules) : rules_(std::move(rules)) {}
    Word normalize(Word w) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t pos = 0; pos < w.size() && !changed; ++pos)
                for (const auto& [l, r] : rules_)
                    if (occurs_at(w, l, pos)) {
                        w = replace_at(w, pos, l.size(), r);
                        changed = true;
                        break;
                    }
        }
        return w;
    }
    const std::vector<std::pair<Word, Word>>& rules() const { return rules_; }

private:
    std::vector<std::pair<Word, Word>> rules_;
};

inline ReplayResult check_system(const PartialMagma& m, const RewritingSystem& sys, bool expect_distinct) {
    const std::size_t n = m.size();
    const auto& h = sys.history;
    // Derivability: each rule follows from the table using earlier rules only.
    for (std::size_t k = 0; k < h.size(); ++k) {
        const RewriteRule& r = h[k];
        for (const Word* w : {&r.lhs, &r.rhs})
            for (auto c : *w)
                if (c >= n) return fail("rule letter out of range");
        if (r.is_axiom()) {
            if (!r.axiom_right) return fail("axiom rule " + std::to_string(k) + " names only one table argument");
            const auto entry = (r.axiom_left < n && r.axiom_right < n) ? m.at(*r.axiom_left, *r.axiom_right)
                                                                        : std::nullopt;
            if (!entry || r.lhs != Word{*r.axiom_left, *r.axiom_right} || r.rhs != Word{*entry} || !r.proof.empty())
                return fail("axiom rule " + std::to_string(k) + " does not match a table entry");
            continue;
        }
        Word w = r.lhs;
        for (const auto& s : r.proof) {
            if (s.rule >= k) return fail("rule " + std::to_string(k) + " proof cites a later rule");
            const Word& from = s.forward ? h[s.rule].lhs : h[s.rule].rhs;
            const Word& to = s.forward ? h[s.rule].rhs : h[s.rule].lhs;
            if (!occurs_at(w, from, s.position)) return fail("rule " + std::to_string(k) + " proof step does not apply");
            w = replace_at(w, s.position, from.size(), to);
        }
        if (w != r.rhs) return fail("rule " + std::to_string(k) + " proof does not reach its right-hand side");
    }

    std::vector<std::pair<Word, Word>> active;
    std::set<std::size_t> seen;
    for (auto idx : sys.active) {
        if (idx >= h.size() || !seen.insert(idx).second) return fail("bad active rule index");
        const RewriteRule& r = h[idx];
        if (r.lhs.empty() || !shortlex_less(r.rhs, r.lhs)) return fail("active rule is not shortlex-decreasing");
        active.emplace_back(r.lhs, r.rhs);
    }
    const Rewriter rw(active);

    // Local confluence: every overlap and inclusion of left-hand sides joins.
    for (const auto& [li, ri] : active)
        for (const auto& [lj, rj] : active) {
            for (std::size_t k = 1; k < std::min(li.size(), lj.size()); ++k) {
                if (!std::equal(li.end() - static_cast<long>(k), li.end(), lj.begin())) continue;
                Word a = ri;
                a.insert(a.end(), lj.begin() + static_cast<long>(k), lj.end());
                Word b(li.begin(), li.end() - static_cast<long>(k));
                b.insert(b.end(), rj.begin(), rj.end());
                if (rw.normalize(a) != rw.normalize(b)) return fail("critical pair does not join");
            }
            if (li != lj)
                for (std::size_t p = 0; p + lj.size() <= li.size(); ++p)
                    if (occurs_at(li, lj, p) && rw.normalize(ri) != rw.normalize(replace_at(li, p, lj.size(), rj)))
                        return fail("inclusion critical pair does not join");
        }
    // The system's congruence contains every defining relation.
    for (const auto& [a, b, r] : m.entries())
        if (rw.normalize(Word{a, b}) != rw.normalize(Word{r}))
            return fail("relation " + m.label(a) + "." + m.label(b) + " = " + m.label(r) + " does not join");
    if (expect_distinct) {
        std::set<Word> forms;
        for (std::size_t g = 0; g < n; ++g) forms.insert(rw.normalize(Word{g}));
        if (forms.size() != n) return fail("two generators share a normal form");
    }
    return {};
}

}  // namespace replay_detail

inline ReplayResult replay_certificate(const PartialMagma& m, const EmbeddabilityVerdict& v) {
    using namespace replay_detail;
    switch (v.status) {
    case Verdict::Embeddable:
        if (const auto* t = std::get_if<CayleyTable>(&v.certificate)) return check_table(m, *t);
        if (const auto* s = std::get_if<RewritingSystem>(&v.certificate)) return check_system(m, *s, true);
        return fail("Embeddable verdict needs a Cayley table or rewriting system");
    case Verdict::NotEmbeddable:
        if (const auto* tr = std::get_if<Trace>(&v.certificate)) return check_trace(m, *tr);
        return fail("NotEmbeddable verdict needs a trace");
    case Verdict::Unknown:
        if (std::holds_alternative<BoundsReached>(v.certificate)) return {};
        return fail("Unknown verdict needs a bounds record");
    }
    return fail("unrecognized verdict");
}

}  // namespace nsgrad::magma
