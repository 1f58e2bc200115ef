#pragma once

/**
 * @file rewriting.hpp
 * @brief Shortlex Knuth-Bendix completion of the presentation
 *        < G | gh = g*h for every defined pair >.
 *
 * Every rule ever created is kept in an append-only history together with
 * a proof built from earlier rules, so any equality the system derives can
 * be expanded into elementary table steps (see expand_to_trace).
 */

#include <nsgrad/magma/certificate.hpp>
#include <nsgrad/magma/partial_magma.hpp>

#include <algorithm>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nsgrad::magma {

struct CompletionResult {
    enum class Status { Confluent, LimitExceeded };
    Status status = Status::LimitExceeded;
    RewritingSystem system;
    /// First pair of generators (element order) sharing a normal form.
    std::optional<std::pair<std::size_t, std::size_t>> collapsed;
    std::string limit_note;
};

// ---------------------------------------------------------------------------
// Rewriting primitives over a history + active-set pair.

inline Word apply_step(const std::vector<RewriteRule>& history, const Word& w, const ProofStep& s) {
    const RewriteRule& r = history.at(s.rule);
    const Word& from = s.forward ? r.lhs : r.rhs;
    const Word& to = s.forward ? r.rhs : r.lhs;
    if (!occurs_at(w, from, s.position)) throw std::invalid_argument("proof step does not match word");
    return replace_at(w, s.position, from.size(), to);
}

inline std::vector<ProofStep> reversed(std::vector<ProofStep> proof) {
    std::reverse(proof.begin(), proof.end());
    for (auto& s : proof) s.forward = !s.forward;
    return proof;
}

/// Leftmost redex; ties at a position go to the first active rule.
inline std::optional<ProofStep> find_redex(const RewritingSystem& sys, const Word& w) {
    for (std::size_t pos = 0; pos < w.size(); ++pos)
        for (auto idx : sys.active)
            if (occurs_at(w, sys.history[idx].lhs, pos)) return ProofStep{idx, pos, true};
    return std::nullopt;
}

/// Normal form under the active rules; appends the forward steps taken to *proof.
inline Word normal_form(const RewritingSystem& sys, Word w, std::vector<ProofStep>* proof = nullptr) {
    while (auto s = find_redex(sys, w)) {
        w = apply_step(sys.history, w, *s);
        if (proof) proof->push_back(*s);
    }
    return w;
}

struct CriticalPair {
    Word overlap;
    Word left, right;
    ProofStep left_step, right_step;  // overlap -> left, overlap -> right
};

/// Overlaps lhs_i = xy, lhs_j = yz (y nonempty, proper) and inclusions of lhs_j in lhs_i.
inline std::vector<CriticalPair> critical_pairs(const RewritingSystem& sys, std::size_t i, std::size_t j) {
    const auto& h = sys.history;
    const Word& li = h[i].lhs;
    const Word& lj = h[j].lhs;
    std::vector<CriticalPair> out;
    for (std::size_t k = 1; k < std::min(li.size(), lj.size()); ++k) {
        if (!std::equal(li.end() - static_cast<long>(k), li.end(), lj.begin())) continue;
        Word w = li;
        w.insert(w.end(), lj.begin() + static_cast<long>(k), lj.end());
        const ProofStep si{i, 0, true};
        const ProofStep sj{j, li.size() - k, true};
        out.push_back({w, apply_step(h, w, si), apply_step(h, w, sj), si, sj});
    }
    if (i != j && lj.size() <= li.size())
        for (std::size_t p = 0; p + lj.size() <= li.size(); ++p)
            if (occurs_at(li, lj, p)) {
                const ProofStep si{i, 0, true};
                const ProofStep sj{j, p, true};
                out.push_back({li, apply_step(h, li, si), apply_step(h, li, sj), si, sj});
            }
    return out;
}

// ---------------------------------------------------------------------------

inline CompletionResult complete_rewriting(const PartialMagma& m, std::size_t max_rules, std::size_t max_word_len) {
    if (max_rules == 0 || max_word_len == 0) throw std::invalid_argument("complete_rewriting: bounds must be positive");
    CompletionResult res;
    RewritingSystem& sys = res.system;
    const std::size_t history_cap = 64 * max_rules + 64;

    for (const auto& [g, h, r] : m.entries()) {
        RewriteRule rule;
        rule.lhs = {g, h};
        rule.rhs = {r};
        rule.axiom_left = g;
        rule.axiom_right = h;
        sys.active.push_back(sys.history.size());
        sys.history.push_back(std::move(rule));
    }
    if (sys.active.size() > max_rules) {
        res.limit_note = "rule count " + std::to_string(sys.active.size()) + " exceeds max_rules " + std::to_string(max_rules);
        return res;
    }

    struct Equation {
        Word u, v;
        std::vector<ProofStep> proof;  // u -> v
    };
    std::deque<Equation> pending;

    auto limit = [&](std::string note) {
        res.status = CompletionResult::Status::LimitExceeded;
        res.limit_note = std::move(note);
        return false;
    };

    // Orients and adds one equation, then interreduces. Returns false on a limit.
    auto add_equation = [&](Equation eq) -> bool {
        std::vector<ProofStep> pu, pv;
        const Word a = normal_form(sys, eq.u, &pu);
        const Word b = normal_form(sys, eq.v, &pv);
        if (a == b) return true;
        RewriteRule rule;
        if (shortlex_less(a, b)) {  // b -> v -> u -> a
            rule.lhs = b;
            rule.rhs = a;
            rule.proof = reversed(pv);
            auto back = reversed(eq.proof);
            rule.proof.insert(rule.proof.end(), back.begin(), back.end());
            rule.proof.insert(rule.proof.end(), pu.begin(), pu.end());
        } else {  // a -> u -> v -> b
            rule.lhs = a;
            rule.rhs = b;
            rule.proof = reversed(pu);
            rule.proof.insert(rule.proof.end(), eq.proof.begin(), eq.proof.end());
            rule.proof.insert(rule.proof.end(), pv.begin(), pv.end());
        }
        if (rule.lhs.size() > max_word_len)
            return limit("rule length " + std::to_string(rule.lhs.size()) + " exceeds max_word_len " +
                         std::to_string(max_word_len));
        const std::size_t idx = sys.history.size();
        const Word new_lhs = rule.lhs;
        sys.history.push_back(std::move(rule));

        // Interreduce: rules whose lhs contains the new lhs go back to pending;
        // right-hand sides are renormalized.
        std::vector<std::size_t> kept;
        for (auto j : sys.active) {
            const Word& lj = sys.history[j].lhs;
            bool reducible = false;
            for (std::size_t p = 0; p + new_lhs.size() <= lj.size() && !reducible; ++p)
                reducible = occurs_at(lj, new_lhs, p);
            if (reducible)
                pending.push_back({lj, sys.history[j].rhs, {ProofStep{j, 0, true}}});
            else
                kept.push_back(j);
        }
        kept.push_back(idx);
        sys.active = std::move(kept);
        for (auto& j : sys.active) {
            std::vector<ProofStep> proof{ProofStep{j, 0, true}};
            const Word rhs = normal_form(sys, sys.history[j].rhs, &proof);
            if (rhs == sys.history[j].rhs) continue;
            RewriteRule updated;
            updated.lhs = sys.history[j].lhs;
            updated.rhs = rhs;
            updated.proof = std::move(proof);
            j = sys.history.size();
            sys.history.push_back(std::move(updated));
        }
        if (sys.active.size() > max_rules)
            return limit("rule count " + std::to_string(sys.active.size()) + " exceeds max_rules " +
                         std::to_string(max_rules));
        if (sys.history.size() > history_cap)
            return limit("rule history exceeds " + std::to_string(history_cap) + " entries");
        return true;
    };

    for (;;) {
        while (!pending.empty()) {
            Equation eq = std::move(pending.front());
            pending.pop_front();
            if (!add_equation(std::move(eq))) return res;
        }
        const std::vector<std::size_t> snapshot = sys.active;
        for (auto i : snapshot)
            for (auto j : snapshot)
                for (auto& cp : critical_pairs(sys, i, j)) {
                    if (normal_form(sys, cp.left) == normal_form(sys, cp.right)) continue;
                    // left <- overlap -> right
                    std::vector<ProofStep> proof{ProofStep{cp.left_step.rule, cp.left_step.position, false},
                                                 cp.right_step};
                    pending.push_back({cp.left, cp.right, std::move(proof)});
                }
        if (pending.empty()) break;
    }

    res.status = CompletionResult::Status::Confluent;
    std::vector<Word> nf;
    for (std::size_t g = 0; g < m.size(); ++g) nf.push_back(normal_form(sys, Word{g}));
    for (std::size_t a = 0; a < m.size() && !res.collapsed; ++a)
        for (std::size_t b = a + 1; b < m.size() && !res.collapsed; ++b)
            if (nf[a] == nf[b]) res.collapsed = {a, b};
    return res;
}

namespace detail {

inline void expand_application(const std::vector<RewriteRule>& history, std::size_t rule, bool forward,
                               std::size_t offset, Trace& trace, std::size_t max_steps) {
    const RewriteRule& r = history.at(rule);
    if (r.is_axiom()) {
        Word cur = trace.words.back();
        TraceStep step{offset, *r.axiom_left, *r.axiom_right, r.rhs.at(0), forward};
        Word next = forward ? replace_at(cur, offset, 2, r.rhs) : replace_at(cur, offset, 1, r.lhs);
        trace.steps.push_back(step);
        trace.words.push_back(std::move(next));
        if (trace.steps.size() > max_steps) throw std::length_error("trace expansion exceeds step limit");
        return;
    }
    if (forward) {
        for (const auto& s : r.proof) expand_application(history, s.rule, s.forward, offset + s.position, trace, max_steps);
    } else {
        for (auto it = r.proof.rbegin(); it != r.proof.rend(); ++it)
            expand_application(history, it->rule, !it->forward, offset + it->position, trace, max_steps);
    }
}

}  // namespace detail

/// Elementary trace from generator `a` to generator `b`, which must share a
/// normal form in `sys`. Every derived rule is unfolded down to table entries.
inline Trace expand_to_trace(const RewritingSystem& sys, std::size_t a, std::size_t b,
                             std::size_t max_steps = 1'000'000) {
    std::vector<ProofStep> pa, pb;
    const Word na = normal_form(sys, Word{a}, &pa);
    const Word nb = normal_form(sys, Word{b}, &pb);
    if (na != nb) throw std::invalid_argument("expand_to_trace: generators have different normal forms");
    Trace t;
    t.first = a;
    t.second = b;
    t.words.push_back(Word{a});
    for (const auto& s : pa) detail::expand_application(sys.history, s.rule, true, s.position, t, max_steps);
    for (const auto& s : reversed(pb)) detail::expand_application(sys.history, s.rule, s.forward, s.position, t, max_steps);
    return t;
}

}  // namespace nsgrad::magma
