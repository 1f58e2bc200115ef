#pragma once

/**
 * @file certificate.hpp
 * @brief Verdicts on semigroup embeddability and the evidence behind them.
 *
 * A partial magma (G, *) embeds into a semigroup iff distinct elements stay
 * distinct in the semigroup presented by generators G and relations
 * gh = g*h for each defined pair. Evidence comes in three shapes:
 *
 *   - CayleyTable:     a finite associative total table extending *.
 *   - RewritingSystem: a confluent shortlex system for the presentation in
 *                      which all generators have distinct normal forms.
 *   - Trace:           a chain of words from one generator to another where
 *                      each step applies a single table entry in context.
 *
 * Unknown verdicts carry the bounds that were reached instead.
 */

#include <nsgrad/magma/partial_magma.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace nsgrad::magma {

enum class Verdict { Embeddable, NotEmbeddable, Unknown };

inline const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::Embeddable: return "Embeddable";
    case Verdict::NotEmbeddable: return "NotEmbeddable";
    case Verdict::Unknown: return "Unknown";
    }
    return "Unknown";
}

/// Total table on elements() of the magma followed by fresh elements.
/// The embedding sends element i of the magma to element i of the table.
struct CayleyTable {
    std::vector<std::string> elements;
    std::vector<std::size_t> table;  // row-major, size elements^2
    std::size_t size() const { return elements.size(); }
    std::size_t at(std::size_t a, std::size_t b) const { return table[a * elements.size() + b]; }
    friend bool operator==(const CayleyTable&, const CayleyTable&) = default;
};

/// One elementary step of a trace: at `position`, the adjacent letters
/// (left, right) are contracted to `result`, or the reverse when !contract.
struct TraceStep {
    std::size_t position = 0;
    std::size_t left = 0, right = 0, result = 0;
    bool contract = true;
    friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

/// words.front() = [first], words.back() = [second]; steps[i] turns
/// words[i] into words[i+1].
struct Trace {
    std::size_t first = 0, second = 0;
    std::vector<Word> words;
    std::vector<TraceStep> steps;
    friend bool operator==(const Trace&, const Trace&) = default;
};

/// Application of history rule `rule` at `position`, lhs -> rhs when forward.
struct ProofStep {
    std::size_t rule = 0;
    std::size_t position = 0;
    bool forward = true;
    friend bool operator==(const ProofStep&, const ProofStep&) = default;
};

/// A rule is either a table entry (axiom) or derived: `proof` rewrites lhs
/// into rhs using only earlier rules of the history.
struct RewriteRule {
    Word lhs, rhs;
    std::optional<std::size_t> axiom_left, axiom_right;
    std::vector<ProofStep> proof;
    bool is_axiom() const { return axiom_left.has_value(); }
    friend bool operator==(const RewriteRule&, const RewriteRule&) = default;
};

struct RewritingSystem {
    std::vector<RewriteRule> history;
    std::vector<std::size_t> active;  // indices into history
    friend bool operator==(const RewritingSystem&, const RewritingSystem&) = default;
};

struct BoundsReached {
    std::size_t max_word_len = 0;
    std::size_t max_rules = 0;
    std::size_t max_extra_elements = 0;
    std::vector<std::string> notes;  // which stage stopped at which bound
    friend bool operator==(const BoundsReached&, const BoundsReached&) = default;
};

using Certificate = std::variant<CayleyTable, RewritingSystem, Trace, BoundsReached>;

struct EmbeddabilityVerdict {
    Verdict status = Verdict::Unknown;
    Certificate certificate = BoundsReached{};
    std::string stage;  // backend that decided
    friend bool operator==(const EmbeddabilityVerdict&, const EmbeddabilityVerdict&) = default;
};

// ---------------------------------------------------------------------------
// Word utilities shared by the backends and the replay checker.

/// Shortlex: shorter first, then lexicographic in element-index order.
inline bool shortlex_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

inline bool occurs_at(const Word& w, const Word& pattern, std::size_t pos) {
    if (pattern.empty() || pos + pattern.size() > w.size()) return false;
    for (std::size_t i = 0; i < pattern.size(); ++i)
        if (w[pos + i] != pattern[i]) return false;
    return true;
}

inline Word replace_at(const Word& w, std::size_t pos, std::size_t len, const Word& with) {
    Word out(w.begin(), w.begin() + static_cast<long>(pos));
    out.insert(out.end(), with.begin(), with.end());
    out.insert(out.end(), w.begin() + static_cast<long>(pos + len), w.end());
    return out;
}

inline std::string format_word(const PartialMagma& m, const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += '.';
        out += m.label(w[i]);
    }
    return out;
}

}  // namespace nsgrad::magma
