#pragma once

#include <nsgrad/magma/certificate.hpp>
#include <nsgrad/magma/closure.hpp>
#include <nsgrad/magma/partial_magma.hpp>
#include <nsgrad/magma/rewriting.hpp>
#include <nsgrad/magma/search.hpp>

#include <stdexcept>
#include <string>

namespace nsgrad::magma {

struct EmbeddabilityLimits {
    std::size_t max_word_len = 6;
    std::size_t max_rules = 200;
    std::size_t max_extra_elements = 2;
    std::size_t search_node_budget = 5'000'000;
};

/// Defect check, then congruence closure, then completion, then finite
/// table search. The first backend that reaches a decision wins.
inline EmbeddabilityVerdict embeddability(const PartialMagma& m, const EmbeddabilityLimits& limits = {}) {
    EmbeddabilityVerdict v;

    if (const auto defects = associativity_defect(m); !defects.empty()) {
        const auto& [a, b, c] = defects.front();
        v.status = Verdict::NotEmbeddable;
        v.certificate = defect_trace(m, a, b, c);
        v.stage = "associativity_defect";
        return v;
    }
    if (m.size() > 0 && m.is_total()) {
        // Total and defect-free means associative: the table is its own witness.
        CayleyTable t;
        t.elements = m.elements();
        for (const auto& [a, b, r] : m.entries()) t.table.push_back(r);
        v.status = Verdict::Embeddable;
        v.certificate = std::move(t);
        v.stage = "total_table";
        return v;
    }

    BoundsReached bounds{limits.max_word_len, limits.max_rules, limits.max_extra_elements, {}};

    if (limits.max_word_len >= 2) {
        ClosureResult closure = bounded_congruence_closure(m, limits.max_word_len);
        if (closure.identification) {
            v.status = Verdict::NotEmbeddable;
            v.certificate = std::move(*closure.identification);
            v.stage = "congruence_closure";
            return v;
        }
        bounds.notes.push_back("congruence_closure: no identification among words of length <= " +
                               std::to_string(closure.word_len));
    }

    if (limits.max_rules > 0 && limits.max_word_len > 0) {
        CompletionResult completion = complete_rewriting(m, limits.max_rules, limits.max_word_len);
        if (completion.status == CompletionResult::Status::Confluent) {
            if (completion.collapsed) {
                try {
                    v.certificate = expand_to_trace(completion.system, completion.collapsed->first,
                                                    completion.collapsed->second);
                    v.status = Verdict::NotEmbeddable;
                    v.stage = "rewriting";
                    return v;
                } catch (const std::length_error&) {
                    bounds.notes.push_back("rewriting: identification found but trace expansion exceeded its limit");
                }
            } else {
                v.status = Verdict::Embeddable;
                v.certificate = std::move(completion.system);
                v.stage = "rewriting";
                return v;
            }
        } else {
            bounds.notes.push_back("rewriting: " + completion.limit_note);
        }
    }

    SearchResult search = finite_completion_search(m, limits.max_extra_elements, limits.search_node_budget);
    if (search.table) {
        v.status = Verdict::Embeddable;
        v.certificate = std::move(*search.table);
        v.stage = "finite_search";
        return v;
    }
    bounds.notes.push_back(search.budget_exhausted
                               ? "finite_search: node budget " + std::to_string(limits.search_node_budget) + " exhausted"
                               : "finite_search: no associative extension with <= " +
                                     std::to_string(limits.max_extra_elements) + " extra elements");
    v.status = Verdict::Unknown;
    v.certificate = std::move(bounds);
    v.stage = "none";
    return v;
}

}  // namespace nsgrad::magma
