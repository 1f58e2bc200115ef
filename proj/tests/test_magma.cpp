#include <nsgrad/magma/closure.hpp>
#include <nsgrad/magma/embeddability.hpp>
#include <nsgrad/magma/partial_magma.hpp>
#include <nsgrad/magma/replay.hpp>
#include <nsgrad/magma/rewriting.hpp>
#include <nsgrad/magma/search.hpp>

#include <gtest/gtest.h>

#include "support/oracles.hpp"

using namespace nsgrad::magma;

namespace {

PartialMagma worked_magma() {
    PartialMagma m({"0", "-1", "1"});
    m.define("0", "0", "0");
    m.define("0", "1", "-1");
    m.define("1", "0", "-1");
    m.define("0", "-1", "1");
    m.define("-1", "0", "1");
    return m;
}

PartialMagma cyclic(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    PartialMagma m(labels);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) m.define(a, b, (a + b) % n);
    return m;
}

PartialMagma square_only() {
    PartialMagma m({"x", "y"});
    m.define("x", "x", "y");
    return m;
}

PartialMagma idempotent() {
    PartialMagma m({"x"});
    m.define("x", "x", "x");
    return m;
}

PartialMagma random_magma(oracle::Rng& rng, std::size_t n, double density) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
    PartialMagma m(labels);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (rng.chance(density)) m.define(a, b, static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1)));
    return m;
}

}  // namespace

TEST(PartialMagma, Basics) {
    EXPECT_THROW(PartialMagma({"x", "x"}), std::invalid_argument);
    PartialMagma m = square_only();
    EXPECT_EQ(m.defined_count(), 1u);
    EXPECT_FALSE(m.is_total());
    EXPECT_EQ(*m.at(0, 0), 1u);
    EXPECT_FALSE(m.defined(0, 1));
    EXPECT_THROW(m.define("x", "z", "x"), std::invalid_argument);
    EXPECT_TRUE(cyclic(3).is_total());
}

TEST(AssociativityDefect, WorkedMagma) {
    const PartialMagma m = worked_magma();
    const auto d = associativity_defect(m);
    ASSERT_FALSE(d.empty());
    EXPECT_EQ(d.front(), (std::array<std::size_t, 3>{0, 0, 1}));  // (0, 0, -1)
}

TEST(AssociativityDefect, GroupsAndVacuousCases) {
    EXPECT_TRUE(associativity_defect(cyclic(3)).empty());
    EXPECT_TRUE(associativity_defect(square_only()).empty());
    EXPECT_TRUE(associativity_defect(PartialMagma({"x", "y"})).empty());
}

TEST(CommutativeCompatible, Cases) {
    EXPECT_FALSE(commutative_compatible(worked_magma()).has_value());
    PartialMagma m({"x", "y"});
    m.define("x", "y", "x");
    m.define("y", "x", "y");
    EXPECT_EQ(*commutative_compatible(m), std::make_pair(std::size_t{0}, std::size_t{1}));
    EXPECT_FALSE(commutative_compatible(PartialMagma({"x", "y"})).has_value());
}

TEST(Closure, WorkedMagmaIdentifiesOneAndMinusOne) {
    const PartialMagma m = worked_magma();
    const ClosureResult r = bounded_congruence_closure(m, 3);
    ASSERT_TRUE(r.identification.has_value());
    const Trace& t = *r.identification;
    EXPECT_EQ(m.label(t.first), "-1");
    EXPECT_EQ(m.label(t.second), "1");
    bool through = false;
    for (const auto& w : t.words) through = through || w == Word{0, 0, 1};
    EXPECT_TRUE(through);
    EXPECT_TRUE(replay_certificate(m, {Verdict::NotEmbeddable, t, "congruence_closure"}).valid);
}

TEST(Closure, NoIdentificationsForGroupsAndIdempotents) {
    for (std::size_t len = 2; len <= 5; ++len) {
        EXPECT_FALSE(bounded_congruence_closure(cyclic(3), len).identification.has_value());
        const ClosureResult r = bounded_congruence_closure(idempotent(), len);
        EXPECT_FALSE(r.identification.has_value());
        ASSERT_EQ(r.classes.size(), 1u);
        EXPECT_EQ(r.classes.front().size(), len);  // x, xx, xxx, ...
    }
    EXPECT_THROW(bounded_congruence_closure(idempotent(), 1), std::invalid_argument);
}

TEST(Closure, DefectImpliesIdentificationAtLengthThree) {
    oracle::Rng rng(41);
    for (int trial = 0; trial < 150; ++trial) {
        const PartialMagma m = random_magma(rng, 3, 0.5);
        if (associativity_defect(m).empty()) continue;
        const ClosureResult r = bounded_congruence_closure(m, 3);
        ASSERT_TRUE(r.identification.has_value());
        EXPECT_TRUE(replay_certificate(m, {Verdict::NotEmbeddable, *r.identification, "c"}).valid);
    }
}

TEST(DefectTrace, FiveWords) {
    const PartialMagma m = worked_magma();
    const Trace t = defect_trace(m, 0, 0, 1);
    ASSERT_EQ(t.words.size(), 5u);
    EXPECT_EQ(format_word(m, t.words[2]), "0.0.-1");
    EXPECT_TRUE(replay_certificate(m, {Verdict::NotEmbeddable, t, "d"}).valid);
}

TEST(Rewriting, IdempotentIsSingleRule) {
    const CompletionResult r = complete_rewriting(idempotent(), 10, 4);
    ASSERT_EQ(r.status, CompletionResult::Status::Confluent);
    ASSERT_EQ(r.system.active.size(), 1u);
    EXPECT_EQ(r.system.history[r.system.active[0]].lhs, (Word{0, 0}));
    EXPECT_EQ(r.system.history[r.system.active[0]].rhs, (Word{0}));
    EXPECT_FALSE(r.collapsed.has_value());
}

TEST(Rewriting, WorkedMagmaCollapses) {
    const PartialMagma m = worked_magma();
    const CompletionResult r = complete_rewriting(m, 100, 6);
    ASSERT_EQ(r.status, CompletionResult::Status::Confluent);
    ASSERT_TRUE(r.collapsed.has_value());
    const Trace t = expand_to_trace(r.system, r.collapsed->first, r.collapsed->second);
    EXPECT_TRUE(replay_certificate(m, {Verdict::NotEmbeddable, t, "rewriting"}).valid);
}

TEST(Rewriting, CyclicGroupStaysDistinct) {
    const PartialMagma m = cyclic(2);
    const CompletionResult r = complete_rewriting(m, 50, 6);
    ASSERT_EQ(r.status, CompletionResult::Status::Confluent);
    EXPECT_FALSE(r.collapsed.has_value());
    EXPECT_TRUE(replay_certificate(m, {Verdict::Embeddable, r.system, "rewriting"}).valid);
}

TEST(Rewriting, LimitsReportedNotGuessed) {
    PartialMagma m({"p", "q", "r", "s"});
    m.define("p", "q", "r");
    m.define("q", "r", "s");
    m.define("r", "s", "p");
    const CompletionResult r = complete_rewriting(m, 1, 6);
    EXPECT_EQ(r.status, CompletionResult::Status::LimitExceeded);
    EXPECT_FALSE(r.limit_note.empty());
}

TEST(Search, FirstTableForSquareOnlyMatchesBruteForce) {
    const PartialMagma m = square_only();
    const SearchResult s = finite_completion_search(m, 0);
    ASSERT_TRUE(s.table.has_value());
    // Brute force over the 8 completions of x*x = y, cells (x,y), (y,x), (y,y)
    // in the search's cell and value order.
    std::optional<std::vector<std::size_t>> expected;
    for (std::size_t xy = 0; xy < 2 && !expected; ++xy)
        for (std::size_t yx = 0; yx < 2 && !expected; ++yx)
            for (std::size_t yy = 0; yy < 2 && !expected; ++yy) {
                const std::vector<std::size_t> t{1, xy, yx, yy};
                bool assoc = true;
                for (std::size_t a = 0; a < 2; ++a)
                    for (std::size_t b = 0; b < 2; ++b)
                        for (std::size_t c = 0; c < 2; ++c)
                            assoc = assoc && t[t[a * 2 + b] * 2 + c] == t[a * 2 + t[b * 2 + c]];
                if (assoc) expected = t;
            }
    ASSERT_TRUE(expected.has_value());
    EXPECT_EQ(s.table->table, *expected);
    EXPECT_EQ(s.table->table, (std::vector<std::size_t>{1, 0, 0, 1}));  // x <-> 1, y <-> 0 in Z/2
    EXPECT_TRUE(replay_certificate(m, {Verdict::Embeddable, *s.table, "finite_search"}).valid);
}

TEST(Search, TotalTableIsItsOwnExtension) {
    const SearchResult s = finite_completion_search(cyclic(3), 2);
    ASSERT_TRUE(s.table.has_value());
    EXPECT_EQ(s.extra_elements_tried, 0u);
    EXPECT_EQ(s.table->size(), 3u);
}

TEST(Search, WorkedMagmaHasNoFiniteExtension) {
    const SearchResult s = finite_completion_search(worked_magma(), 2);
    EXPECT_FALSE(s.table.has_value());
    EXPECT_FALSE(s.budget_exhausted);
}

TEST(Search, FreshLabelsAvoidCollisions) {
    const PartialMagma m({"_s1", "a"});
    EXPECT_EQ(fresh_labels(m, 2), (std::vector<std::string>{"__s1", "_s2"}));
}

TEST(Search, AgreesWithSemigroupEnumerationOnThreeElements) {
    oracle::Rng rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        const PartialMagma m = random_magma(rng, 3, 0.35);
        const SearchResult s = finite_completion_search(m, 1);
        EXPECT_EQ(s.table.has_value(), oracle::embeds_in_small_semigroup(m, 4)) << trial;
        if (s.table) EXPECT_TRUE(replay_certificate(m, {Verdict::Embeddable, *s.table, "s"}).valid);
    }
}

TEST(Oracle, LabeledSemigroupCounts) {
    // Number of associative operations on a labeled set of size 1..4.
    EXPECT_EQ(oracle::all_semigroups(1).size(), 1u);
    EXPECT_EQ(oracle::all_semigroups(2).size(), 8u);
    EXPECT_EQ(oracle::all_semigroups(3).size(), 113u);
    EXPECT_EQ(oracle::all_semigroups(4).size(), 3492u);
}

TEST(Embeddability, ReferenceExamples) {
    const auto worked = embeddability(worked_magma());
    EXPECT_EQ(worked.status, Verdict::NotEmbeddable);
    EXPECT_EQ(worked.stage, "associativity_defect");
    const auto& t = std::get<Trace>(worked.certificate);
    EXPECT_EQ(t.words[2], (Word{0, 0, 1}));

    const auto mod3 = embeddability(cyclic(3));
    EXPECT_EQ(mod3.status, Verdict::Embeddable);
    EXPECT_TRUE(std::holds_alternative<CayleyTable>(mod3.certificate));

    const PartialMagma empty({"x", "y"});
    const auto e = embeddability(empty);
    EXPECT_EQ(e.status, Verdict::Embeddable);
    EXPECT_TRUE(replay_certificate(empty, e).valid);
}

TEST(Embeddability, TinyLimitsGiveUnknownWithBounds) {
    PartialMagma m({"p", "q", "r", "s"});
    m.define("p", "q", "r");
    m.define("q", "r", "s");
    m.define("r", "s", "p");
    const auto v = embeddability(m, {2, 1, 0, 1});
    EXPECT_EQ(v.status, Verdict::Unknown);
    const auto& b = std::get<BoundsReached>(v.certificate);
    EXPECT_EQ(b.max_word_len, 2u);
    EXPECT_EQ(b.notes.size(), 3u);
    EXPECT_TRUE(replay_certificate(m, v).valid);
}

TEST(Embeddability, SoundAcrossLimitSettings) {
    oracle::Rng rng(43);
    const std::vector<EmbeddabilityLimits> settings{{2, 4, 0, 1000}, {3, 20, 1, 20000}, {6, 200, 2, 200000}};
    for (int trial = 0; trial < 60; ++trial) {
        const PartialMagma m = random_magma(rng, 3, 0.4);
        bool yes = false, no = false;
        for (const auto& lim : settings) {
            const auto v = embeddability(m, lim);
            yes = yes || v.status == Verdict::Embeddable;
            no = no || v.status == Verdict::NotEmbeddable;
            EXPECT_TRUE(replay_certificate(m, v).valid) << replay_certificate(m, v).reason;
        }
        EXPECT_FALSE(yes && no) << trial;
    }
}

TEST(Replay, RejectsBrokenCertificates) {
    const PartialMagma m = cyclic(2);
    CayleyTable bad{{"0", "1"}, {0, 1, 1, 1}};  // 1 * 1 = 1 breaks the table entry
    EXPECT_FALSE(replay_certificate(m, {Verdict::Embeddable, bad, "x"}).valid);

    PartialMagma partial({"0", "1"});
    partial.define("0", "0", "0");
    CayleyTable nonassoc{{"0", "1"}, {0, 1, 0, 0}};  // (1*0)*1 = 0*1 = 1 but 1*(0*1) = 1*1 = 0
    const auto r = replay_certificate(partial, {Verdict::Embeddable, nonassoc, "x"});
    EXPECT_FALSE(r.valid);
    EXPECT_NE(r.reason.find("associative"), std::string::npos);

    const PartialMagma pm = worked_magma();
    Trace t = defect_trace(pm, 0, 0, 1);
    t.steps[0].right = 2;  // cites 0 * 1 = 1, which is not in the table
    EXPECT_FALSE(replay_certificate(pm, {Verdict::NotEmbeddable, t, "x"}).valid);

    EXPECT_FALSE(replay_certificate(pm, {Verdict::NotEmbeddable, BoundsReached{}, "x"}).valid);
    EXPECT_FALSE(replay_certificate(pm, {Verdict::Embeddable, defect_trace(pm, 0, 0, 1), "x"}).valid);
}

TEST(Replay, RejectsUnderivedRule) {
    const PartialMagma m = square_only();
    RewritingSystem sys;
    RewriteRule fake;
    fake.lhs = {1, 0};
    fake.rhs = {0};
    fake.proof = {};
    sys.history.push_back(fake);
    sys.active = {0};
    EXPECT_FALSE(replay_certificate(m, {Verdict::Embeddable, sys, "x"}).valid);
}
