#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dynwild/matcher_general.hpp"
#include "dynwild/substring_oracle.hpp"
#include "oracles.hpp"

using namespace dynwild;
using oracle::sym;

namespace {

GeneralConfig withTau(std::size_t tau, OracleKind kind = OracleKind::WindowMultiset) {
    GeneralConfig cfg;
    cfg.tau = tau;
    cfg.oracle = kind;
    return cfg;
}

bool brute(const GeneralMatcher& g) {
    return !oracle::occurrences(g.textIndex().text(), g.pattern().symbols()).empty();
}

}  // namespace

TEST(IsMatch, SlicesOfShortText) {
    auto ctx = HashContext::choose(8, 1);
    TextIndex text(sym("aabbccba"), 3, ctx);
    PatternStore p(sym("a?b?c"), ctx);
    EXPECT_TRUE(isMatch(p, 1, 5, text, 1, 5));
    EXPECT_TRUE(isMatch(p, 1, 5, text, 2, 6));
    EXPECT_FALSE(isMatch(p, 1, 5, text, 3, 7));

    PatternStore q(sym("b?b?c"), ctx);
    for (Position s = 1; s <= 4; ++s) EXPECT_FALSE(isMatch(q, 1, 5, text, s, s + 4)) << s;

    PatternStore solid(sym("bbcc"), ctx);
    EXPECT_TRUE(isMatch(solid, 1, 4, text, 3, 6));
}

TEST(IsMatch, TextWildcardsAndAdjacentCuts) {
    auto ctx = HashContext::choose(8, 1);
    TextIndex text(sym("x??yzab"), 1, ctx);
    PatternStore p(sym("q??yz"), ctx);
    EXPECT_FALSE(isMatch(p, 1, 5, text, 1, 5));
    PatternStore p2(sym("x?qy?"), ctx);
    EXPECT_TRUE(isMatch(p2, 1, 5, text, 1, 5));
}

TEST(GeneralMatcher, QueryUpdateSequence) {
    GeneralMatcher g(sym("aabbccba"), sym("a?b?c"), withTau(3));
    EXPECT_EQ(g.chooseRareSymbol(), Symbol('c'));
    const MatchVerdict first = g.query();
    EXPECT_TRUE(first.matched);
    EXPECT_EQ(first.witness, Position{1});
    EXPECT_EQ(g.counters().case1Queries, 1u);

    g.substitutePattern(1, 'b');
    EXPECT_FALSE(g.query().matched);

    g.substituteText(1, 'b');
    EXPECT_TRUE(g.query().matched);
}

TEST(GeneralMatcher, CaseTwoFindsMatch) {
    // With tau = 3 the symbol c is rare and Case 1 applies; tau = 2 makes
    // every symbol frequent so the dispatcher must walk completions.
    GeneralMatcher g(sym("babbccba"), sym("b?b?c"), withTau(2));
    EXPECT_FALSE(g.chooseRareSymbol().has_value());
    const MatchVerdict v = g.query();
    EXPECT_TRUE(v.matched);
    EXPECT_EQ(g.counters().case2Queries, 1u);
    EXPECT_GE(g.counters().completions, 1u);
    GeneralMatcher h(sym("babbbbba"), sym("b?b?b"), withTau(3));
    EXPECT_FALSE(h.chooseRareSymbol().has_value());
    EXPECT_TRUE(h.query().matched);
    EXPECT_EQ(h.counters().case2Queries, 1u);
}

TEST(GeneralMatcher, CaseOneEmptyCandidates) {
    GeneralMatcher g(sym("aaaaaaa"), sym("a?z"), withTau(3));
    EXPECT_FALSE(g.query().matched);
    EXPECT_EQ(g.counters().case1Candidates, 0u);
}

TEST(GeneralMatcher, NoWildcardsSingleContainmentCheck) {
    GeneralMatcher g(sym("abababab"), sym("bab"), withTau(1));
    EXPECT_TRUE(g.query().matched);
    EXPECT_EQ(g.counters().completions, 1u);
    GeneralMatcher h(sym("abababab"), sym("bb"), withTau(1));
    EXPECT_FALSE(h.query().matched);
}

TEST(GeneralMatcher, PatternLongerThanText) {
    GeneralMatcher g(sym("abc"), sym("abcd"));
    EXPECT_FALSE(g.query().matched);
}

TEST(GeneralMatcher, WildcardBudgetEnforced) {
    GeneralConfig cfg;
    cfg.wildcardBudget = 2;
    EXPECT_THROW(GeneralMatcher(sym("a?b?"), sym("?a"), cfg), std::invalid_argument);
    GeneralMatcher g(sym("a?bb"), sym("?a"), cfg);
    EXPECT_THROW(g.substituteText(3, '?'), std::invalid_argument);
    EXPECT_THROW(g.substitutePattern(2, '?'), std::invalid_argument);
    g.substituteText(2, 'c');
    g.substitutePattern(2, '?');
    EXPECT_EQ(g.wildcardCount(), 2u);
    EXPECT_THROW(GeneralMatcher(sym("abc"), SymbolString{}), std::invalid_argument);
}

TEST(DefaultTau, FormulaProperties) {
    // At n = 1e4 the log factor exceeds n, so the value falls toward n as k grows.
    double previous = tauFormula(10'000, 1);
    for (std::size_t k = 2; k <= 6; ++k) {
        const double t = tauFormula(10'000, k);
        EXPECT_LT(t, previous);
        EXPECT_LT(std::abs(t - 10'000), std::abs(previous - 10'000));
        EXPECT_GT(t, 10'000);
        previous = t;
    }
    EXPECT_GE(defaultTau(2, 1), 1u);
    EXPECT_LE(defaultTau(2, 1), 2u);
    const double t = tauFormula(1024, 2);
    const double target = std::pow(1024.0, 2) * std::pow(10.0, 7);
    EXPECT_NEAR(std::pow(t, 3) / target, 1.0, 1e-9);
    EXPECT_EQ(defaultTau(1024, 2), 1024u);  // clamped: the formula exceeds n at this size
}

TEST(SubstringOracle, BothKindsAgreeWithScan) {
    std::mt19937_64 rng(3);
    auto ctx = HashContext::choose(60, 2);
    for (OracleKind kind : {OracleKind::NaiveScan, OracleKind::WindowMultiset}) {
        SymbolString text = oracle::randomString(rng, 60, 2);
        SymbolString pat = oracle::randomString(rng, 4, 2);
        auto o = makeOracle(kind, pat, text, ctx);
        for (int step = 0; step < 400; ++step) {
            if (rng() % 2) {
                const Position i = 1 + rng() % text.size();
                text[i - 1] = static_cast<Symbol>('a' + rng() % 2);
                o->setText(i, text[i - 1]);
            } else {
                const Position i = 1 + rng() % pat.size();
                pat[i - 1] = static_cast<Symbol>('a' + rng() % 2);
                o->setPattern(i, pat[i - 1]);
            }
            ASSERT_EQ(o->contains(), !oracle::occurrences(text, pat).empty());
        }
    }
    EXPECT_EQ(parseOracleKind("naive"), OracleKind::NaiveScan);
    EXPECT_THROW(parseOracleKind("lcs"), std::invalid_argument);
}

// Random streams through the dispatcher; small tau values force both cases.
TEST(GeneralMatcher, RandomStreamsMatchBruteForce) {
    std::mt19937_64 rng(2024);
    for (int inst = 0; inst < 60; ++inst) {
        const std::size_t n = 5 + rng() % 100;
        const std::size_t m = 1 + rng() % std::min<std::size_t>(12, n);
        const std::size_t sigma = 1 + rng() % 4;
        const std::size_t k = rng() % 4;
        GeneralConfig cfg;
        cfg.wildcardBudget = k;
        cfg.tau = 1 + rng() % (n / 2 + 1);
        cfg.oracle = inst % 2 ? OracleKind::NaiveScan : OracleKind::WindowMultiset;
        cfg.seed = inst;
        GeneralMatcher g(oracle::randomString(rng, n, sigma), oracle::randomString(rng, m, sigma), cfg);
        for (int step = 0; step < 150; ++step) {
            const bool onText = rng() % 2;
            const Position i = 1 + rng() % (onText ? n : m);
            Symbol c = static_cast<Symbol>('a' + rng() % sigma);
            if (rng() % 5 == 0 && g.wildcardCount() < k) c = kWildcard;
            onText ? g.substituteText(i, c) : g.substitutePattern(i, c);
            const MatchVerdict v = g.query();
            ASSERT_EQ(v.matched, brute(g)) << "instance " << inst << " step " << step;
            if (v.witness) {
                ASSERT_TRUE(oracle::windowMatches(g.textIndex().text(), g.pattern().symbols(), *v.witness - 1));
            }
        }
    }
}

// Case 1 candidates cover every true occurrence.
TEST(GeneralMatcher, CaseOneCandidatesCoverOccurrences) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 20 + rng() % 60;
        SymbolString text = oracle::randomString(rng, n, 3);
        SymbolString pat = oracle::randomString(rng, 1 + rng() % 6, 3);
        pat[rng() % pat.size()] = 'z';
        for (std::size_t w = 0; w < 3; ++w) text[rng() % n] = rng() % 2 ? 'z' : '?';
        GeneralConfig cfg;
        cfg.wildcardBudget = 64;
        cfg.tau = 4;
        GeneralMatcher g(text, pat, cfg);
        ASSERT_TRUE(g.chooseRareSymbol().has_value());
        const auto occ = oracle::occurrences(text, pat);
        ASSERT_EQ(g.query().matched, !occ.empty());
    }
}
