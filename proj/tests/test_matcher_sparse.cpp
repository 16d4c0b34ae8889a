#include <gtest/gtest.h>

#include <map>
#include <random>

#include "dynwild/matcher_sparse.hpp"
#include "oracles.hpp"

using namespace dynwild;
using oracle::sym;

namespace {

std::vector<bool> maskOf(const SymbolString& pattern) {
    std::vector<bool> mask;
    for (Symbol c : pattern) mask.push_back(isWildcard(c));
    return mask;
}

// Every A_s and the multiset against per-window recomputation.
void expectCoherent(const SparseMatcher& sm) {
    const HashContext& h = sm.context();
    const auto mask = maskOf(sm.pattern());
    std::map<HashValue, std::size_t> expected;
    for (Position s = 1; s <= sm.windowCount(); ++s) {
        const SymbolString window(sm.text().begin() + (s - 1), sm.text().begin() + (s - 1) + sm.patternSize());
        const HashValue value = oracle::polyHash(window, h.base(), h.modulus(), mask);
        ASSERT_EQ(sm.windowHash(s), value) << "window " << s;
        ++expected[value];
    }
    for (const auto& [value, count] : expected) ASSERT_EQ(sm.multiplicity(value), count);
    ASSERT_EQ(sm.patternHash(), oracle::polyHash(sm.pattern(), h.base(), h.modulus(), mask));
}

}  // namespace

TEST(SparseMatcher, MaskedWindowsAndTextUpdate) {
    SparseMatcher sm(sym("cabyzacde"), sym("?b??a"));
    EXPECT_EQ(sm.wildcardSet(), (std::vector<Position>{1, 3, 4}));
    EXPECT_EQ(sm.intervalCount(), 2u);
    EXPECT_EQ(sm.windowHash(2), sm.patternHash());
    EXPECT_TRUE(sm.query().matched);
    expectCoherent(sm);

    sm.substituteText(6, 'x');
    EXPECT_EQ(sm.lastRecomputed(), (std::vector<Position>{2, 5}));
    EXPECT_FALSE(sm.query().matched);
    expectCoherent(sm);
}

TEST(SparseMatcher, AllWildcardPattern) {
    SparseMatcher sm(sym("abcdef"), sym("???"));
    for (Position s = 1; s <= sm.windowCount(); ++s) EXPECT_EQ(sm.windowHash(s), 0u);
    EXPECT_TRUE(sm.query().matched);
    sm.substituteText(2, 'z');
    EXPECT_TRUE(sm.lastRecomputed().empty());
}

TEST(SparseMatcher, PatternUpdates) {
    SparseMatcher sm(sym("cabyzacde"), sym("?b??a"));
    const HashValue before = sm.patternHash();
    sm.substitutePattern(2, 'b');
    EXPECT_EQ(sm.patternHash(), before);
    sm.substitutePattern(5, 'c');
    expectCoherent(sm);
    EXPECT_FALSE(sm.query().matched);
    EXPECT_THROW(sm.substitutePattern(1, 'a'), std::invalid_argument);
    EXPECT_THROW(sm.substitutePattern(2, '?'), std::invalid_argument);
}

TEST(SparseMatcher, BoundaryUpdateTouchesNoWindow) {
    // The only solid column is 3, so T_1 and T_2 belong to no window's residue.
    SparseMatcher sm(sym("abcdefg"), sym("??c"));
    sm.substituteText(2, 'z');
    EXPECT_TRUE(sm.lastRecomputed().empty());
    sm.substituteText(3, 'z');
    EXPECT_EQ(sm.lastRecomputed(), (std::vector<Position>{1}));
}

TEST(SparseMatcher, BuildErrors) {
    EXPECT_THROW(SparseMatcher(sym("abc"), sym("abcd")), std::invalid_argument);
    EXPECT_THROW(SparseMatcher(sym("a?c"), sym("a")), std::invalid_argument);
    EXPECT_THROW(SparseMatcher(sym("abc"), SymbolString{}), std::invalid_argument);
    SparseMatcher sm(sym("abc"), sym("abc"));
    EXPECT_EQ(sm.windowCount(), 1u);
    EXPECT_THROW(sm.substituteText(4, 'a'), std::out_of_range);
    EXPECT_THROW(sm.substituteText(1, '?'), std::invalid_argument);
}

TEST(SparseMatcher, RandomStreamsAgainstRebuildAndBruteForce) {
    std::mt19937_64 rng(404);
    for (int inst = 0; inst < 30; ++inst) {
        const std::size_t n = 5 + rng() % 120;
        const std::size_t m = 1 + rng() % std::min<std::size_t>(n, 12);
        const std::size_t sigma = 1 + rng() % 3;
        SymbolString pat = oracle::randomString(rng, m, sigma);
        for (auto& c : pat) {
            if (rng() % 3 == 0) c = kWildcard;
        }
        SparseMatcher sm(oracle::randomString(rng, n, sigma), pat, inst);
        for (int step = 0; step < 200; ++step) {
            const Symbol c = static_cast<Symbol>('a' + rng() % sigma);
            if (rng() % 2 || sm.solidPositions().empty()) {
                sm.substituteText(1 + rng() % n, c);
            } else {
                sm.substitutePattern(sm.solidPositions()[rng() % sm.solidPositions().size()], c);
            }
            ASSERT_EQ(sm.query().matched, !oracle::occurrences(sm.text(), sm.pattern()).empty());
            if (step % 20 == 0) {
                expectCoherent(sm);
                SparseMatcher rebuilt(sm.text(), sm.pattern(), inst);
                for (Position s = 1; s <= sm.windowCount(); ++s) ASSERT_EQ(sm.windowHash(s), rebuilt.windowHash(s));
            }
        }
    }
}
