#include <gtest/gtest.h>

#include <map>
#include <random>

#include "dynwild/text_index.hpp"
#include "oracles.hpp"

using namespace dynwild;
using oracle::sym;

namespace {

TextIndex makeIndex(const std::string& text, std::size_t tau) {
    return TextIndex(sym(text), tau, HashContext::choose(std::max<std::size_t>(text.size(), 1), 1));
}

std::vector<Position> positions(const OccurrenceSet& set) { return {set.begin(), set.end()}; }

// Full recomputation of T' from the threshold rule.
SymbolString expectedModified(const SymbolString& t, std::size_t tau) {
    std::map<Symbol, std::size_t> counts;
    for (Symbol c : t) ++counts[c];
    SymbolString out(t);
    for (Symbol& c : out) {
        if (!isWildcard(c) && counts[c] < tau) c = kPlaceholder;
    }
    return out;
}

}  // namespace

TEST(TextIndex, BuildSmallText) {
    TextIndex idx = makeIndex("aabbccba", 3);
    EXPECT_EQ(positions(idx.occurrences('a')), (std::vector<Position>{1, 2, 8}));
    EXPECT_EQ(positions(idx.occurrences('b')), (std::vector<Position>{3, 4, 7}));
    EXPECT_EQ(positions(idx.occurrences('c')), (std::vector<Position>{5, 6}));
    EXPECT_TRUE(idx.isFrequent('a'));
    EXPECT_TRUE(idx.isFrequent('b'));
    EXPECT_TRUE(idx.isRare('c'));
    EXPECT_EQ(toDisplay(idx.modifiedText()), "aabb##ba");
}

TEST(TextIndex, EmptyText) {
    TextIndex idx = makeIndex("", 4);
    EXPECT_EQ(idx.size(), 0u);
    EXPECT_TRUE(idx.frequentSet().empty());
}

TEST(TextIndex, SingleRareSymbol) {
    TextIndex idx = makeIndex("zzzz", 5);
    EXPECT_TRUE(idx.isRare('z'));
    EXPECT_EQ(toDisplay(idx.modifiedText()), "####");
}

TEST(TextIndex, SubstituteFlipsFrequency) {
    TextIndex idx = makeIndex("aabbccba", 3);
    idx.substitute(1, 'b');
    EXPECT_EQ(toDisplay(idx.text()), "babbccba");
    EXPECT_EQ(positions(idx.occurrences('b')), (std::vector<Position>{1, 3, 4, 7}));
    // a drops to 2 occurrences and turns rare.
    EXPECT_TRUE(idx.isRare('a'));
    EXPECT_EQ(toDisplay(idx.modifiedText()), "b#bb##b#");
}

TEST(TextIndex, SameSymbolSubstituteIsNoOp) {
    TextIndex idx = makeIndex("aabbccba", 3);
    EXPECT_TRUE(idx.substitute(2, 'a').empty());
    EXPECT_EQ(toDisplay(idx.modifiedText()), "aabb##ba");
}

TEST(TextIndex, ReclassificationAtThreshold) {
    TextIndex idx = makeIndex("aab", 2);
    idx.substitute(3, 'a');
    EXPECT_TRUE(idx.isFrequent('a'));
    EXPECT_EQ(idx.count('b'), 0u);
    EXPECT_EQ(toDisplay(idx.modifiedText()), "aaa");
}

TEST(TextIndex, ChangedPositionsReported) {
    TextIndex idx = makeIndex("aabbccba", 3);
    // c reaches three occurrences: both earlier c positions plus position 1 change in T'.
    EXPECT_EQ(idx.substitute(1, 'c'), (std::vector<Position>{1, 2, 5, 6, 8}));
    EXPECT_EQ(toDisplay(idx.modifiedText()), "c#bbccb#");
}

TEST(TextIndex, LowerBound) {
    TextIndex idx = makeIndex("aabbccba", 3);
    EXPECT_EQ(idx.lowerBound('b', 5), Position{7});
    EXPECT_FALSE(idx.lowerBound('b', 8).has_value());
    EXPECT_EQ(idx.lowerBound('b', 1), Position{3});
    EXPECT_EQ(idx.countInRange('b', 2, 7), 3u);
    EXPECT_EQ(idx.countInRange('c', 7, 8), 0u);
}

TEST(TextIndex, WildcardsAreVerbatimAndUnclassified) {
    TextIndex idx = makeIndex("a?a?", 1);
    EXPECT_FALSE(idx.isFrequent('?'));
    EXPECT_FALSE(idx.isRare('?'));
    EXPECT_EQ(toDisplay(idx.modifiedText()), "a?a?");
    EXPECT_EQ(idx.count('?'), 2u);
}

TEST(TextIndex, RejectsInvalidInput) {
    auto ctx = HashContext::choose(4, 1);
    EXPECT_THROW(TextIndex(sym("ab"), 0, ctx), std::invalid_argument);
    SymbolString bad{'a', kPlaceholder};
    EXPECT_THROW(TextIndex(bad, 1, ctx), std::invalid_argument);
    TextIndex idx(sym("ab"), 1, ctx);
    EXPECT_THROW(idx.substitute(3, 'a'), std::out_of_range);
}

TEST(TextIndex, RandomStreamMatchesRecomputation) {
    std::mt19937_64 rng(77);
    for (std::size_t tau : {1u, 3u, 8u, 40u}) {
        SymbolString t = oracle::randomString(rng, 300, 6);
        TextIndex idx(t, tau, HashContext::choose(300, 3));
        for (int step = 0; step < 2500; ++step) {
            const Position i = 1 + rng() % t.size();
            const Symbol c = rng() % 10 == 0 ? kWildcard : static_cast<Symbol>('a' + rng() % 6);
            const SymbolString before = idx.modifiedText();
            const auto changed = idx.substitute(i, c);
            t[i - 1] = c;
            const SymbolString expected = expectedModified(t, tau);
            ASSERT_EQ(idx.modifiedText(), expected);
            std::vector<Position> diff;
            for (Position j = 1; j <= t.size(); ++j) {
                if (before[j - 1] != expected[j - 1]) diff.push_back(j);
            }
            ASSERT_EQ(changed, diff);
            ASSERT_LE(idx.frequentSet().size() * tau, t.size());
            if (step % 50 == 0) {
                for (Symbol c2 : {Symbol('a'), Symbol('c'), Symbol('f'), kWildcard}) {
                    std::vector<Position> scan;
                    for (Position j = 1; j <= t.size(); ++j) {
                        if (t[j - 1] == c2) scan.push_back(j);
                    }
                    ASSERT_EQ(positions(idx.occurrences(c2)), scan);
                }
                ASSERT_EQ(idx.modifiedTree().rootHash(), RangeHashTree(expected, idx.context()).rootHash());
                ASSERT_EQ(idx.textTree().rootHash(), RangeHashTree(t, idx.context()).rootHash());
            }
        }
    }
}
