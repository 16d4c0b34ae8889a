#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "dynwild/hashing.hpp"
#include "dynwild/range_pair.hpp"
#include "dynwild/symbol.hpp"
#include "dynwild/text_index.hpp"

namespace dynwild {

/*
 * Theta: text symbols onto the range-pair alphabet {0..maxCode}.
 * Rare symbols share code 0, '?' owns code 1, and every frequent symbol holds
 * its own code in [2, maxCode]. Promotion happens once a symbol's count
 * exceeds tau, demotion once it falls to floor(tau/2).
 */
class SymbolMap {
public:
    static constexpr RangeCode kRareCode = 0;
    static constexpr RangeCode kWildcardCode = 1;

    SymbolMap() = default;
    explicit SymbolMap(RangeCode maxCode);

    RangeCode maxCode() const { return maxCode_; }
    std::size_t alphabetSize() const { return std::size_t{maxCode_} + 1; }
    RangeCode code(Symbol c) const { return isWildcard(c) ? kWildcardCode : theta_[c]; }
    bool isCoded(Symbol c) const { return !isWildcard(c) && theta_[c] != kRareCode; }
    std::optional<Symbol> symbolOf(RangeCode code) const;
    std::size_t activeCodes() const { return maxCode_ - 1 - freeCodes_.size(); }
    bool poolEmpty() const { return freeCodes_.empty(); }

    RangeCode assign(Symbol c);
    void release(Symbol c);

private:
    RangeCode maxCode_ = 1;
    std::array<RangeCode, kByteAlphabet> theta_{};
    std::array<std::int32_t, kByteAlphabet + 2> reverse_{};
    std::vector<RangeCode> freeCodes_;
};

struct TwoParams {
    std::optional<std::size_t> tau;
    std::optional<std::size_t> blockSize;
    std::optional<std::size_t> rebuildThreshold;
    ConvolutionBackend backend = ConvolutionBackend::Schoolbook;
    std::uint64_t seed = 0x5eed;
};

struct TwoCounters {
    std::uint64_t textUpdates = 0;
    std::uint64_t patternUpdates = 0;
    std::uint64_t promotions = 0;
    std::uint64_t demotions = 0;
    std::uint64_t retaggedPositions = 0;
    std::uint64_t queries = 0;
    std::uint64_t rareScans = 0;
    std::uint64_t rangePairQueries = 0;
};

enum class PatternEdit { Substitute, Insert, Delete };

/*
 * Matcher for patterns with at most two non-wildcard symbols. The pattern is
 * stored as its length plus the (position, symbol) list C, so pattern edits
 * are O(1). Text wildcards are supported; queries report the exact number of
 * matching windows.
 */
class TwoMatcher {
public:
    struct Anchor {
        Position position;
        Symbol symbol;
    };

    TwoMatcher(SymbolString text, const SymbolString& pattern, const TwoParams& params = {});

    // Defaults: tau = B = ceil(n^(4/5)), Delta = ceil(n^(3/5)).
    static std::size_t defaultTau(std::size_t n);
    static std::size_t defaultBlockSize(std::size_t n);
    static std::size_t defaultRebuildThreshold(std::size_t n);

    void editPattern(PatternEdit op, Position i, Symbol c = kWildcard);
    void substitutePattern(Position i, Symbol c) { editPattern(PatternEdit::Substitute, i, c); }
    void insertPattern(Position i, Symbol c) { editPattern(PatternEdit::Insert, i, c); }
    void deletePattern(Position i) { editPattern(PatternEdit::Delete, i); }

    void substituteText(Position i, Symbol c);

    MatchVerdict query();

    std::size_t textSize() const { return text_.size(); }
    std::size_t patternSize() const { return m_; }
    const std::vector<Anchor>& anchors() const { return anchors_; }
    SymbolString patternSymbols() const;
    std::size_t tau() const { return tau_; }

    const TextIndex& textIndex() const { return text_; }
    const SymbolMap& symbolMap() const { return map_; }
    const RangePairStructure& rangePair() const { return rp_; }
    const TwoCounters& counters() const { return counters_; }

    // Count of `c` at the moment of its most recent promotion.
    std::optional<std::size_t> countAtLastPromotion(Symbol c) const { return lastPromotionCount_[c]; }

private:
    void promote(Symbol c);
    void demote(Symbol c);
    void retag(Symbol c, RangeCode code);

    std::uint64_t countPairs(Symbol a, Symbol b, Position lo, Position hi, std::size_t d);

    std::size_t tau_;
    TextIndex text_;
    SymbolMap map_;
    RangePairStructure rp_;
    std::size_t m_ = 0;
    std::vector<Anchor> anchors_;
    std::array<std::optional<std::size_t>, kByteAlphabet> lastPromotionCount_{};
    TwoCounters counters_;
};

}  // namespace dynwild
