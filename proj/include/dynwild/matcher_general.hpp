#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>

#include "dynwild/hashing.hpp"
#include "dynwild/substring_oracle.hpp"
#include "dynwild/symbol.hpp"
#include "dynwild/text_index.hpp"

namespace dynwild {

// Unclamped frequency threshold (n^k * log2(n)^7)^(1/(k+1)).
double tauFormula(std::size_t n, std::size_t k);

// ceil(tauFormula(n, k)) clamped to [1, n].
std::size_t defaultTau(std::size_t n, std::size_t k);

// Pattern with per-symbol position sets and a range-hash tree.
class PatternStore {
public:
    PatternStore(SymbolString pattern, HashContextPtr ctx);

    std::size_t size() const { return pattern_.size(); }
    const SymbolString& symbols() const { return pattern_; }
    Symbol at(Position i) const { return pattern_[i - 1]; }

    const std::set<Position>& positions(Symbol c) const { return positions_.at(c); }
    const std::set<Position>& wildcardPositions() const { return positions_[kWildcard]; }
    const RangeHashTree& tree() const { return tree_; }

    void substitute(Position i, Symbol c);

private:
    SymbolString pattern_;
    std::array<std::set<Position>, kByteAlphabet> positions_;
    RangeHashTree tree_;
};

// Wildcard-aware comparison of P[l1..r1] against T[l2..r2]: both slices are
// cut at every wildcard column of either side and the concatenated remaining
// blocks are compared by hash. Never misses a true match.
bool isMatch(const PatternStore& pattern, Position l1, Position r1, const TextIndex& text, Position l2,
             Position r2);

struct GeneralConfig {
    std::size_t wildcardBudget = 3;
    std::optional<std::size_t> tau;
    OracleKind oracle = OracleKind::WindowMultiset;
    std::uint64_t seed = 0x5eed;
};

struct GeneralCounters {
    std::size_t textUpdates = 0;
    std::size_t patternUpdates = 0;
    std::size_t modifiedTextChanges = 0;
    std::size_t queries = 0;
    std::size_t case1Queries = 0;
    std::size_t case2Queries = 0;
    std::size_t case1Candidates = 0;
    std::size_t isMatchCalls = 0;
    std::size_t completions = 0;
    std::size_t oracleUpdates = 0;
};

/*
 * Fully dynamic matcher for patterns and texts with at most k wildcards in
 * total. Queries dispatch on whether P holds a rare symbol:
 *
 *   Case 1  verify the windows anchored at the occurrences of the rarest
 *           pattern symbol and at the text wildcards,
 *   Case 2  walk all joint completions of the wildcards of P and T' over
 *           F + {placeholder} in Gray order, one oracle substitution per step.
 */
class GeneralMatcher {
public:
    GeneralMatcher(SymbolString text, SymbolString pattern, const GeneralConfig& config = {});

    void substituteText(Position i, Symbol c);
    void substitutePattern(Position i, Symbol c);

    MatchVerdict query();
    MatchVerdict queryCase1(Symbol rare, Position pos);
    MatchVerdict queryCase2();

    // Rare non-wildcard symbol of P with the fewest text occurrences.
    std::optional<Symbol> chooseRareSymbol() const;

    std::size_t wildcardCount() const;

    const TextIndex& textIndex() const { return text_; }
    const PatternStore& pattern() const { return pattern_; }
    const GeneralCounters& counters() const { return counters_; }
    std::size_t wildcardBudget() const { return budget_; }

private:
    static Symbol restingSymbol(Symbol c) { return isWildcard(c) ? kPlaceholder : c; }

    HashContextPtr ctx_;
    std::size_t budget_;
    TextIndex text_;
    PatternStore pattern_;
    std::unique_ptr<SubstringOracle> oracle_;
    GeneralCounters counters_;
};

}  // namespace dynwild
