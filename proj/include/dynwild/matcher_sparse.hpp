#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "dynwild/hashing.hpp"
#include "dynwild/symbol.hpp"

namespace dynwild {

struct SparseCounters {
    std::uint64_t textUpdates = 0;
    std::uint64_t patternUpdates = 0;
    std::uint64_t windowRecomputations = 0;
    std::uint64_t queries = 0;
};

/*
 * Matcher for a pattern whose wildcard positions W are fixed for its whole
 * lifetime, over a wildcard-free text. Every length-m text window keeps its
 * masked hash H'(window) (the W columns deleted) in A and in a hash -> count
 * multiset; the pattern matches iff H'(P) is in the multiset.
 *
 * The non-wildcard columns C = {c_1 < ... < c_w} contribute with exponent
 * w - rank, so a single substitution moves one coefficient of each affected
 * hash and is applied as a delta.
 */
class SparseMatcher {
public:
    SparseMatcher(SymbolString text, SymbolString pattern, HashContextPtr ctx);
    SparseMatcher(SymbolString text, SymbolString pattern, std::uint64_t seed = 0x5eed);

    void substitutePattern(Position i, Symbol c);
    void substituteText(Position j, Symbol c);
    MatchVerdict query();

    std::size_t textSize() const { return text_.size(); }
    std::size_t patternSize() const { return pattern_.size(); }
    const SymbolString& text() const { return text_; }
    const SymbolString& pattern() const { return pattern_; }
    const std::vector<Position>& wildcardSet() const { return wildcards_; }
    const std::vector<Position>& solidPositions() const { return solid_; }
    std::size_t intervalCount() const { return intervals_; }

    // A_s for 1-based window start s.
    HashValue windowHash(Position s) const { return windows_[s - 1]; }
    std::size_t windowCount() const { return windows_.size(); }
    HashValue patternHash() const { return patternHash_; }
    std::size_t multiplicity(HashValue h) const;

    // Window starts touched by the most recent text update, ascending.
    const std::vector<Position>& lastRecomputed() const { return lastRecomputed_; }

    const HashContext& context() const { return *ctx_; }
    const SparseCounters& counters() const { return counters_; }

private:
    HashContextPtr ctx_;
    SymbolString text_;
    SymbolString pattern_;
    std::vector<Position> wildcards_;
    std::vector<Position> solid_;
    std::vector<std::size_t> exponentOf_;  // by pattern position, valid on solid columns
    std::size_t intervals_ = 0;
    std::vector<HashValue> windows_;
    HashValue patternHash_ = 0;
    std::map<HashValue, std::size_t> multiset_;
    std::vector<Position> lastRecomputed_;
    SparseCounters counters_;
};

}  // namespace dynwild
