#pragma once

#include <cstdint>
#include <set>
#include <unordered_map>
#include <vector>

#include "dynwild/convolution.hpp"
#include "dynwild/symbol.hpp"

namespace dynwild {

using RangeCode = std::uint32_t;

struct RangePairCounters {
    std::uint64_t updates = 0;
    std::uint64_t nearTouches = 0;
    std::uint64_t maxNearTouchesPerUpdate = 0;
    std::uint64_t rebuilds = 0;
    std::uint64_t convolutions = 0;
    std::uint64_t convolutionWork = 0;
    std::uint64_t queries = 0;
    std::uint64_t corrections = 0;
};

/*
 * Dynamic Range-Pair counting: for a string X over {0..alphabetSize-1},
 * query(l, r, a, b, d) = |{ i in [l, r-d-1] : X_i = a and X_{i+d+1} = b }|.
 *
 * X is cut into blocks of `blockSize`. Short gaps (d < B) are served from
 * Near tables kept exact against the live X. Long gaps read cross-block
 * Pair tables built by polynomial products over a snapshot ("applied");
 * positions where X and the snapshot disagree sit in a per-block pending set
 * and are corrected at query time. A block whose pending set reaches
 * `rebuildThreshold` is resynchronised and its Pair slices recomputed.
 */
class RangePairStructure {
public:
    RangePairStructure(std::vector<RangeCode> x, std::size_t alphabetSize, std::size_t blockSize,
                       std::size_t rebuildThreshold,
                       ConvolutionBackend backend = ConvolutionBackend::Schoolbook);

    std::size_t size() const { return x_.size(); }
    std::size_t alphabetSize() const { return alphabet_; }
    std::size_t blockSize() const { return block_; }
    std::size_t rebuildThreshold() const { return delta_; }
    std::size_t numBlocks() const { return numBlocks_; }

    RangeCode at(Position i) const { return x_[i - 1]; }
    RangeCode appliedAt(Position i) const { return applied_[i - 1]; }
    const std::vector<RangeCode>& values() const { return x_; }
    const std::set<Position>& pending(std::size_t block) const { return pending_[block]; }

    // 0-based block index of a 1-based position, and the block's extent.
    std::size_t blockOf(Position i) const { return (i - 1) / block_; }
    Position blockStart(std::size_t b) const { return b * block_ + 1; }
    Position blockEnd(std::size_t b) const;

    void update(Position pos, RangeCode c);
    std::uint64_t query(Position l, Position r, RangeCode a, RangeCode b, std::size_t d) const;

    // Table reads; zero when no entry was allocated.
    std::uint64_t nearCount(std::size_t block, RangeCode a, RangeCode b, std::size_t d) const;
    std::uint64_t pairCount(std::size_t i, std::size_t j, RangeCode a, RangeCode b, std::size_t dLocal) const;

    // Synchronise every block with X.
    void rebuildAll();

    const RangePairCounters& counters() const { return counters_; }

private:
    using Table = std::unordered_map<std::uint64_t, std::vector<std::uint32_t>>;

    std::uint64_t key(RangeCode a, RangeCode b) const { return std::uint64_t{a} * alphabet_ + b; }
    void adjustNear(std::size_t block, RangeCode a, RangeCode b, std::size_t d, int delta);
    void computePairSlice(std::size_t i, std::size_t j);
    void rebuildBlock(std::size_t b);
    Table& pairTable(std::size_t i, std::size_t j) { return pair_[i * numBlocks_ + j]; }
    const Table& pairTable(std::size_t i, std::size_t j) const { return pair_[i * numBlocks_ + j]; }

    std::uint64_t correctBlock(std::size_t i, std::size_t j, RangeCode a, RangeCode b, std::size_t d) const;

    std::vector<RangeCode> x_;
    std::vector<RangeCode> applied_;
    std::size_t alphabet_;
    std::size_t block_;
    std::size_t delta_;
    std::size_t numBlocks_;
    ConvolutionBackend backend_;
    std::vector<std::set<Position>> pending_;
    std::vector<Table> near_;
    std::vector<Table> pair_;
    mutable RangePairCounters counters_;
};

}  // namespace dynwild
