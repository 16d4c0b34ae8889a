#include "dynwild/range_pair.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dynwild {

RangePairStructure::RangePairStructure(std::vector<RangeCode> x, std::size_t alphabetSize,
                                       std::size_t blockSize, std::size_t rebuildThreshold,
                                       ConvolutionBackend backend)
    : x_(std::move(x)),
      applied_(x_),
      alphabet_(alphabetSize),
      block_(blockSize),
      delta_(rebuildThreshold),
      backend_(backend) {
    if (block_ < 1) throw std::invalid_argument("block size must be >= 1");
    if (delta_ < 1 || delta_ > block_) throw std::invalid_argument("rebuild threshold must lie in [1, B]");
    if (alphabet_ < 1) throw std::invalid_argument("alphabet must be non-empty");
    for (RangeCode c : x_) {
        if (c >= alphabet_) throw std::invalid_argument("symbol outside the range-pair alphabet");
    }
    numBlocks_ = (x_.size() + block_ - 1) / block_;
    pending_.resize(numBlocks_);
    near_.resize(numBlocks_);
    pair_.resize(numBlocks_ * numBlocks_);

    const std::size_t n = x_.size();
    for (Position u = 1; u <= n; ++u) {
        for (std::size_t d = 0; d < block_ && u + d + 1 <= n; ++d) adjustNear(blockOf(u), at(u), at(u + d + 1), d, +1);
    }
    for (std::size_t i = 0; i < numBlocks_; ++i) {
        for (std::size_t j = i + 1; j < numBlocks_; ++j) computePairSlice(i, j);
    }
}

Position RangePairStructure::blockEnd(std::size_t b) const { return std::min((b + 1) * block_, x_.size()); }

void RangePairStructure::adjustNear(std::size_t block, RangeCode a, RangeCode b, std::size_t d, int delta) {
    auto& row = near_[block][key(a, b)];
    if (row.empty()) row.assign(block_, 0);
    row[d] = static_cast<std::uint32_t>(static_cast<std::int64_t>(row[d]) + delta);
}

void RangePairStructure::computePairSlice(std::size_t i, std::size_t j) {
    Table& table = pairTable(i, j);
    table.clear();
    const Position si = blockStart(i);
    const Position ei = blockEnd(i);
    const Position sj = blockStart(j);
    const Position ej = blockEnd(j);

    // P_{i,a}(x) = sum [applied_u = a] x^(e_i - u),  Q_{j,b}(x) = sum [applied_v = b] x^(v - s_j)
    std::map<RangeCode, std::vector<std::uint32_t>> left;
    std::map<RangeCode, std::vector<std::uint32_t>> right;
    for (Position u = si; u <= ei; ++u) {
        auto& poly = left[appliedAt(u)];
        if (poly.empty()) poly.assign(ei - si + 1, 0);
        poly[ei - u] = 1;
    }
    for (Position v = sj; v <= ej; ++v) {
        auto& poly = right[appliedAt(v)];
        if (poly.empty()) poly.assign(ej - sj + 1, 0);
        poly[v - sj] = 1;
    }
    for (const auto& [a, pa] : left) {
        for (const auto& [b, qb] : right) {
            const auto product = convolve(pa, qb, backend_, &counters_.convolutionWork);
            ++counters_.convolutions;
            auto& row = table[key(a, b)];
            row.assign(2 * block_ - 1, 0);
            for (std::size_t e = 0; e < product.size(); ++e) row[e] = static_cast<std::uint32_t>(product[e]);
        }
    }
}

void RangePairStructure::rebuildBlock(std::size_t b) {
    ++counters_.rebuilds;
    for (Position p = blockStart(b); p <= blockEnd(b); ++p) applied_[p - 1] = x_[p - 1];
    pending_[b].clear();
    for (std::size_t i = 0; i < b; ++i) computePairSlice(i, b);
    for (std::size_t j = b + 1; j < numBlocks_; ++j) computePairSlice(b, j);
}

void RangePairStructure::rebuildAll() {
    for (std::size_t b = 0; b < numBlocks_; ++b) {
        for (Position p = blockStart(b); p <= blockEnd(b); ++p) applied_[p - 1] = x_[p - 1];
        pending_[b].clear();
    }
    for (std::size_t i = 0; i < numBlocks_; ++i) {
        for (std::size_t j = i + 1; j < numBlocks_; ++j) computePairSlice(i, j);
    }
}

void RangePairStructure::update(Position pos, RangeCode c) {
    if (pos < 1 || pos > x_.size()) throw std::out_of_range("RangePairStructure::update: position out of range");
    if (c >= alphabet_) throw std::invalid_argument("symbol outside the range-pair alphabet");
    ++counters_.updates;
    const RangeCode old = at(pos);
    if (old == c) return;

    const std::size_t n = x_.size();
    std::uint64_t touches = 0;
    // pos as left endpoint
    for (std::size_t d = 0; d < block_ && pos + d + 1 <= n; ++d) {
        const RangeCode right = at(pos + d + 1);
        adjustNear(blockOf(pos), old, right, d, -1);
        adjustNear(blockOf(pos), c, right, d, +1);
        ++touches;
    }
    // pos as right endpoint
    for (std::size_t d = 0; d < block_ && pos > d + 1; ++d) {
        const Position u = pos - d - 1;
        adjustNear(blockOf(u), at(u), old, d, -1);
        adjustNear(blockOf(u), at(u), c, d, +1);
        ++touches;
    }
    counters_.nearTouches += touches;
    counters_.maxNearTouchesPerUpdate = std::max(counters_.maxNearTouchesPerUpdate, touches);

    x_[pos - 1] = c;
    const std::size_t b = blockOf(pos);
    if (x_[pos - 1] != applied_[pos - 1]) {
        pending_[b].insert(pos);
    } else {
        pending_[b].erase(pos);
    }
    if (pending_[b].size() >= delta_) rebuildBlock(b);
}

std::uint64_t RangePairStructure::nearCount(std::size_t block, RangeCode a, RangeCode b, std::size_t d) const {
    if (a >= alphabet_ || b >= alphabet_ || d >= block_) return 0;
    const auto it = near_[block].find(key(a, b));
    return it == near_[block].end() ? 0 : it->second[d];
}

std::uint64_t RangePairStructure::pairCount(std::size_t i, std::size_t j, RangeCode a, RangeCode b,
                                            std::size_t dLocal) const {
    if (a >= alphabet_ || b >= alphabet_ || i >= j || j >= numBlocks_ || dLocal > 2 * block_ - 2) return 0;
    const Table& table = pairTable(i, j);
    const auto it = table.find(key(a, b));
    return it == table.end() ? 0 : it->second[dLocal];
}

std::uint64_t RangePairStructure::correctBlock(std::size_t i, std::size_t j, RangeCode a, RangeCode b,
                                               std::size_t d) const {
    std::int64_t delta = 0;
    // Left-endpoint changes: the whole pair is re-evaluated.
    for (Position u : pending_[i]) {
        const Position v = u + d + 1;
        const bool now = at(u) == a && at(v) == b;
        const bool then = appliedAt(u) == a && appliedAt(v) == b;
        delta += static_cast<int>(now) - static_cast<int>(then);
        ++counters_.corrections;
    }
    // Right-endpoint changes whose left endpoint is up to date.
    for (std::size_t target : {j, j + 1}) {
        if (target >= numBlocks_) continue;
        for (Position v : pending_[target]) {
            if (v <= d + 1) continue;
            const Position u = v - d - 1;
            if (blockOf(u) != i || pending_[i].contains(u) || at(u) != a) continue;
            delta += static_cast<int>(at(v) == b) - static_cast<int>(appliedAt(v) == b);
            ++counters_.corrections;
        }
    }
    return static_cast<std::uint64_t>(delta);
}

std::uint64_t RangePairStructure::query(Position l, Position r, RangeCode a, RangeCode b, std::size_t d) const {
    const std::size_t n = x_.size();
    if (l < 1 || l > r || r > n) throw std::out_of_range("RangePairStructure::query: invalid range");
    ++counters_.queries;
    if (a >= alphabet_ || b >= alphabet_) return 0;
    if (r < l + d + 1) return 0;
    const Position lo = l;
    const Position hi = r - d - 1;

    std::uint64_t count = 0;
    auto scan = [&](Position from, Position to) {
        for (Position u = from; u <= to; ++u) {
            if (at(u) == a && at(u + d + 1) == b) ++count;
        }
    };

    const std::size_t bl = blockOf(lo);
    const std::size_t bh = blockOf(hi);
    const std::size_t firstFull = lo == blockStart(bl) ? bl : bl + 1;
    // one past the last full block
    const std::size_t lastFullEnd = hi == blockEnd(bh) ? bh + 1 : bh;
    if (firstFull >= lastFullEnd) {
        scan(lo, hi);
        return count;
    }
    scan(lo, blockStart(firstFull) - 1);
    scan(blockEnd(lastFullEnd - 1) + 1, hi);

    for (std::size_t i = firstFull; i < lastFullEnd; ++i) {
        if (d < block_) {
            count += nearCount(i, a, b, d);
            continue;
        }
        const std::size_t j = blockOf(blockStart(i) + d + 1);
        std::uint64_t base = pairCount(i, j, a, b, d - (j - i - 1) * block_);
        if (j + 1 < numBlocks_ && d >= (j - i) * block_) base += pairCount(i, j + 1, a, b, d - (j - i) * block_);
        count += base + correctBlock(i, j, a, b, d);
    }
    return count;
}

}  // namespace dynwild
