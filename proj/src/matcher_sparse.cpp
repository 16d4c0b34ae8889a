#include "dynwild/matcher_sparse.hpp"

#include <algorithm>
#include <stdexcept>

namespace dynwild {

SparseMatcher::SparseMatcher(SymbolString text, SymbolString pattern, std::uint64_t seed)
    : SparseMatcher(text, pattern, HashContext::choose(std::max<std::size_t>({text.size(), pattern.size(), 1}), seed)) {}

SparseMatcher::SparseMatcher(SymbolString text, SymbolString pattern, HashContextPtr ctx)
    : ctx_(std::move(ctx)), text_(std::move(text)), pattern_(std::move(pattern)) {
    const std::size_t n = text_.size();
    const std::size_t m = pattern_.size();
    if (m == 0) throw std::invalid_argument("pattern must be non-empty");
    if (m > n) throw std::invalid_argument("pattern longer than text");
    if (std::any_of(text_.begin(), text_.end(), isWildcard)) {
        throw std::invalid_argument("text must not contain wildcards");
    }
    const HashContext& h = *ctx_;

    for (Position q = 1; q <= m; ++q) (isWildcard(pattern_[q - 1]) ? wildcards_ : solid_).push_back(q);
    exponentOf_.assign(m + 1, 0);
    for (std::size_t r = 0; r < solid_.size(); ++r) exponentOf_[solid_[r]] = solid_.size() - 1 - r;

    // Maximal solid intervals [first, last] of the pattern.
    std::vector<std::pair<Position, Position>> intervals;
    for (Position q : solid_) {
        if (!intervals.empty() && intervals.back().second + 1 == q) {
            intervals.back().second = q;
        } else {
            intervals.emplace_back(q, q);
        }
    }
    intervals_ = intervals.size();

    // prefix[i] = H(T_1..T_i)
    std::vector<HashValue> prefix(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = h.add(h.mul(prefix[i], h.base()), h.code(text_[i]));
    auto substringHash = [&](Position from, Position to) {
        return h.sub(prefix[to], h.mul(prefix[from - 1], h.power(to - from + 1)));
    };

    windows_.resize(n - m + 1);
    for (Position s = 1; s <= windows_.size(); ++s) {
        HashValue acc = 0;
        for (const auto& [first, last] : intervals) {
            acc = hashConcat(acc, 0, substringHash(s + first - 1, s + last - 1), last - first + 1, h);
        }
        windows_[s - 1] = acc;
        ++multiset_[acc];
    }
    patternHash_ = maskedHash(pattern_, wildcards_, h);
}

std::size_t SparseMatcher::multiplicity(HashValue hv) const {
    auto it = multiset_.find(hv);
    return it == multiset_.end() ? 0 : it->second;
}

void SparseMatcher::substitutePattern(Position i, Symbol c) {
    if (i < 1 || i > pattern_.size()) throw std::out_of_range("substitutePattern: position out of range");
    if (isWildcard(pattern_[i - 1])) throw std::invalid_argument("wildcard positions are immutable");
    if (isWildcard(c)) throw std::invalid_argument("cannot place a wildcard in a solid position");
    const HashContext& h = *ctx_;
    ++counters_.patternUpdates;
    const Symbol old = pattern_[i - 1];
    if (old == c) return;
    patternHash_ = h.add(patternHash_, h.mul(h.sub(h.code(c), h.code(old)), h.power(exponentOf_[i])));
    pattern_[i - 1] = c;
}

void SparseMatcher::substituteText(Position j, Symbol c) {
    if (j < 1 || j > text_.size()) throw std::out_of_range("substituteText: position out of range");
    if (isWildcard(c)) throw std::invalid_argument("text must not contain wildcards");
    const HashContext& h = *ctx_;
    ++counters_.textUpdates;
    lastRecomputed_.clear();
    const Symbol old = text_[j - 1];
    if (old == c) return;
    text_[j - 1] = c;
    const HashValue diff = h.sub(h.code(c), h.code(old));
    for (Position q : solid_) {
        if (j < q) break;
        const Position s = j - q + 1;
        if (s > windows_.size()) continue;
        auto it = multiset_.find(windows_[s - 1]);
        if (--it->second == 0) multiset_.erase(it);
        windows_[s - 1] = h.add(windows_[s - 1], h.mul(diff, h.power(exponentOf_[q])));
        ++multiset_[windows_[s - 1]];
        lastRecomputed_.push_back(s);
        ++counters_.windowRecomputations;
    }
    std::sort(lastRecomputed_.begin(), lastRecomputed_.end());
}

MatchVerdict SparseMatcher::query() {
    ++counters_.queries;
    return MatchVerdict{multiset_.contains(patternHash_), std::nullopt, std::nullopt};
}

}  // namespace dynwild
