#include "dynwild/matcher_two.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dynwild {

SymbolMap::SymbolMap(RangeCode maxCode) : maxCode_(std::max<RangeCode>(maxCode, 1)) {
    reverse_.fill(-1);
    for (RangeCode c = maxCode_; c >= 2; --c) freeCodes_.push_back(c);
}

std::optional<Symbol> SymbolMap::symbolOf(RangeCode code) const {
    if (code == kWildcardCode) return kWildcard;
    if (code < 2 || code > maxCode_ || reverse_[code] < 0) return std::nullopt;
    return static_cast<Symbol>(reverse_[code]);
}

RangeCode SymbolMap::assign(Symbol c) {
    if (isCoded(c)) return theta_[c];
    if (freeCodes_.empty()) throw std::logic_error("range-pair code pool exhausted");
    const RangeCode code = freeCodes_.back();
    freeCodes_.pop_back();
    theta_[c] = code;
    reverse_[code] = c;
    return code;
}

void SymbolMap::release(Symbol c) {
    if (!isCoded(c)) return;
    reverse_[theta_[c]] = -1;
    freeCodes_.push_back(theta_[c]);
    theta_[c] = kRareCode;
}

namespace {

std::size_t ceilPow(std::size_t n, double e) {
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(std::pow(static_cast<double>(n), e) - 1e-9)));
}

std::vector<RangeCode> mapText(const SymbolString& text, const SymbolMap& map) {
    std::vector<RangeCode> x(text.size());
    std::transform(text.begin(), text.end(), x.begin(), [&](Symbol c) { return map.code(c); });
    return x;
}

}  // namespace

std::size_t TwoMatcher::defaultTau(std::size_t n) { return ceilPow(n, 0.8); }
std::size_t TwoMatcher::defaultBlockSize(std::size_t n) { return ceilPow(n, 0.8); }
std::size_t TwoMatcher::defaultRebuildThreshold(std::size_t n) { return ceilPow(n, 0.6); }

TwoMatcher::TwoMatcher(SymbolString text, const SymbolString& pattern, const TwoParams& params)
    : tau_(params.tau.value_or(defaultTau(text.size()))),
      text_(text, tau_, HashContext::choose(std::max<std::size_t>(text.size(), 1), params.seed)),
      map_(static_cast<RangeCode>((2 * text.size() + tau_ - 1) / tau_)),
      rp_([&] {
          for (std::size_t c = 0; c < kByteAlphabet; ++c) {
              const auto sym = static_cast<Symbol>(c);
              if (!isWildcard(sym) && text_.count(sym) > tau_) map_.assign(sym);
          }
          return RangePairStructure(mapText(text_.text(), map_), map_.alphabetSize(),
                                    params.blockSize.value_or(defaultBlockSize(text.size())),
                                    params.rebuildThreshold.value_or(defaultRebuildThreshold(text.size())),
                                    params.backend);
      }()),
      m_(pattern.size()) {
    for (std::size_t c = 0; c < kByteAlphabet; ++c) {
        if (map_.isCoded(static_cast<Symbol>(c))) lastPromotionCount_[c] = text_.count(static_cast<Symbol>(c));
    }
    for (std::size_t j = 0; j < pattern.size(); ++j) {
        if (pattern[j] >= kByteAlphabet) throw std::invalid_argument("pattern symbols must be bytes");
        if (!isWildcard(pattern[j])) anchors_.push_back({j + 1, pattern[j]});
    }
    if (anchors_.size() > 2) throw std::invalid_argument("pattern has more than two non-wildcard symbols");
}

SymbolString TwoMatcher::patternSymbols() const {
    SymbolString p(m_, kWildcard);
    for (const Anchor& a : anchors_) p[a.position - 1] = a.symbol;
    return p;
}

void TwoMatcher::editPattern(PatternEdit op, Position i, Symbol c) {
    if (c >= kByteAlphabet) throw std::invalid_argument("pattern symbols must be bytes");
    const std::size_t limit = op == PatternEdit::Insert ? m_ + 1 : m_;
    if (i < 1 || i > limit) throw std::out_of_range("pattern position out of range");

    std::vector<Anchor> next;
    for (Anchor a : anchors_) {
        if (a.position == i && op != PatternEdit::Insert) continue;
        if (op == PatternEdit::Insert && a.position >= i) ++a.position;
        if (op == PatternEdit::Delete && a.position > i) --a.position;
        next.push_back(a);
    }
    if (op != PatternEdit::Delete && !isWildcard(c)) next.push_back({i, c});
    if (next.size() > 2) throw std::invalid_argument("edit would create a third non-wildcard symbol");
    std::sort(next.begin(), next.end(), [](const Anchor& x, const Anchor& y) { return x.position < y.position; });

    anchors_ = std::move(next);
    if (op == PatternEdit::Insert) ++m_;
    if (op == PatternEdit::Delete) --m_;
    ++counters_.patternUpdates;
}

void TwoMatcher::retag(Symbol c, RangeCode code) {
    for (Position p : text_.occurrences(c)) {
        rp_.update(p, code);
        ++counters_.retaggedPositions;
    }
}

void TwoMatcher::demote(Symbol c) {
    ++counters_.demotions;
    map_.release(c);
    retag(c, SymbolMap::kRareCode);
}

void TwoMatcher::promote(Symbol c) {
    if (map_.poolEmpty()) {
        // Unreachable while demotions are eager; kept for the stated fallback.
        for (std::size_t s = 0; s < kByteAlphabet; ++s) {
            const auto sym = static_cast<Symbol>(s);
            if (map_.isCoded(sym) && text_.count(sym) <= tau_ / 2) {
                demote(sym);
                break;
            }
        }
    }
    ++counters_.promotions;
    lastPromotionCount_[c] = text_.count(c);
    retag(c, map_.assign(c));
}

void TwoMatcher::substituteText(Position i, Symbol c) {
    if (i < 1 || i > text_.size()) throw std::out_of_range("substituteText: position out of range");
    if (c >= kByteAlphabet) throw std::invalid_argument("text symbols must be bytes");
    const Symbol old = text_.at(i);
    if (old == c) return;
    ++counters_.textUpdates;
    text_.substitute(i, c);
    if (map_.isCoded(old) && text_.count(old) <= tau_ / 2) demote(old);
    if (!isWildcard(c) && !map_.isCoded(c) && text_.count(c) > tau_) promote(c);
    rp_.update(i, map_.code(c));
}

std::uint64_t TwoMatcher::countPairs(Symbol a, Symbol b, Position lo, Position hi, std::size_t d) {
    std::uint64_t total = 0;
    for (Symbol x : {a, kWildcard}) {
        for (Symbol y : {b, kWildcard}) {
            if (!isWildcard(x) && !map_.isCoded(x)) {
                ++counters_.rareScans;
                const auto& occ = text_.occurrences(x);
                for (auto it = occ.lower_bound(lo); it != occ.end() && *it <= hi; ++it) {
                    if (text_.at(*it + d + 1) == y) ++total;
                }
            } else if (!isWildcard(y) && !map_.isCoded(y)) {
                ++counters_.rareScans;
                const auto& occ = text_.occurrences(y);
                for (auto it = occ.lower_bound(lo + d + 1); it != occ.end() && *it <= hi + d + 1; ++it) {
                    if (text_.at(*it - d - 1) == x) ++total;
                }
            } else {
                ++counters_.rangePairQueries;
                total += rp_.query(lo, hi + d + 1, map_.code(x), map_.code(y), d);
            }
        }
    }
    return total;
}

MatchVerdict TwoMatcher::query() {
    ++counters_.queries;
    const std::size_t n = text_.size();
    const std::size_t m = m_;
    if (m > n) return MatchVerdict{false, 0, std::nullopt};

    std::uint64_t count = 0;
    std::optional<Position> witness;
    if (anchors_.empty()) {
        count = n - m + 1;
        witness = 1;
    } else if (anchors_.size() == 1) {
        const auto [i, a] = anchors_.front();
        const Position lo = i;
        const Position hi = n - m + i;
        count = text_.countInRange(a, lo, hi) + text_.countInRange(kWildcard, lo, hi);
        for (Symbol s : {a, kWildcard}) {
            auto p = text_.lowerBound(s, lo);
            if (p && *p <= hi && (!witness || *p - i + 1 < *witness)) witness = *p - i + 1;
        }
    } else {
        const auto [i, a] = anchors_[0];
        const auto [j, b] = anchors_[1];
        count = countPairs(a, b, i, n - m + i, j - i - 1);
    }
    return MatchVerdict{count > 0, static_cast<std::size_t>(count), witness};
}

}  // namespace dynwild
