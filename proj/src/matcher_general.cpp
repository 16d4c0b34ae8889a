#include "dynwild/matcher_general.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "dynwild/gray_code.hpp"

namespace dynwild {

double tauFormula(std::size_t n, std::size_t k) {
    const double ln = std::log(static_cast<double>(n));
    const double log2n = std::log2(static_cast<double>(n));
    const double kk = static_cast<double>(k);
    return std::exp((kk * ln + 7.0 * std::log(log2n)) / (kk + 1.0));
}

std::size_t defaultTau(std::size_t n, std::size_t k) {
    if (n < 2) return 1;
    k = std::max<std::size_t>(k, 1);
    const double t = std::ceil(tauFormula(n, k));
    if (!(t < static_cast<double>(n))) return n;
    return std::max<std::size_t>(1, static_cast<std::size_t>(t));
}

PatternStore::PatternStore(SymbolString pattern, HashContextPtr ctx)
    : pattern_(std::move(pattern)), tree_(pattern_, std::move(ctx)) {
    for (std::size_t j = 0; j < pattern_.size(); ++j) {
        if (pattern_[j] >= kByteAlphabet) throw std::invalid_argument("pattern symbols must be bytes");
        positions_[pattern_[j]].insert(j + 1);
    }
}

void PatternStore::substitute(Position i, Symbol c) {
    if (i < 1 || i > pattern_.size()) throw std::out_of_range("PatternStore::substitute: position out of range");
    if (c >= kByteAlphabet) throw std::invalid_argument("pattern symbols must be bytes");
    const Symbol old = pattern_[i - 1];
    if (old == c) return;
    positions_[old].erase(i);
    positions_[c].insert(i);
    pattern_[i - 1] = c;
    tree_.pointUpdate(i, c);
}

bool isMatch(const PatternStore& pattern, Position l1, Position r1, const TextIndex& text, Position l2,
             Position r2) {
    if (r1 - l1 != r2 - l2) throw std::invalid_argument("isMatch: slice lengths differ");
    const std::size_t len = r1 - l1 + 1;

    // Offsets (0-based within the slice) of every wildcard column.
    std::vector<std::size_t> cuts;
    const auto& pw = pattern.wildcardPositions();
    for (auto it = pw.lower_bound(l1); it != pw.end() && *it <= r1; ++it) cuts.push_back(*it - l1);
    const auto& tw = text.occurrences(kWildcard);
    for (auto it = tw.lower_bound(l2); it != tw.end() && *it <= r2; ++it) cuts.push_back(*it - l2);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    cuts.push_back(len);

    const HashContext& ctx = pattern.tree().context();
    HashValue hp = 0;
    HashValue ht = 0;
    std::size_t start = 0;
    for (std::size_t cut : cuts) {
        if (start < cut) {
            const std::size_t blockLen = cut - start;
            hp = hashConcat(hp, 0, pattern.tree().rangeHash(l1 + start, l1 + cut - 1), blockLen, ctx);
            ht = hashConcat(ht, 0, text.textTree().rangeHash(l2 + start, l2 + cut - 1), blockLen, ctx);
        }
        start = cut + 1;
    }
    return hp == ht;
}

namespace {

std::size_t resolveTau(std::size_t n, const GeneralConfig& config) {
    if (config.tau) {
        if (*config.tau < 1) throw std::invalid_argument("tau must be >= 1");
        return *config.tau;
    }
    return defaultTau(n, config.wildcardBudget);
}

SymbolString restingText(const SymbolString& modified) {
    SymbolString out(modified);
    for (Symbol& c : out) {
        if (isWildcard(c)) c = kPlaceholder;
    }
    return out;
}

}  // namespace

GeneralMatcher::GeneralMatcher(SymbolString text, SymbolString pattern, const GeneralConfig& config)
    : ctx_(HashContext::choose(std::max({text.size(), pattern.size(), std::size_t{1}}), config.seed)),
      budget_(config.wildcardBudget),
      text_(text, resolveTau(text.size(), config), ctx_),
      pattern_(std::move(pattern), ctx_) {
    if (pattern_.size() == 0) throw std::invalid_argument("pattern must be non-empty");
    if (wildcardCount() > budget_) throw std::invalid_argument("wildcard budget exceeded");
    oracle_ = makeOracle(config.oracle, restingText(pattern_.symbols()), restingText(text_.modifiedText()), ctx_);
}

std::size_t GeneralMatcher::wildcardCount() const {
    return pattern_.wildcardPositions().size() + text_.count(kWildcard);
}

void GeneralMatcher::substituteText(Position i, Symbol c) {
    if (i < 1 || i > text_.size()) throw std::out_of_range("substituteText: position out of range");
    if (isWildcard(c) && !isWildcard(text_.at(i)) && wildcardCount() + 1 > budget_) {
        throw std::invalid_argument("wildcard budget exceeded");
    }
    ++counters_.textUpdates;
    for (Position j : text_.substitute(i, c)) {
        oracle_->setText(j, restingSymbol(text_.modifiedAt(j)));
        ++counters_.modifiedTextChanges;
        ++counters_.oracleUpdates;
    }
}

void GeneralMatcher::substitutePattern(Position i, Symbol c) {
    if (i < 1 || i > pattern_.size()) throw std::out_of_range("substitutePattern: position out of range");
    if (isWildcard(c) && !isWildcard(pattern_.at(i)) && wildcardCount() + 1 > budget_) {
        throw std::invalid_argument("wildcard budget exceeded");
    }
    ++counters_.patternUpdates;
    pattern_.substitute(i, c);
    oracle_->setPattern(i, restingSymbol(c));
    ++counters_.oracleUpdates;
}

std::optional<Symbol> GeneralMatcher::chooseRareSymbol() const {
    std::optional<Symbol> best;
    std::size_t bestCount = std::numeric_limits<std::size_t>::max();
    for (std::size_t c = 0; c < kByteAlphabet; ++c) {
        const auto sym = static_cast<Symbol>(c);
        if (isWildcard(sym) || pattern_.positions(sym).empty() || !text_.isRare(sym)) continue;
        if (text_.count(sym) < bestCount) {
            best = sym;
            bestCount = text_.count(sym);
        }
    }
    return best;
}

MatchVerdict GeneralMatcher::query() {
    ++counters_.queries;
    if (pattern_.size() > text_.size()) return MatchVerdict{};
    if (auto rare = chooseRareSymbol()) return queryCase1(*rare, *pattern_.positions(*rare).begin());
    return queryCase2();
}

MatchVerdict GeneralMatcher::queryCase1(Symbol rare, Position pos) {
    ++counters_.case1Queries;
    const std::size_t n = text_.size();
    const std::size_t m = pattern_.size();
    if (m > n) return MatchVerdict{};
    auto tryAnchor = [&](Position i) -> std::optional<Position> {
        ++counters_.case1Candidates;
        if (i < pos || i - pos + m > n) return std::nullopt;
        const Position start = i - pos + 1;
        ++counters_.isMatchCalls;
        if (isMatch(pattern_, 1, m, text_, start, start + m - 1)) return start;
        return std::nullopt;
    };
    for (Symbol anchor : {rare, kWildcard}) {
        for (Position i : text_.occurrences(anchor)) {
            if (auto start = tryAnchor(i)) return MatchVerdict{true, std::nullopt, start};
        }
    }
    return MatchVerdict{};
}

MatchVerdict GeneralMatcher::queryCase2() {
    ++counters_.case2Queries;
    if (pattern_.size() > text_.size()) return MatchVerdict{};

    struct Slot {
        bool inPattern;
        Position position;
    };
    std::vector<Slot> slots;
    for (Position j : pattern_.wildcardPositions()) slots.push_back({true, j});
    for (Position j : text_.occurrences(kWildcard)) slots.push_back({false, j});

    std::vector<Symbol> alphabet(text_.frequentSet().begin(), text_.frequentSet().end());
    alphabet.push_back(kPlaceholder);

    auto assign = [&](std::size_t slot, Symbol value) {
        ++counters_.oracleUpdates;
        if (slots[slot].inPattern) {
            oracle_->setPattern(slots[slot].position, value);
        } else {
            oracle_->setText(slots[slot].position, value);
        }
    };

    GrayCodeEnumerator gray(slots.size(), alphabet.size());
    for (std::size_t s = 0; s < slots.size(); ++s) assign(s, alphabet[0]);
    ++counters_.completions;
    if (oracle_->contains()) return MatchVerdict{true, std::nullopt, std::nullopt};
    while (auto step = gray.next()) {
        assign(step->coordinate, alphabet[step->value]);
        ++counters_.completions;
        if (oracle_->contains()) return MatchVerdict{true, std::nullopt, std::nullopt};
    }
    return MatchVerdict{};
}

}  // namespace dynwild
