#include "dynwild/text_index.hpp"

#include <algorithm>
#include <stdexcept>

namespace dynwild {

namespace {

void requireByte(Symbol c) {
    if (c >= kByteAlphabet) throw std::invalid_argument("text symbols must be bytes");
}

}  // namespace

TextIndex::TextIndex(SymbolString text, std::size_t tau, HashContextPtr ctx)
    : text_(std::move(text)), tau_(tau), ctx_(std::move(ctx)) {
    if (tau_ < 1) throw std::invalid_argument("threshold tau must be >= 1");
    for (std::size_t i = 0; i < text_.size(); ++i) {
        requireByte(text_[i]);
        occ_[text_[i]].insert(i + 1);
    }
    for (std::size_t c = 0; c < kByteAlphabet; ++c) {
        if (c != kWildcard && occ_[c].size() >= tau_) frequent_.insert(static_cast<Symbol>(c));
    }
    modified_.resize(text_.size());
    std::transform(text_.begin(), text_.end(), modified_.begin(),
                   [this](Symbol c) { return modifiedSymbolFor(c); });
    textTree_ = RangeHashTree(text_, ctx_);
    modifiedTree_ = RangeHashTree(modified_, ctx_);
}

Symbol TextIndex::modifiedSymbolFor(Symbol c) const {
    if (isWildcard(c) || isFrequent(c)) return c;
    return kPlaceholder;
}

std::size_t TextIndex::countInRange(Symbol c, Position lo, Position hi) const {
    if (lo > hi) return 0;
    const OccurrenceSet& s = occ_.at(c);
    return s.order_of_key(hi + 1) - s.order_of_key(lo);
}

std::optional<Position> TextIndex::lowerBound(Symbol c, Position from) const {
    const OccurrenceSet& s = occ_.at(c);
    auto it = s.lower_bound(from);
    if (it == s.end()) return std::nullopt;
    return *it;
}

void TextIndex::setModified(Position j, Symbol s, std::vector<Position>& changed) {
    if (modified_[j - 1] == s) return;
    modified_[j - 1] = s;
    modifiedTree_.pointUpdate(j, s);
    changed.push_back(j);
}

std::vector<Position> TextIndex::substitute(Position i, Symbol c) {
    if (i < 1 || i > text_.size()) throw std::out_of_range("TextIndex::substitute: position out of range");
    requireByte(c);
    std::vector<Position> changed;
    const Symbol old = text_[i - 1];
    if (old == c) return changed;

    occ_[old].erase(i);
    occ_[c].insert(i);
    text_[i - 1] = c;
    textTree_.pointUpdate(i, c);

    // Only the two symbols involved can cross the threshold.
    if (!isWildcard(old) && occ_[old].size() + 1 == tau_) {
        frequent_.erase(old);
        for (Position j : occ_[old]) setModified(j, kPlaceholder, changed);
    }
    if (!isWildcard(c) && occ_[c].size() == tau_) {
        frequent_.insert(c);
        for (Position j : occ_[c]) setModified(j, c, changed);
    }
    setModified(i, modifiedSymbolFor(c), changed);

    std::sort(changed.begin(), changed.end());
    changed.erase(std::unique(changed.begin(), changed.end()), changed.end());
    return changed;
}

}  // namespace dynwild
