#include "dynwild/substring_oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dynwild {

OracleKind parseOracleKind(std::string_view name) {
    if (name == "naive") return OracleKind::NaiveScan;
    if (name == "multiset") return OracleKind::WindowMultiset;
    throw std::invalid_argument("unknown oracle kind: " + std::string(name));
}

NaiveScanOracle::NaiveScanOracle(const SymbolString& pattern, const SymbolString& text, HashContextPtr ctx)
    : pattern_(pattern, ctx), text_(text, ctx) {}

bool NaiveScanOracle::contains() const {
    const std::size_t m = pattern_.size();
    const std::size_t n = text_.size();
    if (m > n) return false;
    if (m == 0) return true;
    const HashValue target = pattern_.rootHash();
    for (Position s = 1; s + m - 1 <= n; ++s) {
        if (text_.rangeHash(s, s + m - 1) == target) return true;
    }
    return false;
}

WindowMultisetOracle::WindowMultisetOracle(const SymbolString& pattern, const SymbolString& text,
                                           HashContextPtr ctx)
    : ctx_(std::move(ctx)), pattern_(pattern), text_(text) {
    const HashContext& h = *ctx_;
    patternHash_ = hashFull(pattern_, h);
    const std::size_t m = pattern_.size();
    const std::size_t n = text_.size();
    if (m > n) return;
    windows_.resize(n - m + 1);
    // rolling: W_{s+1} = (W_s - code(T_s) b^{m-1}) b + code(T_{s+m})
    HashValue w = hashFull(std::span<const Symbol>(text_).first(m), h);
    const HashValue top = m == 0 ? 0 : h.power(m - 1);
    for (std::size_t s = 0; s < windows_.size(); ++s) {
        windows_[s] = w;
        ++multiset_[w];
        if (s + m < n && m > 0) {
            w = h.add(h.mul(h.sub(w, h.mul(h.code(text_[s]), top)), h.base()), h.code(text_[s + m]));
        }
    }
}

void WindowMultisetOracle::adjustWindow(std::size_t s, HashValue delta) {
    auto it = multiset_.find(windows_[s]);
    if (--it->second == 0) multiset_.erase(it);
    windows_[s] = ctx_->add(windows_[s], delta);
    ++multiset_[windows_[s]];
}

void WindowMultisetOracle::setPattern(Position i, Symbol c) {
    const HashContext& h = *ctx_;
    const Symbol old = pattern_[i - 1];
    if (old == c) return;
    const HashValue delta = h.mul(h.sub(h.code(c), h.code(old)), h.power(pattern_.size() - i));
    patternHash_ = h.add(patternHash_, delta);
    pattern_[i - 1] = c;
}

void WindowMultisetOracle::setText(Position i, Symbol c) {
    const HashContext& h = *ctx_;
    const Symbol old = text_[i - 1];
    if (old == c) return;
    text_[i - 1] = c;
    if (windows_.empty()) return;
    const std::size_t m = pattern_.size();
    const HashValue diff = h.sub(h.code(c), h.code(old));
    // window s (1-based) covers [s, s+m-1]; position i sits at offset i-s
    const std::size_t first = i >= m ? i - m + 1 : 1;
    const std::size_t last = std::min(i, windows_.size());
    for (std::size_t s = first; s <= last; ++s) {
        adjustWindow(s - 1, h.mul(diff, h.power(m - 1 - (i - s))));
    }
}

bool WindowMultisetOracle::contains() const {
    if (windows_.empty()) return false;
    return multiset_.contains(patternHash_);
}

std::unique_ptr<SubstringOracle> makeOracle(OracleKind kind, const SymbolString& pattern,
                                            const SymbolString& text, HashContextPtr ctx) {
    switch (kind) {
        case OracleKind::NaiveScan:
            return std::make_unique<NaiveScanOracle>(pattern, text, std::move(ctx));
        case OracleKind::WindowMultiset:
            return std::make_unique<WindowMultisetOracle>(pattern, text, std::move(ctx));
    }
    throw std::invalid_argument("unknown oracle kind");
}

}  // namespace dynwild
