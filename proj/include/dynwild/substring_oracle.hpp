#pragma once

#include <map>
#include <memory>
#include <string_view>

#include "dynwild/hashing.hpp"
#include "dynwild/symbol.hpp"

namespace dynwild {

/*
 * Two mutable wildcard-free strings, a pattern A and a text B, with the
 * question "does A occur in B as a contiguous substring". Stands in for a
 * dynamic longest-common-substring structure: A occurs in B exactly when
 * LCS(A, B) = |A|.
 */
class SubstringOracle {
public:
    virtual ~SubstringOracle() = default;

    virtual void setPattern(Position i, Symbol c) = 0;
    virtual void setText(Position i, Symbol c) = 0;
    virtual bool contains() const = 0;
};

enum class OracleKind { NaiveScan, WindowMultiset };

OracleKind parseOracleKind(std::string_view name);

// Slides the pattern hash over every text window on each query.
class NaiveScanOracle final : public SubstringOracle {
public:
    NaiveScanOracle(const SymbolString& pattern, const SymbolString& text, HashContextPtr ctx);

    void setPattern(Position i, Symbol c) override { pattern_.pointUpdate(i, c); }
    void setText(Position i, Symbol c) override { text_.pointUpdate(i, c); }
    bool contains() const override;

private:
    RangeHashTree pattern_;
    RangeHashTree text_;
};

// Keeps the hash of every length-m text window in an ordered multiset; a
// substitution refreshes at most m windows by a coefficient delta.
class WindowMultisetOracle final : public SubstringOracle {
public:
    WindowMultisetOracle(const SymbolString& pattern, const SymbolString& text, HashContextPtr ctx);

    void setPattern(Position i, Symbol c) override;
    void setText(Position i, Symbol c) override;
    bool contains() const override;

private:
    void adjustWindow(std::size_t s, HashValue delta);

    HashContextPtr ctx_;
    SymbolString pattern_;
    SymbolString text_;
    HashValue patternHash_ = 0;
    std::vector<HashValue> windows_;
    std::map<HashValue, std::size_t> multiset_;
};

std::unique_ptr<SubstringOracle> makeOracle(OracleKind kind, const SymbolString& pattern,
                                            const SymbolString& text, HashContextPtr ctx);

}  // namespace dynwild
