#pragma once

#include <array>
#include <functional>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include <ext/pb_ds/assoc_container.hpp>
#include <ext/pb_ds/tree_policy.hpp>

#include "dynwild/hashing.hpp"
#include "dynwild/symbol.hpp"

namespace dynwild {

// Ordered position set with rank queries (order_of_key).
using OccurrenceSet = __gnu_pbds::tree<Position, __gnu_pbds::null_type, std::less<Position>,
                                       __gnu_pbds::rb_tree_tag,
                                       __gnu_pbds::tree_order_statistics_node_update>;

/*
 * Dynamic text T together with
 *   - the occurrence set R(c) of every byte symbol c (including '?'),
 *   - the frequent set F = { c != '?' : |R(c)| >= tau },
 *   - the modified text T' where rare symbols read as the placeholder,
 *   - range-hash trees over T and T'.
 * Substitutions keep all of these consistent.
 */
class TextIndex {
public:
    TextIndex(SymbolString text, std::size_t tau, HashContextPtr ctx);

    std::size_t size() const { return text_.size(); }
    std::size_t tau() const { return tau_; }

    const SymbolString& text() const { return text_; }
    const SymbolString& modifiedText() const { return modified_; }
    Symbol at(Position i) const { return text_[i - 1]; }
    Symbol modifiedAt(Position i) const { return modified_[i - 1]; }

    const OccurrenceSet& occurrences(Symbol c) const { return occ_.at(c); }
    std::size_t count(Symbol c) const { return occ_.at(c).size(); }

    // Size of R(c) intersected with [lo, hi].
    std::size_t countInRange(Symbol c, Position lo, Position hi) const;

    bool isFrequent(Symbol c) const { return frequent_.contains(c); }
    bool isRare(Symbol c) const { return !isWildcard(c) && !isFrequent(c); }
    const std::set<Symbol>& frequentSet() const { return frequent_; }

    // Smallest j in R(c) with j >= from.
    std::optional<Position> lowerBound(Symbol c, Position from) const;

    // T_i <- c. Returns the positions of T' whose symbol changed (ascending).
    std::vector<Position> substitute(Position i, Symbol c);

    const RangeHashTree& textTree() const { return textTree_; }
    const RangeHashTree& modifiedTree() const { return modifiedTree_; }
    const HashContextPtr& context() const { return ctx_; }

private:
    Symbol modifiedSymbolFor(Symbol c) const;
    void setModified(Position j, Symbol s, std::vector<Position>& changed);

    SymbolString text_;
    SymbolString modified_;
    std::size_t tau_;
    HashContextPtr ctx_;
    std::array<OccurrenceSet, kByteAlphabet> occ_;
    std::set<Symbol> frequent_;
    RangeHashTree textTree_;
    RangeHashTree modifiedTree_;
};

}  // namespace dynwild
