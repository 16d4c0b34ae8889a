#pragma once

// Structural invariant checks shared by unit and acceptance tests.

#include <set>
#include <string>

#include "dynwild/matcher_two.hpp"

namespace checks {

// Empty string when every mapping invariant holds, else a description.
inline std::string twoMapInvariants(const dynwild::TwoMatcher& mt) {
    using namespace dynwild;
    const SymbolMap& map = mt.symbolMap();
    const TextIndex& idx = mt.textIndex();
    if (map.code(kWildcard) != SymbolMap::kWildcardCode) return "'?' lost code 1";
    std::set<RangeCode> used;
    for (std::size_t s = 0; s < kByteAlphabet; ++s) {
        const auto c = static_cast<Symbol>(s);
        if (isWildcard(c)) continue;
        const std::size_t count = idx.count(c);
        const RangeCode code = map.code(c);
        if (count > mt.tau() && code == SymbolMap::kRareCode) return "frequent symbol " + std::to_string(s) + " has code 0";
        if (code != SymbolMap::kRareCode) {
            if (count <= mt.tau() / 2) return "symbol " + std::to_string(s) + " kept a code below tau/2";
            if (code < 2 || code > map.maxCode()) return "code out of range";
            if (!used.insert(code).second) return "duplicate code";
            if (map.symbolOf(code) != c) return "reverse map mismatch";
        }
    }
    const RangePairStructure& rp = mt.rangePair();
    for (Position t = 1; t <= idx.size(); ++t) {
        if (rp.at(t) != map.code(idx.at(t))) return "X differs from the mapped text at " + std::to_string(t);
    }
    return {};
}

}  // namespace checks
