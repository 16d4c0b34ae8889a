#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dynwild {

// Text and pattern symbols are bytes; the value 256 is the placeholder that
// stands in for every rare symbol in the modified text.
using Symbol = std::uint16_t;
using SymbolString = std::vector<Symbol>;

// Positions in the public API are 1-based, matching the script protocol.
using Position = std::size_t;

inline constexpr Symbol kWildcard = '?';
inline constexpr Symbol kPlaceholder = 256;
inline constexpr std::size_t kByteAlphabet = 256;

inline bool isWildcard(Symbol s) { return s == kWildcard; }

inline SymbolString toSymbols(std::string_view s) {
    SymbolString out;
    out.reserve(s.size());
    for (unsigned char c : s) out.push_back(c);
    return out;
}

inline std::string toDisplay(const SymbolString& s) {
    std::string out;
    out.reserve(s.size());
    for (Symbol c : s) out.push_back(c == kPlaceholder ? '#' : static_cast<char>(c));
    return out;
}

struct MatchVerdict {
    bool matched = false;
    std::optional<std::size_t> count;
    std::optional<Position> witness;

    explicit operator bool() const { return matched; }
};

}  // namespace dynwild
