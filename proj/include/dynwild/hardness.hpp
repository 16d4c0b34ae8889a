#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "dynwild/symbol.hpp"

namespace dynwild {

inline constexpr Symbol kDelimiter = '#';

struct OVInstance {
    std::vector<std::vector<bool>> vectors;

    std::size_t count() const { return vectors.size(); }
    std::size_t dimension() const { return vectors.empty() ? 0 : vectors.front().size(); }
    void validate() const;
};

// Parses one 0/1 string per element; all lengths must agree.
OVInstance parseOVInstance(const std::vector<std::string>& rows);

struct OVReduction {
    SymbolString text;                    // '#' V_1 '#' ... '#' V_n '#'
    std::vector<SymbolString> templates;  // '#' V'_i '#', 1 -> '0', 0 -> '?'
};

OVReduction ovReduce(const OVInstance& inst);

// True iff two distinct vectors have inner product zero.
bool ovBrute(const OVInstance& inst);

// Anything that can hold a live pattern against a fixed text.
class MatcherBackend {
public:
    virtual ~MatcherBackend() = default;
    virtual void substitutePattern(Position i, Symbol c) = 0;
    virtual bool query() = 0;
};

// General matcher with wildcard budget d.
std::unique_ptr<MatcherBackend> makeGeneralBackend(const SymbolString& text, const SymbolString& pattern,
                                                   std::size_t budget, std::uint64_t seed = 0x5eed);

struct OVSolveStats {
    std::size_t queries = 0;
    std::size_t substitutions = 0;
    std::size_t selfOnlyMatches = 0;
};

using BackendFactory =
    std::function<std::unique_ptr<MatcherBackend>(const SymbolString& text, const SymbolString& pattern)>;

bool ovSolveViaMatcher(const OVInstance& inst, const BackendFactory& factory, OVSolveStats* stats = nullptr);
bool ovSolveViaMatcher(const OVInstance& inst, OVSolveStats* stats = nullptr, std::uint64_t seed = 0x5eed);

}  // namespace dynwild
