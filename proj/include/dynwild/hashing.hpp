#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

#include "dynwild/symbol.hpp"

namespace dynwild {

using HashValue = std::uint64_t;

class HashConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/*
 * Parameters of the polynomial rolling hash
 *
 *   H(s) = sum_i code(s_i) * base^(|s|-i)  mod p
 *
 * together with the power table base^0 .. base^maxLength. Immutable once
 * constructed, so one context is shared by every structure of a matcher.
 */
class HashContext {
public:
    // 2^61 - 1, a Mersenne prime; exceeds n^3 for every n <= 1.3e6.
    static constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

    // code[v] for v in [0, 256]; 0 marks "no code".
    using CodeTable = std::array<std::uint64_t, kByteAlphabet + 1>;

    // Default symbol map: byte v -> v + 1, placeholder -> 257. '?' has no code.
    static CodeTable defaultCodes();

    HashContext(std::uint64_t base, std::uint64_t modulus, std::size_t maxLength,
                const CodeTable& codes = defaultCodes());

    // Fixed Mersenne modulus, base drawn uniformly from [1, p-1] with a
    // deterministic generator seeded by `seed`. Throws if n^3 >= p.
    static std::shared_ptr<const HashContext> choose(std::size_t n, std::uint64_t seed);

    std::uint64_t base() const { return base_; }
    std::uint64_t modulus() const { return modulus_; }
    std::size_t maxLength() const { return powers_.size() - 1; }

    // base^e mod p; throws HashConfigError past the table.
    HashValue power(std::size_t e) const {
        if (e >= powers_.size()) throw HashConfigError("hash power table exceeded");
        return powers_[e];
    }

    bool hasCode(Symbol s) const { return s <= kByteAlphabet && codes_[s] != 0; }

    std::uint64_t code(Symbol s) const {
        if (!hasCode(s)) throw HashConfigError("symbol has no hash code");
        return codes_[s];
    }

    HashValue add(HashValue a, HashValue b) const {
        HashValue r = a + b;
        return r >= modulus_ ? r - modulus_ : r;
    }
    HashValue sub(HashValue a, HashValue b) const { return a >= b ? a - b : a + modulus_ - b; }
    HashValue mul(HashValue a, HashValue b) const {
        return static_cast<HashValue>(static_cast<unsigned __int128>(a) * b % modulus_);
    }

private:
    std::uint64_t base_;
    std::uint64_t modulus_;
    CodeTable codes_;
    std::vector<HashValue> powers_;
};

using HashContextPtr = std::shared_ptr<const HashContext>;

bool isPrime(std::uint64_t n);

HashValue hashFull(std::span<const Symbol> s, const HashContext& ctx);

inline HashValue hashConcat(HashValue h1, std::size_t /*len1*/, HashValue h2, std::size_t len2,
                            const HashContext& ctx) {
    return ctx.add(ctx.mul(h1, ctx.power(len2)), h2);
}

// Hash of `s` with the given 1-based positions deleted. `wildcardPositions`
// must be sorted ascending.
HashValue maskedHash(std::span<const Symbol> s, std::span<const Position> wildcardPositions,
                     const HashContext& ctx);

/*
 * Array-backed segment tree over a symbol string supporting point updates and
 * range hashes in O(log n). Each node keeps (length, hash) of its interval;
 * wildcard leaves carry hash 0 and are never meant to be read by comparisons
 * that mask them out.
 */
class RangeHashTree {
public:
    RangeHashTree() = default;
    RangeHashTree(std::span<const Symbol> s, HashContextPtr ctx);

    std::size_t size() const { return length_; }

    void pointUpdate(Position i, Symbol c);

    // Hash of S[l..r], 1-based inclusive.
    HashValue rangeHash(Position l, Position r) const;

    HashValue rootHash() const { return length_ == 0 ? 0 : nodes_[1].hash; }

    const HashContext& context() const { return *ctx_; }

private:
    struct Node {
        std::size_t length = 0;
        HashValue hash = 0;
    };

    HashValue leafHash(Symbol c) const;
    void pull(std::size_t v);

    HashContextPtr ctx_;
    std::size_t length_ = 0;
    std::size_t capacity_ = 0;
    std::vector<Node> nodes_;
};

}  // namespace dynwild
