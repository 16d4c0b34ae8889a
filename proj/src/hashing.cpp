#include "dynwild/hashing.hpp"

#include <random>
#include <string>

namespace dynwild {

namespace {

std::uint64_t mulMod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powMod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mulMod(r, a, m);
        a = mulMod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool isPrime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These witnesses are deterministic for all 64-bit n.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powMod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulMod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

HashContext::CodeTable HashContext::defaultCodes() {
    CodeTable codes{};
    for (std::size_t v = 0; v <= kByteAlphabet; ++v) codes[v] = v + 1;
    codes[kWildcard] = 0;
    return codes;
}

HashContext::HashContext(std::uint64_t base, std::uint64_t modulus, std::size_t maxLength,
                         const CodeTable& codes)
    : base_(base), modulus_(modulus), codes_(codes) {
    if (!isPrime(modulus)) throw HashConfigError("hash modulus must be prime");
    if (base == 0 || base >= modulus) throw HashConfigError("hash base must lie in [1, p-1]");
    for (std::size_t v = 0; v <= kByteAlphabet; ++v) {
        if (codes_[v] >= modulus_) throw HashConfigError("symbol code must be below the modulus");
        for (std::size_t w = 0; w < v; ++w) {
            if (codes_[v] != 0 && codes_[v] == codes_[w]) throw HashConfigError("symbol codes must be distinct");
        }
    }
    powers_.resize(maxLength + 1);
    powers_[0] = 1;
    for (std::size_t e = 1; e <= maxLength; ++e) powers_[e] = mulMod(powers_[e - 1], base_, modulus_);
}

std::shared_ptr<const HashContext> HashContext::choose(std::size_t n, std::uint64_t seed) {
    if (n == 0) n = 1;
    const auto cube = static_cast<unsigned __int128>(n) * n * n;
    if (cube >= kMersenne61) {
        throw HashConfigError("length " + std::to_string(n) + " too large for the fixed modulus");
    }
    std::mt19937_64 rng(seed);
    std::uint64_t draw = 0;
    // 61-bit draws, rejecting the two values that fall outside [0, p-2].
    do {
        draw = rng() >> 3;
    } while (draw >= kMersenne61 - 1);
    return std::make_shared<const HashContext>(draw + 1, kMersenne61, n);
}

HashValue hashFull(std::span<const Symbol> s, const HashContext& ctx) {
    HashValue h = 0;
    for (Symbol c : s) h = ctx.add(ctx.mul(h, ctx.base()), ctx.code(c));
    return h;
}

HashValue maskedHash(std::span<const Symbol> s, std::span<const Position> wildcardPositions,
                     const HashContext& ctx) {
    HashValue acc = 0;
    Position start = 1;
    auto flush = [&](Position from, Position to) {
        if (from > to) return;
        auto block = s.subspan(from - 1, to - from + 1);
        acc = hashConcat(acc, 0, hashFull(block, ctx), block.size(), ctx);
    };
    for (Position w : wildcardPositions) {
        flush(start, w - 1);
        start = w + 1;
    }
    flush(start, s.size());
    return acc;
}

RangeHashTree::RangeHashTree(std::span<const Symbol> s, HashContextPtr ctx)
    : ctx_(std::move(ctx)), length_(s.size()) {
    capacity_ = 1;
    while (capacity_ < length_) capacity_ <<= 1;
    nodes_.assign(2 * capacity_, Node{});
    for (std::size_t i = 0; i < length_; ++i) nodes_[capacity_ + i] = Node{1, leafHash(s[i])};
    for (std::size_t v = capacity_ - 1; v >= 1; --v) pull(v);
}

HashValue RangeHashTree::leafHash(Symbol c) const {
    if (isWildcard(c)) return 0;
    return ctx_->code(c);
}

void RangeHashTree::pull(std::size_t v) {
    const Node& left = nodes_[2 * v];
    const Node& right = nodes_[2 * v + 1];
    nodes_[v].length = left.length + right.length;
    nodes_[v].hash = hashConcat(left.hash, left.length, right.hash, right.length, *ctx_);
}

void RangeHashTree::pointUpdate(Position i, Symbol c) {
    if (i < 1 || i > length_) throw std::out_of_range("RangeHashTree::pointUpdate: position out of range");
    std::size_t v = capacity_ + i - 1;
    nodes_[v].hash = leafHash(c);
    for (v >>= 1; v >= 1; v >>= 1) pull(v);
}

HashValue RangeHashTree::rangeHash(Position l, Position r) const {
    if (l < 1 || l > r || r > length_) throw std::out_of_range("RangeHashTree::rangeHash: invalid range");
    const HashContext& ctx = *ctx_;
    HashValue leftAcc = 0;
    HashValue rightAcc = 0;
    std::size_t rightLen = 0;
    std::size_t lo = capacity_ + l - 1;
    std::size_t hi = capacity_ + r;  // exclusive
    while (lo < hi) {
        if (lo & 1) {
            const Node& n = nodes_[lo++];
            leftAcc = hashConcat(leftAcc, 0, n.hash, n.length, ctx);
        }
        if (hi & 1) {
            const Node& n = nodes_[--hi];
            rightAcc = ctx.add(ctx.mul(n.hash, ctx.power(rightLen)), rightAcc);
            rightLen += n.length;
        }
        lo >>= 1;
        hi >>= 1;
    }
    return hashConcat(leftAcc, 0, rightAcc, rightLen, ctx);
}

}  // namespace dynwild
