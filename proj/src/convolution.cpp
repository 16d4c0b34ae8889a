#include "dynwild/convolution.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace dynwild {

namespace {

constexpr std::uint64_t kNttModulus = 998244353;
constexpr std::uint64_t kNttRoot = 3;

std::uint64_t powMod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    a %= kNttModulus;
    while (e > 0) {
        if (e & 1) r = r * a % kNttModulus;
        a = a * a % kNttModulus;
        e >>= 1;
    }
    return r;
}

void ntt(std::vector<std::uint64_t>& a, bool invert) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        std::uint64_t w = powMod(kNttRoot, (kNttModulus - 1) / len);
        if (invert) w = powMod(w, kNttModulus - 2);
        for (std::size_t i = 0; i < n; i += len) {
            std::uint64_t wn = 1;
            for (std::size_t j = 0; j < len / 2; ++j) {
                const std::uint64_t u = a[i + j];
                const std::uint64_t v = a[i + j + len / 2] * wn % kNttModulus;
                a[i + j] = u + v < kNttModulus ? u + v : u + v - kNttModulus;
                a[i + j + len / 2] = u >= v ? u - v : u + kNttModulus - v;
                wn = wn * w % kNttModulus;
            }
        }
    }
    if (invert) {
        const std::uint64_t inv = powMod(n, kNttModulus - 2);
        for (auto& x : a) x = x * inv % kNttModulus;
    }
}

}  // namespace

ConvolutionBackend parseConvolutionBackend(std::string_view name) {
    if (name == "schoolbook") return ConvolutionBackend::Schoolbook;
    if (name == "ntt") return ConvolutionBackend::Ntt;
    throw std::invalid_argument("unknown convolution backend: " + std::string(name));
}

std::vector<std::uint64_t> convolve(std::span<const std::uint32_t> f, std::span<const std::uint32_t> g,
                                    ConvolutionBackend backend, std::uint64_t* work) {
    if (f.empty() || g.empty()) return {};
    const std::size_t outLen = f.size() + g.size() - 1;
    if (backend == ConvolutionBackend::Schoolbook) {
        std::vector<std::uint64_t> out(outLen, 0);
        std::uint64_t ops = 0;
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (f[i] == 0) continue;
            for (std::size_t j = 0; j < g.size(); ++j) {
                if (g[j] == 0) continue;
                out[i + j] += std::uint64_t{f[i]} * g[j];
                ++ops;
            }
        }
        if (work) *work += ops;
        return out;
    }
    const std::size_t size = std::bit_ceil(outLen);
    std::vector<std::uint64_t> fa(f.begin(), f.end());
    std::vector<std::uint64_t> ga(g.begin(), g.end());
    fa.resize(size, 0);
    ga.resize(size, 0);
    ntt(fa, false);
    ntt(ga, false);
    for (std::size_t i = 0; i < size; ++i) fa[i] = fa[i] * ga[i] % kNttModulus;
    ntt(fa, true);
    fa.resize(outLen);
    if (work) *work += 3 * size * static_cast<std::uint64_t>(std::bit_width(size));
    return fa;
}

}  // namespace dynwild
