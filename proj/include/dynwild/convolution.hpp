#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace dynwild {

enum class ConvolutionBackend { Schoolbook, Ntt };

ConvolutionBackend parseConvolutionBackend(std::string_view name);

// Exact product of two non-negative integer coefficient vectors. `work`, when
// given, is increased by the number of elementary multiply-adds performed.
// The NTT backend works modulo 998244353 and is exact while every product
// coefficient stays below that modulus.
std::vector<std::uint64_t> convolve(std::span<const std::uint32_t> f, std::span<const std::uint32_t> g,
                                    ConvolutionBackend backend, std::uint64_t* work = nullptr);

}  // namespace dynwild
