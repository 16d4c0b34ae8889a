#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace dynwild {

/*
 * Reflected mixed-radix Gray code over {0..radix-1}^k. The last coordinate
 * moves fastest; every other coordinate sweeps alternately up and down, so
 * consecutive vectors differ in exactly one coordinate and all radix^k
 * vectors are produced once. k = 0 yields the single empty vector.
 */
class GrayCodeEnumerator {
public:
    struct Step {
        std::size_t coordinate;
        std::size_t value;
    };

    GrayCodeEnumerator(std::size_t k, std::size_t radix);

    const std::vector<std::size_t>& current() const { return digits_; }

    // Advances to the next vector; nullopt once the sequence is exhausted.
    std::optional<Step> next();

private:
    std::size_t radix_;
    std::vector<std::size_t> digits_;
    std::vector<int> direction_;
    bool exhausted_ = false;
};

}  // namespace dynwild
