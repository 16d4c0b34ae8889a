#include "dynwild/gray_code.hpp"

#include <stdexcept>

namespace dynwild {

GrayCodeEnumerator::GrayCodeEnumerator(std::size_t k, std::size_t radix)
    : radix_(radix), digits_(k, 0), direction_(k, +1) {
    if (radix == 0) throw std::invalid_argument("GrayCodeEnumerator: radix must be positive");
}

std::optional<GrayCodeEnumerator::Step> GrayCodeEnumerator::next() {
    if (exhausted_) return std::nullopt;
    for (std::size_t j = digits_.size(); j-- > 0;) {
        const bool canMove = direction_[j] > 0 ? digits_[j] + 1 < radix_ : digits_[j] > 0;
        if (canMove) {
            digits_[j] = direction_[j] > 0 ? digits_[j] + 1 : digits_[j] - 1;
            return Step{j, digits_[j]};
        }
        // coordinate j sits at its end; it reverses for the next sweep
        direction_[j] = -direction_[j];
    }
    exhausted_ = true;
    return std::nullopt;
}

}  // namespace dynwild
