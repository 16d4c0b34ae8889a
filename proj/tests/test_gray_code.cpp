#include <gtest/gtest.h>

#include <set>

#include "dynwild/gray_code.hpp"

using dynwild::GrayCodeEnumerator;

namespace {

std::vector<std::vector<std::size_t>> sequence(std::size_t k, std::size_t radix) {
    GrayCodeEnumerator gray(k, radix);
    std::vector<std::vector<std::size_t>> out{gray.current()};
    while (auto step = gray.next()) {
        EXPECT_EQ(gray.current()[step->coordinate], step->value);
        out.push_back(gray.current());
    }
    return out;
}

}  // namespace

TEST(GrayCode, TwoByThreeTable) {
    // a=0, b=1, c=2
    const std::vector<std::vector<std::size_t>> expected{{0, 0}, {0, 1}, {0, 2}, {1, 2}, {1, 1},
                                                         {1, 0}, {2, 0}, {2, 1}, {2, 2}};
    EXPECT_EQ(sequence(2, 3), expected);
}

TEST(GrayCode, SingleCoordinateSweep) {
    EXPECT_EQ(sequence(1, 4), (std::vector<std::vector<std::size_t>>{{0}, {1}, {2}, {3}}));
}

TEST(GrayCode, EmptyVector) {
    EXPECT_EQ(sequence(0, 3), (std::vector<std::vector<std::size_t>>{{}}));
}

TEST(GrayCode, RejectsZeroRadix) { EXPECT_THROW(GrayCodeEnumerator(2, 0), std::invalid_argument); }

TEST(GrayCode, CoversProductOnceWithUnitSteps) {
    for (std::size_t k = 0; k <= 4; ++k) {
        for (std::size_t radix = 1; radix <= 4; ++radix) {
            const auto seq = sequence(k, radix);
            std::size_t total = 1;
            for (std::size_t i = 0; i < k; ++i) total *= radix;
            ASSERT_EQ(seq.size(), total);
            ASSERT_EQ(std::set<std::vector<std::size_t>>(seq.begin(), seq.end()).size(), total);
            for (std::size_t s = 1; s < seq.size(); ++s) {
                std::size_t differing = 0;
                for (std::size_t c = 0; c < k; ++c) differing += seq[s][c] != seq[s - 1][c];
                ASSERT_EQ(differing, 1u);
            }
        }
    }
}
