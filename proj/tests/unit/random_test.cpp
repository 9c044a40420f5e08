// Copyright 2026 The hyperconc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "hyperconc/random.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>

namespace hyperconc {
namespace {

// Known-answer vectors published with the Random123 library.
TEST(Philox, KnownAnswerZero) {
    const PhiloxBlock out = philox4x32_10({0, 0, 0, 0}, {0, 0});
    EXPECT_EQ(out, (PhiloxBlock{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u}));
}

TEST(Philox, KnownAnswerAllOnes) {
    const PhiloxBlock out =
        philox4x32_10({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu}, {0xffffffffu, 0xffffffffu});
    EXPECT_EQ(out, (PhiloxBlock{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu}));
}

TEST(Philox, KnownAnswerPi) {
    const PhiloxBlock out =
        philox4x32_10({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u}, {0xa4093822u, 0x299f31d0u});
    EXPECT_EQ(out, (PhiloxBlock{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u}));
}

TEST(RandomStream, FirstDrawsComeFromBlockZero) {
    const std::uint64_t seed = 0x0123456789abcdefull;
    const std::uint64_t id = 0xfedcba9876543210ull;
    RandomStream rng(seed, id);
    const PhiloxBlock b0 = philox4x32_10({0, 0, 0x76543210u, 0xfedcba98u}, {0x89abcdefu, 0x01234567u});
    const PhiloxBlock b1 = philox4x32_10({1, 0, 0x76543210u, 0xfedcba98u}, {0x89abcdefu, 0x01234567u});
    const auto expect = [](std::uint32_t hi, std::uint32_t lo) {
        return std::ldexp(static_cast<double>(((std::uint64_t{hi} << 32) | lo) >> 11), -53);
    };
    EXPECT_EQ(rng.uniform(), expect(b0[0], b0[1]));
    EXPECT_EQ(rng.uniform(), expect(b0[2], b0[3]));
    EXPECT_EQ(rng.uniform(), expect(b1[0], b1[1]));
    EXPECT_EQ(rng.draws(), 3u);
    EXPECT_EQ(rng.stream_id(), id);
}

TEST(RandomStream, SameSeedAndStreamRepeat) {
    RandomStream a(42, 7), b(42, 7);
    for (int i = 0; i < 1000; ++i) ASSERT_EQ(a.uniform(), b.uniform());
}

TEST(RandomStream, StreamsAndSeedsDiffer) {
    RandomStream a(42, 7), b(42, 8), c(43, 7);
    int same_b = 0, same_c = 0;
    for (int i = 0; i < 100; ++i) {
        const double x = a.uniform();
        same_b += x == b.uniform();
        same_c += x == c.uniform();
    }
    EXPECT_EQ(same_b, 0);
    EXPECT_EQ(same_c, 0);
}

TEST(RandomStream, UniformMomentsAndRange) {
    RandomStream rng(9, 0);
    const int n = 200000;
    double sum = 0.0, sum2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double u = rng.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        sum += u;
        sum2 += u * u;
    }
    const double mean = sum / n;
    const double var = sum2 / n - mean * mean;
    // 5 sigma on the mean: sqrt(1/12/n) ~ 6.5e-4
    EXPECT_NEAR(mean, 0.5, 5 * 6.5e-4);
    EXPECT_NEAR(var, 1.0 / 12.0, 2e-3);
}

}  // namespace
}  // namespace hyperconc
