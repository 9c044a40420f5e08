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

namespace hyperconc {
namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& lo, std::uint32_t& hi) noexcept {
    const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
    lo = static_cast<std::uint32_t>(product);
    hi = static_cast<std::uint32_t>(product >> 32);
}

inline PhiloxBlock round(const PhiloxBlock& c, const PhiloxKey& k) noexcept {
    std::uint32_t lo0, hi0, lo1, hi1;
    mulhilo(kPhiloxM0, c[0], lo0, hi0);
    mulhilo(kPhiloxM1, c[2], lo1, hi1);
    return {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
}

}  // namespace

PhiloxBlock philox4x32_10(PhiloxBlock counter, PhiloxKey key) noexcept {
    for (int r = 0; r < 10; ++r) {
        if (r > 0) {
            key[0] += kPhiloxW0;
            key[1] += kPhiloxW1;
        }
        counter = round(counter, key);
    }
    return counter;
}

RandomStream::RandomStream(std::uint64_t master_seed, std::uint64_t stream_id) noexcept
    : key_{static_cast<std::uint32_t>(master_seed), static_cast<std::uint32_t>(master_seed >> 32)},
      stream_id_(stream_id) {}

double RandomStream::uniform() noexcept {
    if (buffered_ == 0) {
        const PhiloxBlock ctr{static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
                              static_cast<std::uint32_t>(stream_id_),
                              static_cast<std::uint32_t>(stream_id_ >> 32)};
        buffer_ = philox4x32_10(ctr, key_);
        ++block_;
        buffered_ = 2;
    }
    const int base = (2 - buffered_) * 2;
    --buffered_;
    ++draws_;
    const std::uint64_t bits =
        (static_cast<std::uint64_t>(buffer_[base]) << 32 | buffer_[base + 1]) >> 11;
    return static_cast<double>(bits) * 0x1.0p-53;
}

}  // namespace hyperconc
