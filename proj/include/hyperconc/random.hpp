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

// Counter-based random streams (Philox4x32-10, Salmon et al., SC'11).
//
// Stream construction, fixed across platforms:
//   key     = (lo32(master_seed), hi32(master_seed))
//   counter = (lo32(block), hi32(block), lo32(stream_id), hi32(stream_id))
// where stream_id is the trial index and block counts 128-bit output blocks
// drawn so far. Each block yields two doubles, each built from 53 bits of
// two consecutive 32-bit words.

#ifndef HYPERCONC_RANDOM_HPP_
#define HYPERCONC_RANDOM_HPP_

#include <array>
#include <cstdint>

namespace hyperconc {

using PhiloxBlock = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

/// Ten-round Philox4x32 bijection.
PhiloxBlock philox4x32_10(PhiloxBlock counter, PhiloxKey key) noexcept;

class RandomStream {
   public:
    RandomStream(std::uint64_t master_seed, std::uint64_t stream_id) noexcept;

    /// Uniform on [0, 1) with 53 bits of resolution.
    double uniform() noexcept;

    std::uint64_t stream_id() const noexcept { return stream_id_; }
    std::uint64_t draws() const noexcept { return draws_; }

   private:
    PhiloxKey key_;
    std::uint64_t stream_id_;
    std::uint64_t block_ = 0;
    std::uint64_t draws_ = 0;
    PhiloxBlock buffer_{};
    int buffered_ = 0;
};

}  // namespace hyperconc

#endif  // HYPERCONC_RANDOM_HPP_
