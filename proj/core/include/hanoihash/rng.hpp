/**
 * Copyright 2026 The hanoihash Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once
/**
 * @file rng.hpp
 * @brief Seeded xoshiro256** with per-trial substreams.
 *
 * A campaign draws trial t from substream(seed, t), so results do not depend
 * on how trials are distributed across workers.
 */

#include <cstdint>
#include <limits>

namespace hanoihash {

/// SplitMix64 finalizer; also used to expand seeds.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed) noexcept;

    /// Independent stream for trial `index` of a campaign seeded with `seed`.
    static Rng substream(std::uint64_t seed, std::uint64_t index) noexcept;

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept;

    /// Uniform integer in [0, bound).  bound must be > 0.
    std::uint64_t below(std::uint64_t bound) noexcept;

    /// Fair coin.
    std::uint8_t bit() noexcept { return static_cast<std::uint8_t>((*this)() >> 63); }

private:
    std::uint64_t s_[4];
};

}  // namespace hanoihash
