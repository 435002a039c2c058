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
 * @file topology.hpp
 * @brief Degree-4 Hanoi network (HN4) on 2^n vertices.
 *
 * Vertex values x in 1..2^n decompose uniquely as x = 2^i (2j + 1) with
 * 0 <= i <= n and 0 <= j <= j_max(i) = floor(2^(n-i-1) - 1/2).  Every vertex
 * has four ports: 0/1 are the cycle edges x+1 / x-1, 2/3 are the long-range
 * edges to (i, j+1) / (i, j-1) inside the same level.  Levels n-1 and n hold a
 * single vertex each and carry self-loops on ports 2 and 3.
 *
 * Internally vertices are labelled 0..N_v-1 with label 0 standing for
 * x = 2^n, so cycle arithmetic is plain mod-N_v arithmetic on labels.
 * The long-range j+-1 wraps modulo the level size.
 *
 * Composite (coin, vertex) indices are c * N_v + v, c in 0..3.
 */

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace hanoihash {

inline constexpr int kMinLevels = 2;
inline constexpr int kMaxLevels = 24;
inline constexpr int kCoinDim = 4;

/// Hierarchical coordinates (i, j) of a vertex value x = 2^i (2j + 1).
struct LevelIndex {
    int level = 0;            // i
    std::uint64_t offset = 0; // j

    friend bool operator==(const LevelIndex&, const LevelIndex&) = default;
};

/// Largest valid offset j in level i, floor(2^(n-i-1) - 1/2).
std::uint64_t max_offset(int level, int levels);

/// (i, j) of vertex value x in 1..2^n.  Throws DomainError when out of range.
LevelIndex decompose(std::uint64_t vertex_value, int levels);

/// 2^i (2j + 1).  Throws DomainError when i or j is out of range.
std::uint64_t compose(int level, std::uint64_t offset, int levels);

enum class Port : int { CycleUp = 0, CycleDown = 1, LongForward = 2, LongBackward = 3 };

class Topology {
public:
    /// Builds HN4 for n in [kMinLevels, kMaxLevels].
    explicit Topology(int levels);

    int levels() const noexcept { return levels_; }
    std::size_t vertex_count() const noexcept { return vertex_count_; }
    std::size_t state_dim() const noexcept { return kCoinDim * vertex_count_; }

    /// Label <-> vertex value.  Label 0 is x = 2^n.
    std::uint64_t value_of(std::uint32_t label) const noexcept;
    std::uint32_t label_of(std::uint64_t vertex_value) const;
    LevelIndex level_of(std::uint32_t label) const { return decompose(value_of(label), levels_); }
    std::uint32_t label_of(const LevelIndex& idx) const {
        return label_of(compose(idx.level, idx.offset, levels_));
    }

    /// Destination label reached from `label` through `port`.
    std::uint32_t neighbor(std::uint32_t label, Port port) const noexcept {
        return ports_[label][static_cast<int>(port)];
    }
    std::array<std::uint32_t, 4> ports(std::uint32_t label) const noexcept { return ports_[label]; }

    /// Labels carrying self-loops on ports 2/3: (n-1, 0) then (n, 0).
    std::array<std::uint32_t, 2> self_loop_labels() const noexcept { return self_loops_; }

    /// Forward maps composite -> composite.  Flip-flop is S_0 (used on bit 0),
    /// moving is S_1 (used on bit 1).
    const std::vector<std::uint32_t>& shift_flipflop() const noexcept { return flipflop_; }
    const std::vector<std::uint32_t>& shift_moving() const noexcept { return moving_; }
    const std::vector<std::uint32_t>& shift(int bit) const noexcept {
        return bit == 0 ? flipflop_ : moving_;
    }

    std::uint32_t composite(int coin, std::uint32_t label) const noexcept {
        return static_cast<std::uint32_t>(coin) * static_cast<std::uint32_t>(vertex_count_) + label;
    }

private:
    int levels_;
    std::size_t vertex_count_;
    std::vector<std::array<std::uint32_t, 4>> ports_;
    std::array<std::uint32_t, 2> self_loops_{};
    std::vector<std::uint32_t> flipflop_;
    std::vector<std::uint32_t> moving_;
};

/// True iff `map` is a bijection on {0, ..., map.size()-1}.
bool is_permutation(const std::vector<std::uint32_t>& map);

}  // namespace hanoihash
