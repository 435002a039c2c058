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

#include "hanoihash/topology.hpp"

#include <bit>
#include <string>

#include "hanoihash/error.hpp"

namespace hanoihash {

namespace {

void check_levels(int levels) {
    if (levels < kMinLevels || levels > kMaxLevels) {
        throw DomainError("level count n=" + std::to_string(levels) + " outside [" +
                          std::to_string(kMinLevels) + ", " + std::to_string(kMaxLevels) + "]");
    }
}

std::size_t checked_vertex_count(int levels) {
    check_levels(levels);
    return std::size_t{1} << levels;
}

}  // namespace

std::uint64_t max_offset(int level, int levels) {
    check_levels(levels);
    if (level < 0 || level > levels) {
        throw DomainError("level i=" + std::to_string(level) + " outside [0, n]");
    }
    // floor(2^(n-i-1) - 1/2): 2^(n-i-1) - 1 for i < n, and 0 for i = n.
    if (level == levels) return 0;
    return (std::uint64_t{1} << (levels - level - 1)) - 1;
}

LevelIndex decompose(std::uint64_t vertex_value, int levels) {
    check_levels(levels);
    const std::uint64_t count = std::uint64_t{1} << levels;
    if (vertex_value < 1 || vertex_value > count) {
        throw DomainError("vertex value " + std::to_string(vertex_value) + " outside [1, 2^n]");
    }
    const int level = std::countr_zero(vertex_value);
    const std::uint64_t odd = vertex_value >> level;
    return LevelIndex{level, (odd - 1) / 2};
}

std::uint64_t compose(int level, std::uint64_t offset, int levels) {
    const std::uint64_t jmax = max_offset(level, levels);
    if (offset > jmax) {
        throw DomainError("offset j=" + std::to_string(offset) + " exceeds j_max=" +
                          std::to_string(jmax) + " at level " + std::to_string(level));
    }
    return (std::uint64_t{1} << level) * (2 * offset + 1);
}

Topology::Topology(int levels)
    : levels_(levels), vertex_count_(checked_vertex_count(levels)) {
    const auto nv = static_cast<std::uint32_t>(vertex_count_);
    ports_.resize(vertex_count_);
    self_loops_ = {label_of(compose(levels - 1, 0, levels)), label_of(compose(levels, 0, levels))};

    for (std::uint32_t v = 0; v < nv; ++v) {
        auto& p = ports_[v];
        p[0] = (v + 1) % nv;
        p[1] = (v + nv - 1) % nv;

        const LevelIndex idx = level_of(v);
        if (idx.level >= levels - 1) {
            p[2] = v;
            p[3] = v;
            continue;
        }
        const std::uint64_t size = max_offset(idx.level, levels) + 1;
        // Only levels n-1 and n are singletons for n >= 2.
        if (size < 2) throw std::logic_error("singleton level below n-1");
        p[2] = label_of(LevelIndex{idx.level, (idx.offset + 1) % size});
        p[3] = label_of(LevelIndex{idx.level, (idx.offset + size - 1) % size});
    }

    flipflop_.resize(state_dim());
    moving_.resize(state_dim());
    for (std::uint32_t v = 0; v < nv; ++v) {
        const auto& p = ports_[v];
        const bool loop = (v == self_loops_[0] || v == self_loops_[1]);

        // Cycle edges: flip-flop swaps the coin to point back along the edge.
        flipflop_[composite(0, v)] = composite(1, p[0]);
        flipflop_[composite(1, v)] = composite(0, p[1]);
        moving_[composite(0, v)] = composite(0, p[0]);
        moving_[composite(1, v)] = composite(1, p[1]);

        if (loop) {
            for (int c : {2, 3}) {
                flipflop_[composite(c, v)] = composite(c, v);
                moving_[composite(c, v)] = composite(c, v);
            }
        } else {
            flipflop_[composite(2, v)] = composite(3, p[2]);
            flipflop_[composite(3, v)] = composite(2, p[3]);
            moving_[composite(2, v)] = composite(2, p[2]);
            moving_[composite(3, v)] = composite(3, p[3]);
        }
    }
}

std::uint64_t Topology::value_of(std::uint32_t label) const noexcept {
    return label == 0 ? vertex_count_ : label;
}

std::uint32_t Topology::label_of(std::uint64_t vertex_value) const {
    if (vertex_value < 1 || vertex_value > vertex_count_) {
        throw DomainError("vertex value " + std::to_string(vertex_value) + " outside [1, 2^n]");
    }
    return static_cast<std::uint32_t>(vertex_value % vertex_count_);
}

bool is_permutation(const std::vector<std::uint32_t>& map) {
    std::vector<bool> seen(map.size(), false);
    for (std::uint32_t dst : map) {
        if (dst >= map.size() || seen[dst]) return false;
        seen[dst] = true;
    }
    return true;
}

}  // namespace hanoihash
