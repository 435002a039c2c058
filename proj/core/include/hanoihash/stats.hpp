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
 * @file stats.hpp
 * @brief Statistical evaluation campaigns for the walk hash.
 *
 * Every randomized campaign is driven by a 64-bit seed; trial t uses
 * Rng::substream(seed, t) and results are reduced in trial order, so a report
 * is identical for any worker count.
 *
 * Campaign pairs are (random message of `message_bits` bits, same message with
 * one uniformly chosen bit flipped).
 */

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hanoihash/hash.hpp"
#include "hanoihash/rng.hpp"

namespace hanoihash {

enum class PerturbKind { FlipOneToZero, FlipZeroToOne, InsertBit, DeleteBit };

/// Applies one edit at a uniformly random valid position.  InsertBit also
/// draws the inserted value.  Throws DomainError on an empty message or when
/// no position qualifies (e.g. FlipOneToZero on an all-zero message).
BitString perturb(std::span<const std::uint8_t> bits, PerturbKind kind, Rng& rng);

/// Number of differing bit positions.  Throws DomainError if lengths differ.
std::size_t hamming(const Digest& a, const Digest& b);

/// omega: number of word positions holding the same value.
std::size_t matching_words(const Digest& a, const Digest& b);

struct SensitivityRow {
    std::string label;  // "m1" .. "m5"
    BitString message;
    Digest digest;
};

struct SensitivityReport {
    std::uint64_t seed = 0;
    std::vector<SensitivityRow> rows;
};

/// m1, then m2 = flip a 1 to 0, m3 = flip a 0 to 1, m4 = insert a bit,
/// m5 = delete a bit (all edits of m1), each hashed.
SensitivityReport sensitivity_suite(std::span<const std::uint8_t> m1, const HanoiHash& hasher,
                                    std::uint64_t seed);

struct CampaignConfig {
    std::size_t trials = 2000;       // N
    std::size_t message_bits = 24;   // 1.5 N_v at the default N_v = 16
    std::uint64_t seed = 0;
    HashParams params{};
    unsigned threads = 1;            // 0 = hardware concurrency

    /// Throws DomainError if trials < min_trials or message_bits == 0.
    void validate(std::size_t min_trials = 1) const;
};

struct MessagePair {
    BitString first;
    BitString second;
};

/// The pair used by trial `trial` of a campaign.
MessagePair campaign_pair(const CampaignConfig& config, std::size_t trial);

struct DiffusionReport {
    std::size_t trials = 0;        // N
    std::size_t digest_bits = 0;   // L
    std::size_t b_min = 0;
    std::size_t b_max = 0;
    double b_mean = 0.0;           // B-bar
    double p = 0.0;                // B-bar / L
    double delta_b = 0.0;          // sample standard deviation of B_i
    double delta_p = 0.0;          // sample standard deviation of B_i / L
    std::vector<std::size_t> distances;  // B_i per trial
};

/// Aggregates per-trial Hamming distances.  Needs at least two samples.
DiffusionReport summarize_diffusion(std::vector<std::size_t> distances, std::size_t digest_bits);
DiffusionReport diffusion_test(const CampaignConfig& config);

struct UniformityReport {
    std::size_t trials = 0;
    std::size_t digest_bits = 0;
    std::vector<std::size_t> flipped;  // T_i
    std::vector<std::size_t> same;     // T~_i
    double mean = 0.0;                 // T-bar
    double deviation = 0.0;            // |T-bar - N/2|
    double delta_t = 0.0;              // sample standard deviation of T_i over positions
};

UniformityReport summarize_uniformity(std::vector<std::size_t> flipped, std::vector<std::size_t> same,
                                      std::size_t trials);
UniformityReport uniform_distribution_test(const CampaignConfig& config);

struct CollisionReport {
    std::size_t trials = 0;
    std::size_t vertex_count = 0;
    int word_bits = 0;
    std::vector<std::size_t> observed;   // W_E(omega), omega = 0..N_v
    std::vector<double> theoretical;     // W_T(omega)
    std::vector<std::size_t> matches;    // omega per trial
    double collision_rate = 0.0;         // 1 - W_E(0)/N
    double theoretical_rate = 0.0;       // 1 - (1 - 2^-k)^N_v
};

CollisionReport collision_test(const CampaignConfig& config);

/// W_T(omega) = N C(N_v, omega) (2^-k)^omega (1 - 2^-k)^(N_v - omega).
std::vector<double> theoretical_collision(std::size_t trials, std::size_t vertex_count, int word_bits);

/// Integer view of W_T, truncating toward zero (the convention of the
/// published comparison table: 9997.56 -> 9997).
std::vector<std::uint64_t> truncated_counts(std::span<const double> histogram);

/// 1 - (1 - 2^-k)^N_v.
double theoretical_collision_rate(std::size_t vertex_count, int word_bits);

struct ScalingPoint {
    int levels = 0;
    std::size_t vertex_count = 0;
    std::size_t message_bits = 0;   // round(1.5 N_v)
    double experimental_rate = 0.0;
    double theoretical_rate = 0.0;
    std::vector<std::size_t> observed;
};

/// Runs collision_test at each network size with 1.5 N_v-bit messages; all
/// other settings come from `base`.
std::vector<ScalingPoint> scaling_experiment(std::span<const int> levels, const CampaignConfig& base);

/// 2^(L/2) as an exact decimal string.  Throws DomainError for odd L or L < 2.
std::string birthday_bound(std::size_t digest_bits);

}  // namespace hanoihash
