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
 * @file hash.hpp
 * @brief Digest pipeline: message bits -> walk -> sqrt(P) quantization.
 *
 * Word v of the digest is floor(sqrt(P(v)) * 10^l) mod 2^k, words in vertex
 * label order 0..N_v-1 (label 0 is x = 2^n).  Bits of the digest are read
 * most-significant-first within each word.
 */

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hanoihash/walk.hpp"

namespace hanoihash {

enum class Rounding { Floor, HalfEven };

struct HashParams {
    int levels = 4;        // n, N_v = 2^n
    int precision = 5;     // l
    int word_bits = 16;    // k
    WalkParams walk{};
    Rounding rounding = Rounding::Floor;

    std::size_t vertex_count() const { return std::size_t{1} << levels; }
    std::size_t digest_bits() const { return vertex_count() * static_cast<std::size_t>(word_bits); }

    /// Throws InvalidParams unless 10^l >= 2^k and every field is in range.
    void validate() const;

    friend bool operator==(const HashParams&, const HashParams&) = default;
};

inline constexpr int kMaxPrecision = 15;
inline constexpr int kMaxWordBits = 32;

class Digest {
public:
    Digest() = default;
    Digest(std::vector<std::uint32_t> words, int word_bits);

    const std::vector<std::uint32_t>& words() const noexcept { return words_; }
    int word_bits() const noexcept { return word_bits_; }
    std::size_t bit_length() const noexcept { return words_.size() * static_cast<std::size_t>(word_bits_); }

    /// Bit i of the concatenation, MSB-first within each word.
    bool bit(std::size_t index) const;

    friend bool operator==(const Digest&, const Digest&) = default;

private:
    std::vector<std::uint32_t> words_;
    int word_bits_ = 16;
};

/// Each byte expands to 8 bits, most-significant first.
BitString message_to_bits(std::span<const std::uint8_t> bytes);
BitString message_to_bits(std::string_view bytes);

/// Parses a '0'/'1' literal; ASCII whitespace is skipped.  Throws DomainError
/// on any other character.
BitString parse_bit_literal(std::string_view text);
std::string bits_to_string(std::span<const std::uint8_t> bits);

/// floor(magnitude * 10^precision) mod 2^word_bits (or round-half-even).
std::uint32_t quantize(double magnitude, int precision, int word_bits,
                       Rounding rounding = Rounding::Floor);

/// Reusable hasher: builds the topology and coins once.
class HanoiHash {
public:
    explicit HanoiHash(const HashParams& params = {});

    const HashParams& params() const noexcept { return params_; }
    const QuantumWalk& walk() const noexcept { return walk_; }

    /// Throws DomainError on an empty message.
    Digest digest(std::span<const std::uint8_t> bits) const;
    std::vector<double> probabilities(std::span<const std::uint8_t> bits) const;

private:
    HashParams params_;
    QuantumWalk walk_;
};

Digest digest(std::span<const std::uint8_t> bits, const HashParams& params = {});

/// ceil(k/4) uppercase hex digits per word, space separated.
std::string format_hex(const Digest& d);
/// All bits concatenated, no separators.
std::string format_binary(const Digest& d);
/// Decimal words, space separated.
std::string format_decimal(const Digest& d);

/// Inverse of format_hex.  Throws DomainError on malformed input.
Digest parse_hex(std::string_view text, int word_bits);

}  // namespace hanoihash
