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

#include "hanoihash/hash.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <string>
#include <utility>

#include "hanoihash/error.hpp"

namespace hanoihash {

namespace {

double pow10(int exponent) {
    double p = 1.0;
    for (int i = 0; i < exponent; ++i) p *= 10.0;  // exact up to 10^22
    return p;
}

std::uint64_t word_mask(int word_bits) {
    return word_bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << word_bits) - 1;
}

int hex_width(int word_bits) { return (word_bits + 3) / 4; }

const HashParams& validated(const HashParams& params) {
    params.validate();
    return params;
}

void check_coin(const CoinSpec& c, const char* name) {
    if (!std::isfinite(c.forward) || !std::isfinite(c.backward) || c.forward < 0.0 ||
        c.backward < 0.0) {
        throw InvalidParams(std::string("coin ") + name + " weights must be finite and non-negative");
    }
}

}  // namespace

void HashParams::validate() const {
    if (levels < kMinLevels || levels > kMaxLevels) {
        throw InvalidParams("levels must lie in [" + std::to_string(kMinLevels) + ", " +
                            std::to_string(kMaxLevels) + "]");
    }
    if (word_bits < 1 || word_bits > kMaxWordBits) {
        throw InvalidParams("word_bits must lie in [1, " + std::to_string(kMaxWordBits) + "]");
    }
    if (precision < 1 || precision > kMaxPrecision) {
        throw InvalidParams("precision must lie in [1, " + std::to_string(kMaxPrecision) + "]");
    }
    if (pow10(precision) < std::ldexp(1.0, word_bits)) {
        throw InvalidParams("precision too small: need 10^" + std::to_string(precision) +
                            " >= 2^" + std::to_string(word_bits));
    }
    check_coin(walk.coin0, "C0");
    check_coin(walk.coin1, "C1");
    for (const auto& c : walk.pair_coins) check_coin(c, "C_ij");
}

Digest::Digest(std::vector<std::uint32_t> words, int word_bits)
    : words_(std::move(words)), word_bits_(word_bits) {
    if (word_bits < 1 || word_bits > kMaxWordBits) throw DomainError("word width out of range");
    for (auto w : words_) {
        if (w > word_mask(word_bits)) throw DomainError("digest word exceeds 2^k - 1");
    }
}

bool Digest::bit(std::size_t index) const {
    const auto k = static_cast<std::size_t>(word_bits_);
    const std::uint32_t w = words_.at(index / k);
    return (w >> (k - 1 - index % k)) & 1U;
}

BitString message_to_bits(std::span<const std::uint8_t> bytes) {
    BitString bits;
    bits.reserve(bytes.size() * 8);
    for (std::uint8_t byte : bytes) {
        for (int b = 7; b >= 0; --b) bits.push_back((byte >> b) & 1U);
    }
    return bits;
}

BitString message_to_bits(std::string_view bytes) {
    return message_to_bits(std::span<const std::uint8_t>(
        reinterpret_cast<const std::uint8_t*>(bytes.data()), bytes.size()));
}

BitString parse_bit_literal(std::string_view text) {
    BitString bits;
    bits.reserve(text.size());
    for (char ch : text) {
        if (ch == '0' || ch == '1') {
            bits.push_back(static_cast<std::uint8_t>(ch - '0'));
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            throw DomainError(std::string("invalid character '") + ch + "' in bit literal");
        }
    }
    return bits;
}

std::string bits_to_string(std::span<const std::uint8_t> bits) {
    std::string s;
    s.reserve(bits.size());
    for (auto b : bits) s.push_back(b ? '1' : '0');
    return s;
}

std::uint32_t quantize(double magnitude, int precision, int word_bits, Rounding rounding) {
    // sqrt of a summed probability may overshoot 1 by an ulp or two.
    if (!(magnitude >= 0.0) || magnitude > 1.0 + 1e-9) {
        throw DomainError("amplitude magnitude must lie in [0, 1]");
    }
    const double scaled = magnitude * pow10(precision);
    const double integral = rounding == Rounding::Floor ? std::floor(scaled) : std::nearbyint(scaled);
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(integral) & word_mask(word_bits));
}

HanoiHash::HanoiHash(const HashParams& params)
    : params_(validated(params)), walk_(params.levels, params.walk) {}

std::vector<double> HanoiHash::probabilities(std::span<const std::uint8_t> bits) const {
    return vertex_probabilities(walk_.evolve(bits));
}

Digest HanoiHash::digest(std::span<const std::uint8_t> bits) const {
    const auto p = probabilities(bits);
    std::vector<std::uint32_t> words;
    words.reserve(p.size());
    for (double pv : p) {
        words.push_back(quantize(std::sqrt(pv), params_.precision, params_.word_bits, params_.rounding));
    }
    return Digest(std::move(words), params_.word_bits);
}

Digest digest(std::span<const std::uint8_t> bits, const HashParams& params) {
    return HanoiHash(params).digest(bits);
}

std::string format_hex(const Digest& d) {
    static constexpr char kDigits[] = "0123456789ABCDEF";
    const int width = hex_width(d.word_bits());
    std::string out;
    out.reserve(d.words().size() * static_cast<std::size_t>(width + 1));
    for (std::size_t i = 0; i < d.words().size(); ++i) {
        if (i) out.push_back(' ');
        const std::uint32_t w = d.words()[i];
        for (int nib = width - 1; nib >= 0; --nib) out.push_back(kDigits[(w >> (4 * nib)) & 0xF]);
    }
    return out;
}

std::string format_binary(const Digest& d) {
    std::string out;
    out.reserve(d.bit_length());
    for (std::size_t i = 0; i < d.bit_length(); ++i) out.push_back(d.bit(i) ? '1' : '0');
    return out;
}

std::string format_decimal(const Digest& d) {
    std::string out;
    for (std::size_t i = 0; i < d.words().size(); ++i) {
        if (i) out.push_back(' ');
        out += std::to_string(d.words()[i]);
    }
    return out;
}

Digest parse_hex(std::string_view text, int word_bits) {
    if (word_bits < 1 || word_bits > kMaxWordBits) throw DomainError("word width out of range");
    const auto width = static_cast<std::size_t>(hex_width(word_bits));
    std::istringstream in{std::string(text)};
    std::vector<std::uint32_t> words;
    std::string token;
    while (in >> token) {
        if (token.size() != width) throw DomainError("hex word '" + token + "' has wrong width");
        std::uint64_t value = 0;
        for (char ch : token) {
            if (!std::isxdigit(static_cast<unsigned char>(ch))) {
                throw DomainError("invalid hex digit in '" + token + "'");
            }
            const int digit = std::isdigit(static_cast<unsigned char>(ch))
                                  ? ch - '0'
                                  : std::toupper(static_cast<unsigned char>(ch)) - 'A' + 10;
            value = value * 16 + static_cast<std::uint64_t>(digit);
        }
        if (value > word_mask(word_bits)) throw DomainError("hex word '" + token + "' exceeds 2^k - 1");
        words.push_back(static_cast<std::uint32_t>(value));
    }
    return Digest(std::move(words), word_bits);
}

}  // namespace hanoihash
