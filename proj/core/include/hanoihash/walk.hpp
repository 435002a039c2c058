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
 * @file walk.hpp
 * @brief Message-controlled discrete-time quantum walk on HN4.
 *
 * One step is U_b = S_b (C_b (x) I): the 4x4 Grover coin C_b acts on every
 * vertex's coin block, then the bit-selected shift permutation moves the
 * amplitudes (flip-flop S_0 for bit 0, moving S_1 for bit 1).
 *
 * All arithmetic is binary64 and sequential inside a walk, so identical
 * inputs give bitwise-identical outputs.
 */

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hanoihash/topology.hpp"

namespace hanoihash {

using Amplitude = std::complex<double>;

/// A message as a sequence of 0/1 values, in written (left-to-right) order.
using BitString = std::vector<std::uint8_t>;

/// Weights of the Grover coin state on the long-range ports:
/// psi ~ |0> + |1> + sqrt(l)|2> + sqrt(l~)|3>.
struct CoinSpec {
    double forward = 1.0;   // l, weight on port 2
    double backward = 1.0;  // l~, weight on port 3

    friend bool operator==(const CoinSpec&, const CoinSpec&) = default;
};

/// How the coin state is normalized.  `Unit` divides by sqrt(2 + l + l~) and
/// yields a unitary coin.  `Literal` divides by (2 + l + l~) as the formula is
/// sometimes printed; it is not unitary and exists only for digest
/// compatibility experiments.
enum class Normalization { Unit, Literal };

/// Row-major real 4x4 matrix.
class CoinMatrix {
public:
    constexpr CoinMatrix() = default;
    explicit constexpr CoinMatrix(const std::array<double, 16>& entries) : m_(entries) {}

    constexpr double operator()(int row, int col) const { return m_[row * 4 + col]; }
    constexpr double& operator()(int row, int col) { return m_[row * 4 + col]; }
    const std::array<double, 16>& entries() const noexcept { return m_; }

    static CoinMatrix identity();
    friend CoinMatrix operator*(const CoinMatrix& a, const CoinMatrix& b);

private:
    std::array<double, 16> m_{};
};

/// 2 psi psi^T - I for the coin state described by `spec`.
CoinMatrix grover_coin(const CoinSpec& spec, Normalization norm = Normalization::Unit);

enum class ControlMode { SingleBit, TwoBit };

struct WalkParams {
    CoinSpec coin0{0.01, 1.0};  // C_0, bit 0
    CoinSpec coin1{0.1, 0.01};  // C_1, bit 1
    ControlMode mode = ControlMode::SingleBit;
    /// Two-bit mode coins C_00, C_01, C_10, C_11 (index 2*i + j for C_ij).
    std::array<CoinSpec, 4> pair_coins{{{0.01, 1.0}, {1.0, 0.01}, {0.01, 0.1}, {0.1, 0.01}}};
    Normalization normalization = Normalization::Unit;

    friend bool operator==(const WalkParams&, const WalkParams&) = default;
};

/// Amplitudes over composite index c * N_v + v.
class WalkState {
public:
    WalkState() = default;
    explicit WalkState(std::size_t vertex_count)
        : vertex_count_(vertex_count), amps_(kCoinDim * vertex_count) {}

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    std::size_t size() const noexcept { return amps_.size(); }

    Amplitude& at(int coin, std::size_t vertex) { return amps_[coin * vertex_count_ + vertex]; }
    const Amplitude& at(int coin, std::size_t vertex) const {
        return amps_[coin * vertex_count_ + vertex];
    }
    std::span<Amplitude> amplitudes() noexcept { return amps_; }
    std::span<const Amplitude> amplitudes() const noexcept { return amps_; }

    double norm() const;

    friend bool operator==(const WalkState&, const WalkState&) = default;

private:
    std::size_t vertex_count_ = 0;
    std::vector<Amplitude> amps_;
};

/// 1/2 sum_c |c> (x) |label 0>.
WalkState initial_state(const Topology& topology);

/// out = S_shift (coin (x) I) in.  `out` is resized as needed and must not alias `in`.
void apply_step(const Topology& topology, const CoinMatrix& coin, int shift_bit,
                const WalkState& in, WalkState& out);

/// One operator of an evolution schedule: which shift and which prebuilt coin.
struct WalkOp {
    int shift = 0;
    int coin = 0;  // 0/1 in single-bit mode, 2*i + j (C_ij) in two-bit mode

    friend bool operator==(const WalkOp&, const WalkOp&) = default;
};

/// Time-ordered operator schedule for a message.
///
/// Single-bit: bit b gives (S_b, C_b), consumed left to right as written.
/// Two-bit: odd-length messages are left-padded with one 0; each written pair
/// "a c" (a first) gives U_ca = (S_c, C_ca).  '110100' -> U_11, U_10, U_00.
std::vector<WalkOp> walk_schedule(std::span<const std::uint8_t> bits, ControlMode mode);

/// A topology plus prebuilt coins.  Immutable after construction.
class QuantumWalk {
public:
    QuantumWalk(int levels, const WalkParams& params);
    QuantumWalk(Topology topology, const WalkParams& params);

    const Topology& topology() const noexcept { return topology_; }
    const WalkParams& params() const noexcept { return params_; }
    const CoinMatrix& coin(const WalkOp& op) const;

    WalkState initial_state() const { return hanoihash::initial_state(topology_); }

    /// One single-bit-mode step U_bit.
    WalkState step(const WalkState& state, int bit) const;

    /// Applies the message schedule to the initial state.  Throws DomainError
    /// on an empty message or a non-0/1 entry.
    WalkState evolve(std::span<const std::uint8_t> bits) const;

private:
    Topology topology_;
    WalkParams params_;
    std::array<CoinMatrix, 2> single_coins_;
    std::array<CoinMatrix, 4> pair_coins_;
};

/// P(v) = sum_c |amplitude(c, v)|^2, indexed by vertex label.
std::vector<double> vertex_probabilities(const WalkState& state);

enum class BaselineCoin { Hadamard, Grover };

/// Plain coined walk on the 2^n-cycle with a flip-flop shift, started from
/// (|0> + i|1>)/sqrt(2) at vertex 0.  Returns P(x) after `steps` steps.
std::vector<double> cycle_walk_baseline(int levels, std::size_t steps,
                                        BaselineCoin coin = BaselineCoin::Hadamard);

}  // namespace hanoihash
