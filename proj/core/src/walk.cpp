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

#include "hanoihash/walk.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "hanoihash/error.hpp"

namespace hanoihash {

CoinMatrix CoinMatrix::identity() {
    CoinMatrix id;
    for (int i = 0; i < 4; ++i) id(i, i) = 1.0;
    return id;
}

CoinMatrix operator*(const CoinMatrix& a, const CoinMatrix& b) {
    CoinMatrix out;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            double acc = 0.0;
            for (int k = 0; k < 4; ++k) acc += a(r, k) * b(k, c);
            out(r, c) = acc;
        }
    }
    return out;
}

CoinMatrix grover_coin(const CoinSpec& spec, Normalization norm) {
    if (!(spec.forward >= 0.0) || !(spec.backward >= 0.0)) {
        throw InvalidParams("coin weights must be non-negative");
    }
    const double total = 2.0 + spec.forward + spec.backward;
    const double scale = norm == Normalization::Unit ? 1.0 / std::sqrt(total) : 1.0 / total;
    const std::array<double, 4> psi{scale, scale, std::sqrt(spec.forward) * scale,
                                    std::sqrt(spec.backward) * scale};
    CoinMatrix c;
    for (int r = 0; r < 4; ++r) {
        for (int col = 0; col < 4; ++col) {
            c(r, col) = 2.0 * psi[r] * psi[col] - (r == col ? 1.0 : 0.0);
        }
    }
    return c;
}

double WalkState::norm() const {
    double sum = 0.0;
    for (const auto& a : amps_) sum += std::norm(a);
    return std::sqrt(sum);
}

WalkState initial_state(const Topology& topology) {
    WalkState state(topology.vertex_count());
    for (int c = 0; c < kCoinDim; ++c) state.at(c, 0) = Amplitude{0.5, 0.0};
    return state;
}

void apply_step(const Topology& topology, const CoinMatrix& coin, int shift_bit,
                const WalkState& in, WalkState& out) {
    const std::size_t nv = topology.vertex_count();
    if (out.vertex_count() != nv) out = WalkState(nv);

    const auto& perm = topology.shift(shift_bit);
    const auto src = in.amplitudes();
    auto dst = out.amplitudes();
    const auto& m = coin.entries();

    for (std::size_t v = 0; v < nv; ++v) {
        const Amplitude a0 = src[v];
        const Amplitude a1 = src[nv + v];
        const Amplitude a2 = src[2 * nv + v];
        const Amplitude a3 = src[3 * nv + v];
        for (int c = 0; c < kCoinDim; ++c) {
            const double* row = &m[c * 4];
            dst[perm[c * nv + v]] = row[0] * a0 + row[1] * a1 + row[2] * a2 + row[3] * a3;
        }
    }
}

std::vector<WalkOp> walk_schedule(std::span<const std::uint8_t> bits, ControlMode mode) {
    if (bits.empty()) throw DomainError("message must contain at least one bit");
    for (auto b : bits) {
        if (b > 1) throw DomainError("message bits must be 0 or 1");
    }

    std::vector<WalkOp> ops;
    if (mode == ControlMode::SingleBit) {
        ops.reserve(bits.size());
        for (auto b : bits) ops.push_back({b, b});
        return ops;
    }

    BitString padded;
    if (bits.size() % 2 != 0) padded.push_back(0);
    padded.insert(padded.end(), bits.begin(), bits.end());
    ops.reserve(padded.size() / 2);
    for (std::size_t t = 0; t < padded.size(); t += 2) {
        const int high = padded[t];     // b_{2u+1}
        const int low = padded[t + 1];  // b_{2u}
        ops.push_back({low, 2 * low + high});
    }
    return ops;
}

QuantumWalk::QuantumWalk(int levels, const WalkParams& params)
    : QuantumWalk(Topology(levels), params) {}

QuantumWalk::QuantumWalk(Topology topology, const WalkParams& params)
    : topology_(std::move(topology)), params_(params) {
    single_coins_ = {grover_coin(params.coin0, params.normalization),
                     grover_coin(params.coin1, params.normalization)};
    for (std::size_t i = 0; i < pair_coins_.size(); ++i) {
        pair_coins_[i] = grover_coin(params.pair_coins[i], params.normalization);
    }
}

const CoinMatrix& QuantumWalk::coin(const WalkOp& op) const {
    return params_.mode == ControlMode::SingleBit ? single_coins_.at(op.coin)
                                                  : pair_coins_.at(op.coin);
}

WalkState QuantumWalk::step(const WalkState& state, int bit) const {
    if (bit != 0 && bit != 1) throw DomainError("bit must be 0 or 1");
    WalkState out(topology_.vertex_count());
    apply_step(topology_, single_coins_[bit], bit, state, out);
    return out;
}

WalkState QuantumWalk::evolve(std::span<const std::uint8_t> bits) const {
    const auto ops = walk_schedule(bits, params_.mode);
    WalkState cur = initial_state();
    WalkState next(topology_.vertex_count());
    for (const auto& op : ops) {
        apply_step(topology_, coin(op), op.shift, cur, next);
        std::swap(cur, next);
    }
    return cur;
}

std::vector<double> vertex_probabilities(const WalkState& state) {
    std::vector<double> p(state.vertex_count(), 0.0);
    for (int c = 0; c < kCoinDim; ++c) {
        for (std::size_t v = 0; v < p.size(); ++v) p[v] += std::norm(state.at(c, v));
    }
    return p;
}

std::vector<double> cycle_walk_baseline(int levels, std::size_t steps, BaselineCoin coin) {
    if (levels < 1 || levels > kMaxLevels) {
        throw DomainError("cycle baseline needs 1 <= n <= " + std::to_string(kMaxLevels));
    }
    const std::size_t nv = std::size_t{1} << levels;
    const double h = 1.0 / std::sqrt(2.0);
    // Rows of the 2x2 coin.
    const std::array<double, 4> c = coin == BaselineCoin::Hadamard
                                        ? std::array<double, 4>{h, h, h, -h}
                                        : std::array<double, 4>{0.0, 1.0, 1.0, 0.0};

    std::vector<Amplitude> up(nv), down(nv), next_up(nv), next_down(nv);
    up[0] = Amplitude{h, 0.0};
    down[0] = Amplitude{0.0, h};

    for (std::size_t t = 0; t < steps; ++t) {
        std::fill(next_up.begin(), next_up.end(), Amplitude{});
        std::fill(next_down.begin(), next_down.end(), Amplitude{});
        for (std::size_t x = 0; x < nv; ++x) {
            const Amplitude a = c[0] * up[x] + c[1] * down[x];
            const Amplitude b = c[2] * up[x] + c[3] * down[x];
            // Flip-flop: coin 0 moves to x+1 arriving as coin 1, coin 1 to x-1 as coin 0.
            next_down[(x + 1) % nv] += a;
            next_up[(x + nv - 1) % nv] += b;
        }
        std::swap(up, next_up);
        std::swap(down, next_down);
    }

    std::vector<double> p(nv);
    for (std::size_t x = 0; x < nv; ++x) p[x] = std::norm(up[x]) + std::norm(down[x]);
    return p;
}

}  // namespace hanoihash
