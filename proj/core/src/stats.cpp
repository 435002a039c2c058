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

#include "hanoihash/stats.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "hanoihash/error.hpp"

namespace hanoihash {

namespace {

unsigned worker_count(unsigned requested, std::size_t trials) {
    unsigned n = requested == 0 ? std::max(1U, std::thread::hardware_concurrency()) : requested;
    return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(trials, 1)));
}

/// Calls fn(trial, worker) for every trial.  Worker w handles trials
/// w, w + W, w + 2W, ...
template <class Fn>
void for_each_trial(std::size_t trials, unsigned workers, Fn&& fn) {
    if (workers <= 1) {
        for (std::size_t t = 0; t < trials; ++t) fn(t, 0U);
        return;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t t = w; t < trials; t += workers) fn(t, w);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

void check_same_shape(const Digest& a, const Digest& b) {
    if (a.word_bits() != b.word_bits() || a.words().size() != b.words().size()) {
        throw DomainError("digests have different lengths");
    }
}

BitString random_message(std::size_t bits, Rng& rng) {
    BitString m(bits);
    for (auto& b : m) b = rng.bit();
    return m;
}

std::vector<std::size_t> positions_with(std::span<const std::uint8_t> bits, std::uint8_t value) {
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == value) pos.push_back(i);
    }
    return pos;
}

double sample_stddev(std::span<const double> xs, double mean) {
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

}  // namespace

BitString perturb(std::span<const std::uint8_t> bits, PerturbKind kind, Rng& rng) {
    if (bits.empty()) throw DomainError("cannot perturb an empty message");
    BitString out(bits.begin(), bits.end());
    switch (kind) {
        case PerturbKind::FlipOneToZero:
        case PerturbKind::FlipZeroToOne: {
            const std::uint8_t from = kind == PerturbKind::FlipOneToZero ? 1 : 0;
            const auto pos = positions_with(bits, from);
            if (pos.empty()) {
                throw DomainError(from ? "message has no 1 bit to clear" : "message has no 0 bit to set");
            }
            out[pos[rng.below(pos.size())]] = static_cast<std::uint8_t>(1 - from);
            break;
        }
        case PerturbKind::InsertBit: {
            const auto at = rng.below(bits.size() + 1);
            out.insert(out.begin() + static_cast<std::ptrdiff_t>(at), rng.bit());
            break;
        }
        case PerturbKind::DeleteBit: {
            const auto at = rng.below(bits.size());
            out.erase(out.begin() + static_cast<std::ptrdiff_t>(at));
            break;
        }
    }
    return out;
}

std::size_t hamming(const Digest& a, const Digest& b) {
    check_same_shape(a, b);
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.words().size(); ++i) {
        d += static_cast<std::size_t>(std::popcount(a.words()[i] ^ b.words()[i]));
    }
    return d;
}

std::size_t matching_words(const Digest& a, const Digest& b) {
    check_same_shape(a, b);
    std::size_t omega = 0;
    for (std::size_t i = 0; i < a.words().size(); ++i) omega += a.words()[i] == b.words()[i];
    return omega;
}

SensitivityReport sensitivity_suite(std::span<const std::uint8_t> m1, const HanoiHash& hasher,
                                    std::uint64_t seed) {
    Rng rng(seed);
    SensitivityReport report;
    report.seed = seed;
    const BitString base(m1.begin(), m1.end());
    const BitString variants[] = {
        base,
        perturb(base, PerturbKind::FlipOneToZero, rng),
        perturb(base, PerturbKind::FlipZeroToOne, rng),
        perturb(base, PerturbKind::InsertBit, rng),
        perturb(base, PerturbKind::DeleteBit, rng),
    };
    for (std::size_t i = 0; i < std::size(variants); ++i) {
        report.rows.push_back({"m" + std::to_string(i + 1), variants[i], hasher.digest(variants[i])});
    }
    return report;
}

void CampaignConfig::validate(std::size_t min_trials) const {
    if (trials < min_trials) {
        throw DomainError("campaign needs at least " + std::to_string(min_trials) + " trials");
    }
    if (message_bits == 0) throw DomainError("campaign messages need at least one bit");
    params.validate();
}

MessagePair campaign_pair(const CampaignConfig& config, std::size_t trial) {
    Rng rng = Rng::substream(config.seed, trial);
    MessagePair pair;
    pair.first = random_message(config.message_bits, rng);
    pair.second = pair.first;
    auto& b = pair.second[rng.below(config.message_bits)];
    b = static_cast<std::uint8_t>(1 - b);
    return pair;
}

DiffusionReport summarize_diffusion(std::vector<std::size_t> distances, std::size_t digest_bits) {
    if (distances.size() < 2) throw DomainError("diffusion statistics need at least two trials");
    if (digest_bits == 0) throw DomainError("digest length must be positive");
    DiffusionReport r;
    r.trials = distances.size();
    r.digest_bits = digest_bits;
    const auto [lo, hi] = std::minmax_element(distances.begin(), distances.end());
    r.b_min = *lo;
    r.b_max = *hi;

    std::vector<double> b(distances.begin(), distances.end());
    const double n = static_cast<double>(r.trials);
    const double l = static_cast<double>(digest_bits);
    r.b_mean = std::accumulate(b.begin(), b.end(), 0.0) / n;
    r.p = r.b_mean / l;
    r.delta_b = sample_stddev(b, r.b_mean);
    for (auto& x : b) x /= l;
    r.delta_p = sample_stddev(b, r.p);
    r.distances = std::move(distances);
    return r;
}

DiffusionReport diffusion_test(const CampaignConfig& config) {
    config.validate(2);
    const HanoiHash hasher(config.params);
    std::vector<std::size_t> distances(config.trials);
    for_each_trial(config.trials, worker_count(config.threads, config.trials),
                   [&](std::size_t t, unsigned) {
                       const auto pair = campaign_pair(config, t);
                       distances[t] = hamming(hasher.digest(pair.first), hasher.digest(pair.second));
                   });
    return summarize_diffusion(std::move(distances), config.params.digest_bits());
}

UniformityReport summarize_uniformity(std::vector<std::size_t> flipped, std::vector<std::size_t> same,
                                      std::size_t trials) {
    if (flipped.size() < 2 || flipped.size() != same.size()) {
        throw DomainError("uniformity statistics need matching per-position counts for L >= 2");
    }
    UniformityReport r;
    r.trials = trials;
    r.digest_bits = flipped.size();
    std::vector<double> t(flipped.begin(), flipped.end());
    r.mean = std::accumulate(t.begin(), t.end(), 0.0) / static_cast<double>(t.size());
    r.deviation = std::abs(r.mean - static_cast<double>(trials) / 2.0);
    r.delta_t = sample_stddev(t, r.mean);
    r.flipped = std::move(flipped);
    r.same = std::move(same);
    return r;
}

UniformityReport uniform_distribution_test(const CampaignConfig& config) {
    config.validate(2);
    const HanoiHash hasher(config.params);
    const std::size_t bits = config.params.digest_bits();
    const unsigned workers = worker_count(config.threads, config.trials);

    // Integer partial sums per worker; the total is order independent.
    std::vector<std::vector<std::size_t>> partial(workers, std::vector<std::size_t>(bits, 0));
    for_each_trial(config.trials, workers, [&](std::size_t t, unsigned w) {
        const auto pair = campaign_pair(config, t);
        const Digest a = hasher.digest(pair.first);
        const Digest b = hasher.digest(pair.second);
        auto& counts = partial[w];
        for (std::size_t i = 0; i < bits; ++i) counts[i] += a.bit(i) != b.bit(i);
    });

    std::vector<std::size_t> flipped(bits, 0), same(bits, 0);
    for (const auto& counts : partial) {
        for (std::size_t i = 0; i < bits; ++i) flipped[i] += counts[i];
    }
    for (std::size_t i = 0; i < bits; ++i) same[i] = config.trials - flipped[i];
    return summarize_uniformity(std::move(flipped), std::move(same), config.trials);
}

CollisionReport collision_test(const CampaignConfig& config) {
    config.validate(1);
    const HanoiHash hasher(config.params);
    const std::size_t nv = config.params.vertex_count();

    CollisionReport r;
    r.trials = config.trials;
    r.vertex_count = nv;
    r.word_bits = config.params.word_bits;
    r.matches.assign(config.trials, 0);
    for_each_trial(config.trials, worker_count(config.threads, config.trials),
                   [&](std::size_t t, unsigned) {
                       const auto pair = campaign_pair(config, t);
                       r.matches[t] = matching_words(hasher.digest(pair.first), hasher.digest(pair.second));
                   });

    r.observed.assign(nv + 1, 0);
    for (auto omega : r.matches) ++r.observed[omega];
    r.theoretical = theoretical_collision(config.trials, nv, config.params.word_bits);
    r.collision_rate = 1.0 - static_cast<double>(r.observed[0]) / static_cast<double>(r.trials);
    r.theoretical_rate = theoretical_collision_rate(nv, config.params.word_bits);
    return r;
}

std::vector<double> theoretical_collision(std::size_t trials, std::size_t vertex_count, int word_bits) {
    if (trials < 1) throw DomainError("theoretical collision model needs N >= 1");
    if (vertex_count < 1) throw DomainError("vertex count must be positive");
    if (word_bits < 1) throw DomainError("word width must be positive");
    const double p = std::ldexp(1.0, -word_bits);
    const double nv = static_cast<double>(vertex_count);

    std::vector<double> w(vertex_count + 1, 0.0);
    // Binomial pmf by the ratio recurrence, starting from (1-p)^N_v.
    double term = std::exp(nv * std::log1p(-p));
    const double odds = p / (1.0 - p);
    for (std::size_t omega = 0; omega <= vertex_count; ++omega) {
        w[omega] = static_cast<double>(trials) * term;
        term *= (nv - static_cast<double>(omega)) / static_cast<double>(omega + 1) * odds;
    }
    return w;
}

std::vector<std::uint64_t> truncated_counts(std::span<const double> histogram) {
    std::vector<std::uint64_t> out;
    out.reserve(histogram.size());
    for (double x : histogram) out.push_back(static_cast<std::uint64_t>(std::trunc(x)));
    return out;
}

double theoretical_collision_rate(std::size_t vertex_count, int word_bits) {
    const double p = std::ldexp(1.0, -word_bits);
    return -std::expm1(static_cast<double>(vertex_count) * std::log1p(-p));
}

std::vector<ScalingPoint> scaling_experiment(std::span<const int> levels, const CampaignConfig& base) {
    if (levels.empty()) throw DomainError("scaling experiment needs at least one network size");
    std::vector<ScalingPoint> points;
    for (int n : levels) {
        if (n < kMinLevels) throw DomainError("network size needs n >= " + std::to_string(kMinLevels));
        CampaignConfig cfg = base;
        cfg.params.levels = n;
        const std::size_t nv = cfg.params.vertex_count();
        cfg.message_bits = static_cast<std::size_t>(std::llround(1.5 * static_cast<double>(nv)));
        const auto report = collision_test(cfg);
        points.push_back({n, nv, cfg.message_bits, report.collision_rate, report.theoretical_rate,
                          report.observed});
    }
    return points;
}

std::string birthday_bound(std::size_t digest_bits) {
    if (digest_bits < 2 || digest_bits % 2 != 0) {
        throw DomainError("birthday bound needs an even digest length >= 2");
    }
    // Little-endian base-10^9 limbs, doubled L/2 times.
    constexpr std::uint32_t kBase = 1'000'000'000;
    std::vector<std::uint32_t> limbs{1};
    for (std::size_t i = 0; i < digest_bits / 2; ++i) {
        std::uint32_t carry = 0;
        for (auto& limb : limbs) {
            const std::uint64_t v = std::uint64_t{limb} * 2 + carry;
            limb = static_cast<std::uint32_t>(v % kBase);
            carry = static_cast<std::uint32_t>(v / kBase);
        }
        if (carry) limbs.push_back(carry);
    }
    std::string out = std::to_string(limbs.back());
    for (auto it = limbs.rbegin() + 1; it != limbs.rend(); ++it) {
        const std::string chunk = std::to_string(*it);
        out += std::string(9 - chunk.size(), '0') + chunk;
    }
    return out;
}

}  // namespace hanoihash
