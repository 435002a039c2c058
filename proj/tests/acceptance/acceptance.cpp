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

// Acceptance suite.  Each criterion prints one [PASS]/[FAIL] line with the
// measured values, its thresholds and its runtime budget.
//
//   acceptance            run every criterion
//   acceptance --only K   run criterion K (1..10)

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hanoihash/hash.hpp"
#include "hanoihash/stats.hpp"
#include "hanoihash/walk.hpp"
#include "oracle/dense_walk.hpp"

#ifdef HANOIHASH_WITH_CLI
#include "cli.hpp"
#endif

using namespace hanoihash;

namespace {

constexpr std::uint64_t kSeed = 7;

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof(buf), f, args...);
    return buf;
}

WalkState random_state(std::size_t nv, std::mt19937_64& gen) {
    std::normal_distribution<double> g;
    WalkState s(nv);
    double norm2 = 0.0;
    for (auto& a : s.amplitudes()) {
        a = {g(gen), g(gen)};
        norm2 += std::norm(a);
    }
    for (auto& a : s.amplitudes()) a /= std::sqrt(norm2);
    return s;
}

Outcome unitarity() {
    std::mt19937_64 gen(kSeed);
    double worst = 0.0;
    for (int n : {2, 3, 4, 5}) {
        const QuantumWalk walk(n, WalkParams{});
        for (int i = 0; i < 1000; ++i) {
            const WalkState s = random_state(walk.topology().vertex_count(), gen);
            const int bit = static_cast<int>(gen() & 1);
            worst = std::max(worst, std::abs(walk.step(s, bit).norm() - 1.0));
        }
    }
    return {worst < 1e-12, fmt("n=2..5, 4000 steps, max |norm-1| = %.3g (< 1e-12)", worst)};
}

Outcome oracle_equivalence() {
    double worst = 0.0;
    int messages = 0;
    for (int n : {2, 3}) {
        const QuantumWalk walk(n, WalkParams{});
        const oracle::SingleBitWalk ref(n, 0.01, 1.0, 0.1, 0.01);
        for (int len = 1; len <= 8; ++len) {
            for (int code = 0; code < (1 << len); ++code) {
                BitString bits(len);
                for (int b = 0; b < len; ++b) bits[b] = (code >> (len - 1 - b)) & 1;
                const WalkState s = walk.evolve(bits);
                const oracle::Vector r = ref.run(bits);
                for (std::size_t i = 0; i < s.size(); ++i) {
                    worst = std::max(worst, std::abs(s.amplitudes()[i] - r(static_cast<Eigen::Index>(i))));
                }
                ++messages;
            }
        }
    }
    return {worst < 1e-10 && messages == 1020,
            fmt("%d messages (510 per n, n=2,3), max componentwise error %.3g (< 1e-10)", messages, worst)};
}

Outcome shift_validity() {
    bool ok = true;
    std::string bad;
    for (int n = 2; n <= 10; ++n) {
        const Topology t(n);
        const auto nv = static_cast<std::uint32_t>(t.vertex_count());
        if (!is_permutation(t.shift_flipflop()) || !is_permutation(t.shift_moving())) {
            ok = false;
            bad += fmt(" n=%d:not-bijective", n);
        }
        std::vector<std::uint32_t> loops;
        for (std::uint32_t v = 0; v < nv; ++v) {
            bool loop = true;
            for (int c : {2, 3}) {
                loop = loop && t.shift_flipflop()[t.composite(c, v)] == t.composite(c, v) &&
                       t.shift_moving()[t.composite(c, v)] == t.composite(c, v);
            }
            if (loop) loops.push_back(v);
        }
        const std::vector<std::uint32_t> expected{t.label_of(LevelIndex{n, 0}),
                                                  t.label_of(LevelIndex{n - 1, 0})};
        if (loops != expected) {
            ok = false;
            bad += fmt(" n=%d:self-loops", n);
        }
    }
    return {ok, "n=2..10, both shifts bijective, self-loops exactly at (n-1,0) and (n,0)" + bad};
}

Outcome parity_contrast() {
    const auto base = cycle_walk_baseline(4, 9);
    double worst_zero = 0.0;
    for (std::size_t x = 0; x < base.size(); ++x) {
        if ((x + 9) % 2 == 1) worst_zero = std::max(worst_zero, base[x]);
    }
    const HanoiHash hasher;
    Rng rng(kSeed);
    int good = 0;
    double smallest = 1.0;
    for (int i = 0; i < 100; ++i) {
        BitString m(9);
        for (auto& b : m) b = rng.bit();
        const auto p = hasher.probabilities(m);
        const double lo = *std::min_element(p.begin(), p.end());
        smallest = std::min(smallest, lo);
        good += lo > 1e-6;
    }
    return {worst_zero < 1e-14 && good >= 95,
            fmt("cycle N=16,t=9 max P at odd x+t = %.3g (< 1e-14); HN4 min P > 1e-6 for %d/100 (>= 95), "
                "smallest min P %.3g",
                worst_zero, good, smallest)};
}

Outcome diffusion() {
    CampaignConfig c;
    c.trials = 2000;
    c.seed = kSeed;
    c.threads = 0;
    const auto r = diffusion_test(c);
    const double p = r.p * 100, dp = r.delta_p * 100;
    const bool ok = p >= 46 && p <= 50 && dp >= 2.5 && dp <= 4.0 && r.b_min > 80 && r.b_max < 165;
    return {ok, fmt("N=2000: P=%.4f%% in [46,50], dP=%.4f%% in [2.5,4.0], B_min=%zu > 80, B_max=%zu < 165 "
                    "(B_mean=%.4f, dB=%.4f)",
                    p, dp, r.b_min, r.b_max, r.b_mean, r.delta_b)};
}

Outcome uniformity() {
    CampaignConfig c;
    c.trials = 2000;
    c.seed = kSeed;
    c.threads = 0;
    const auto r = uniform_distribution_test(c);
    const double ratio = r.mean / 2000.0;
    double lo = 1.0, hi = 0.0;
    std::size_t outside = 0;
    for (auto t : r.flipped) {
        const double f = static_cast<double>(t) / 2000.0;
        lo = std::min(lo, f);
        hi = std::max(hi, f);
        outside += f < 0.40 || f > 0.56;
    }
    const bool ok = ratio >= 0.46 && ratio <= 0.50 && outside == 0;
    return {ok, fmt("N=2000: T_mean/N=%.4f in [0.46,0.50]; per-position flip fraction range [%.4f, %.4f], "
                    "%zu of %zu positions outside [0.40,0.56] (delta_T=%.2f)",
                    ratio, lo, hi, outside, r.flipped.size(), r.delta_t)};
}

Outcome collision() {
    CampaignConfig c;
    c.trials = 10000;
    c.seed = kSeed;
    c.threads = 0;
    const auto r = collision_test(c);
    std::size_t tail = 0;
    for (std::size_t w = 2; w < r.observed.size(); ++w) tail += r.observed[w];
    const auto theory = truncated_counts(theoretical_collision(10000, 16, 16));
    std::uint64_t theory_tail = 0;
    for (std::size_t w = 2; w < theory.size(); ++w) theory_tail += theory[w];
    const bool ok = r.collision_rate <= 0.0015 && tail == 0 && theory[0] == 9997 && theory[1] == 2 &&
                    theory_tail == 0;
    return {ok, fmt("N=10000: rate=%.4f%% (<= 0.15%%), W_E=(%zu,%zu,%zu) with W_E(>=2)=0, "
                    "W_T=(%llu,%llu,%llu) == (9997,2,0)",
                    r.collision_rate * 100, r.observed[0], r.observed[1], tail,
                    static_cast<unsigned long long>(theory[0]), static_cast<unsigned long long>(theory[1]),
                    static_cast<unsigned long long>(theory_tail))};
}

Outcome scaling() {
    CampaignConfig c;
    c.trials = 1000;
    c.seed = kSeed;
    c.threads = 0;
    c.params.precision = 7;
    const int levels[] = {4, 5};
    const auto pts = scaling_experiment(levels, c);
    bool ok = true;
    std::string detail = "N=1000, l=7, k=16:";
    for (const auto& p : pts) {
        const double gap = std::abs(p.experimental_rate - p.theoretical_rate) * 100;
        ok = ok && gap <= 0.3;
        detail += fmt(" N_v=%zu exp=%.4f%% theo=%.4f%% |diff|=%.4fpp (<= 0.3)", p.vertex_count,
                      p.experimental_rate * 100, p.theoretical_rate * 100, gap);
    }
    return {ok, detail};
}

Outcome reference_separation() {
    const char* const messages[] = {"111110010011000", "111110000011000", "111110010111000",
                                    "1111110010011000", "11111010011000"};
    const HanoiHash hasher;
    std::vector<Digest> d;
    for (const char* m : messages) d.push_back(hasher.digest(parse_bit_literal(m)));
    double lo = 1.0, hi = 0.0;
    bool distinct = true;
    for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            const double f = static_cast<double>(hamming(d[i], d[j])) / static_cast<double>(d[i].bit_length());
            lo = std::min(lo, f);
            hi = std::max(hi, f);
            distinct = distinct && !(d[i] == d[j]);
        }
    }
    return {lo >= 0.35 && hi <= 0.65 && distinct,
            fmt("10 pairs, Hamming/L in [%.4f, %.4f] (within [0.35,0.65]), all distinct: %s", lo, hi,
                distinct ? "yes" : "no")};
}

#ifdef HANOIHASH_WITH_CLI
std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

Outcome determinism() {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / ("hanoihash_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const std::vector<std::vector<std::string>> commands{
        {"test", "sensitivity", "--seed", "7"},
        {"test", "diffusion", "-N", "2000", "--seed", "7"},
        {"test", "uniform", "-N", "2000", "--seed", "7"},
        {"test", "collision", "-N", "2000", "--seed", "7"},
        {"test", "scaling", "--sizes", "16,32", "--precision", "7", "-N", "300", "--seed", "7"},
    };
    bool ok = true;
    int compared = 0;
    std::string bad;
    for (const auto& cmd : commands) {
        std::string ref_json, ref_csv;
        for (int threads = 1; threads <= 8; ++threads) {
            auto args = cmd;
            const auto prefix = (dir / (cmd[1] + std::to_string(threads))).string();
            args.insert(args.end(), {"--threads", std::to_string(threads), "--out", prefix});
            std::istringstream in;
            std::ostringstream out, err;
            if (cli::run(args, in, out, err) != 0) {
                ok = false;
                bad += " " + cmd[1] + ":exit";
                continue;
            }
            const auto js = slurp(prefix + ".json"), cs = slurp(prefix + ".csv");
            if (threads == 1) {
                ref_json = js;
                ref_csv = cs;
            } else {
                ++compared;
                if (js != ref_json || cs != ref_csv) {
                    ok = false;
                    bad += " " + cmd[1] + ":threads=" + std::to_string(threads);
                }
            }
        }
    }
    fs::remove_all(dir);
    return {ok && compared == 35,
            fmt("5 suites x threads 1..8: %d report pairs compared against threads=1, all byte-identical: %s",
                compared, ok ? "yes" : "no") + bad};
}
#else
Outcome determinism() { return {false, "built without the CLI"}; }
#endif

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::string(argv[i]) == "--only" && i + 1 < argc) only = std::atoi(argv[++i]);
    }

    const std::vector<Criterion> criteria{
        {1, "unitarity", 5, unitarity},
        {2, "oracle equivalence", 30, oracle_equivalence},
        {3, "shift validity", 1, shift_validity},
        {4, "parity contrast", 10, parity_contrast},
        {5, "diffusion", 120, diffusion},
        {6, "uniformity", 120, uniformity},
        {7, "collision", 600, collision},
        {8, "scaling", 300, scaling},
        {9, "sensitivity separation", 60, reference_separation},
        {10, "determinism", 600, determinism},
    };

    int failed = 0, ran = 0;
    for (const auto& c : criteria) {
        if (only && c.id != only) continue;
        ++ran;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.budget_seconds;
        const bool pass = o.pass && in_time;
        failed += !pass;
        std::cout << (pass ? "[PASS] " : "[FAIL] ") << "AC" << c.id << " " << c.name << ": " << o.detail
                  << fmt("; %.2f s (< %.0f s)", secs, c.budget_seconds) << std::endl;
    }
    if (ran == 0) {
        std::cerr << "no criterion matches --only " << only << "\n";
        return 2;
    }
    return failed == 0 ? 0 : 1;
}
