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

#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "hanoihash/error.hpp"
#include "hanoihash/report.hpp"
#include "hanoihash/stats.hpp"

namespace hanoihash::cli {

namespace {

constexpr const char* kConfigEnv = "HANOIHASH_CONFIG";
constexpr const char* kReferenceMessage = "111110010011000";
const std::vector<std::string> kSuites{"sensitivity", "diffusion", "uniform", "collision", "scaling"};

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

double parse_real(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const double d = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return d;
    } catch (const std::exception&) {
        throw InvalidParams("config key '" + key + "': '" + value + "' is not a number");
    }
}

int parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const int i = std::stoi(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return i;
    } catch (const std::exception&) {
        throw InvalidParams("config key '" + key + "': '" + value + "' is not an integer");
    }
}

ControlMode parse_mode(const std::string& v) {
    if (v == "single") return ControlMode::SingleBit;
    if (v == "twobit") return ControlMode::TwoBit;
    throw InvalidParams("mode must be 'single' or 'twobit', got '" + v + "'");
}

Normalization parse_normalization(const std::string& v) {
    if (v == "unit") return Normalization::Unit;
    if (v == "literal") return Normalization::Literal;
    throw InvalidParams("normalization must be 'unit' or 'literal', got '" + v + "'");
}

Rounding parse_rounding(const std::string& v) {
    if (v == "floor") return Rounding::Floor;
    if (v == "half-even") return Rounding::HalfEven;
    throw InvalidParams("rounding must be 'floor' or 'half-even', got '" + v + "'");
}

CoinSpec parse_coin_pair(const std::string& key, const std::string& value) {
    const auto comma = value.find(',');
    if (comma == std::string::npos) throw InvalidParams("config key '" + key + "' expects 'l,lt'");
    return CoinSpec{parse_real(key, trim(value.substr(0, comma))),
                    parse_real(key, trim(value.substr(comma + 1)))};
}

/// Applies config text and returns the keys it set.
std::set<std::string> apply_config(std::string_view text, HashParams& p) {
    std::set<std::string> seen;
    std::istringstream lines{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw InvalidParams("config line " + std::to_string(lineno) + ": expected key=value");
        }
        std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "levels") key = "n";

        if (key == "n") p.levels = parse_int(key, value);
        else if (key == "l00") p.walk.coin0.forward = parse_real(key, value);
        else if (key == "lt00") p.walk.coin0.backward = parse_real(key, value);
        else if (key == "l11") p.walk.coin1.forward = parse_real(key, value);
        else if (key == "lt11") p.walk.coin1.backward = parse_real(key, value);
        else if (key == "precision") p.precision = parse_int(key, value);
        else if (key == "word_bits") p.word_bits = parse_int(key, value);
        else if (key == "mode") p.walk.mode = parse_mode(value);
        else if (key == "normalization") p.walk.normalization = parse_normalization(value);
        else if (key == "rounding") p.rounding = parse_rounding(value);
        else if (key == "c00") p.walk.pair_coins[0] = parse_coin_pair(key, value);
        else if (key == "c01") p.walk.pair_coins[1] = parse_coin_pair(key, value);
        else if (key == "c10") p.walk.pair_coins[2] = parse_coin_pair(key, value);
        else if (key == "c11") p.walk.pair_coins[3] = parse_coin_pair(key, value);
        else throw InvalidParams("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        seen.insert(key);
    }
    return seen;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot read '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot write '" + path + "'");
    f << content;
    if (!f.flush()) throw IoError("write to '" + path + "' failed");
}

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

/// Parameter flags shared by every subcommand.
struct ParamOptions {
    std::string config_path;
    int levels = 4;
    double l00 = 0, lt00 = 0, l11 = 0, lt11 = 0;
    int precision = 5;
    int word_bits = 16;
    std::string mode, normalization, rounding;
    std::array<std::string, 4> pair{};

    CLI::Option* o_levels = nullptr;
    CLI::Option* o_l00 = nullptr;
    CLI::Option* o_lt00 = nullptr;
    CLI::Option* o_l11 = nullptr;
    CLI::Option* o_lt11 = nullptr;
    CLI::Option* o_precision = nullptr;
    CLI::Option* o_word_bits = nullptr;
    std::array<CLI::Option*, 4> o_pair{};

    void attach(CLI::App* app) {
        app->add_option("--config", config_path, "Key=value parameter file (overrides $HANOIHASH_CONFIG)");
        o_levels = app->add_option("-n,--levels", levels, "Network levels n (N_v = 2^n)");
        o_l00 = app->add_option("--l00", l00, "Bit-0 coin weight on port 2");
        o_lt00 = app->add_option("--lt00", lt00, "Bit-0 coin weight on port 3");
        o_l11 = app->add_option("--l11", l11, "Bit-1 coin weight on port 2");
        o_lt11 = app->add_option("--lt11", lt11, "Bit-1 coin weight on port 3");
        o_precision = app->add_option("--precision", precision, "Decimal precision l");
        o_word_bits = app->add_option("--word-bits", word_bits, "Word width k in bits");
        app->add_option("--mode", mode, "Control mode")->check(CLI::IsMember({"single", "twobit"}));
        app->add_option("--normalization", normalization, "Coin-state normalization")
            ->check(CLI::IsMember({"unit", "literal"}));
        app->add_option("--rounding", rounding, "Quantization rounding")
            ->check(CLI::IsMember({"floor", "half-even"}));
        const char* names[] = {"--c00", "--c01", "--c10", "--c11"};
        for (int i = 0; i < 4; ++i) {
            o_pair[i] = app->add_option(names[i], pair[i], "Two-bit mode coin weights 'l,lt'");
        }
    }

    /// Defaults, then $HANOIHASH_CONFIG, then --config, then flags.  Returns
    /// the keys set by anything other than the defaults.
    HashParams resolve(std::set<std::string>* keys_set = nullptr) const {
        HashParams p;
        std::set<std::string> keys;
        if (const char* env = std::getenv(kConfigEnv); env && *env) {
            keys.merge(apply_config(read_file(env), p));
        }
        if (!config_path.empty()) keys.merge(apply_config(read_file(config_path), p));

        auto flag = [&](CLI::Option* o, const char* key, auto apply) {
            if (o->count()) {
                apply();
                keys.insert(key);
            }
        };
        flag(o_levels, "n", [&] { p.levels = levels; });
        flag(o_l00, "l00", [&] { p.walk.coin0.forward = l00; });
        flag(o_lt00, "lt00", [&] { p.walk.coin0.backward = lt00; });
        flag(o_l11, "l11", [&] { p.walk.coin1.forward = l11; });
        flag(o_lt11, "lt11", [&] { p.walk.coin1.backward = lt11; });
        flag(o_precision, "precision", [&] { p.precision = precision; });
        flag(o_word_bits, "word_bits", [&] { p.word_bits = word_bits; });
        if (!mode.empty()) p.walk.mode = parse_mode(mode);
        if (!normalization.empty()) p.walk.normalization = parse_normalization(normalization);
        if (!rounding.empty()) p.rounding = parse_rounding(rounding);
        for (int i = 0; i < 4; ++i) {
            if (o_pair[i]->count()) p.walk.pair_coins[i] = parse_coin_pair("c", pair[i]);
        }
        p.validate();
        if (keys_set) *keys_set = std::move(keys);
        return p;
    }
};

/// Message source flags for hash and walk.
struct InputOptions {
    std::string bits;
    std::string file;
    bool bit_text = false;
    CLI::Option* o_bits = nullptr;

    void attach(CLI::App* app) {
        o_bits = app->add_option("--bits", bits, "Message as a 0/1 literal");
        app->add_option("--file", file, "Read the message from a file")->excludes(o_bits);
        app->add_flag("--bit-text", bit_text, "Treat file/stdin content as 0/1 text rather than raw bytes");
    }

    BitString read(std::istream& in) const {
        BitString message;
        if (o_bits->count()) {
            message = parse_bit_literal(bits);
        } else {
            const std::string content = file.empty()
                                            ? std::string(std::istreambuf_iterator<char>(in),
                                                          std::istreambuf_iterator<char>())
                                            : read_file(file);
            message = bit_text ? parse_bit_literal(content) : message_to_bits(content);
        }
        if (message.empty()) throw DomainError("empty message");
        return message;
    }
};

std::string render_digest(const std::string& format, const BitString& msg, const Digest& d,
                          const HashParams& p) {
    if (format == "hex") return format_hex(d) + "\n";
    if (format == "binary") return format_binary(d) + "\n";
    if (format == "decimal") return format_decimal(d) + "\n";
    return digest_json(msg, d, p);
}

void emit(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty()) {
        out << content;
    } else {
        write_file(path, content);
    }
}

std::string sensitivity_summary(const SensitivityReport& r) {
    std::ostringstream s;
    for (const auto& row : r.rows) {
        s << row.label << "     " << bits_to_string(row.message) << "\n"
          << "h(" << row.label << ")  " << format_hex(row.digest) << "\n";
    }
    s << "pairwise Hamming distance (L = " << r.rows.front().digest.bit_length() << ")\n";
    for (std::size_t a = 0; a < r.rows.size(); ++a) {
        for (std::size_t b = a + 1; b < r.rows.size(); ++b) {
            s << "  " << r.rows[a].label << "-" << r.rows[b].label << "  "
              << hamming(r.rows[a].digest, r.rows[b].digest) << "\n";
        }
    }
    return s.str();
}

std::string diffusion_summary(const DiffusionReport& r) {
    std::ostringstream s;
    s << "            N=" << r.trials << "\n"
      << "B_min       " << r.b_min << "\n"
      << "B_max       " << r.b_max << "\n"
      << "B_mean      " << fixed(r.b_mean, 4) << "\n"
      << "P(%)        " << fixed(r.p * 100.0, 4) << "\n"
      << "dB          " << fixed(r.delta_b, 4) << "\n"
      << "dP(%)       " << fixed(r.delta_p * 100.0, 4) << "\n";
    return s.str();
}

std::string uniform_summary(const UniformityReport& r) {
    std::ostringstream s;
    s << "hash function      T_mean      |T_mean-N/2|   delta_T\n"
      << r.digest_bits << "-bit" << std::string(r.digest_bits < 1000 ? 10 : 9, ' ')
      << fixed(r.mean, 2) << "     " << fixed(r.deviation, 2) << "        " << fixed(r.delta_t, 2)
      << "\n";
    return s.str();
}

std::string collision_summary(const CollisionReport& r) {
    std::size_t observed_tail = 0;
    double theory_tail = 0.0;
    for (std::size_t w = 2; w < r.observed.size(); ++w) {
        observed_tail += r.observed[w];
        theory_tail += r.theoretical[w];
    }
    const auto trunc = [](double x) { return static_cast<unsigned long long>(x); };
    const double t1 = r.theoretical.size() > 1 ? r.theoretical[1] : 0.0;
    const std::size_t o1 = r.observed.size() > 1 ? r.observed[1] : 0;
    std::ostringstream s;
    s << "           w=0      w=1      w>=2\n"
      << "W^E(w)     " << r.observed[0] << "     " << o1 << "        " << observed_tail << "\n"
      << "W^T(w)     " << trunc(r.theoretical[0]) << "     " << trunc(t1) << "        "
      << trunc(theory_tail) << "\n"
      << "collision rate (%)  experimental " << fixed(r.collision_rate * 100.0, 4) << "  theoretical "
      << fixed(r.theoretical_rate * 100.0, 4) << "\n"
      << "birthday bound      2^" << r.vertex_count * static_cast<std::size_t>(r.word_bits) / 2
      << " = " << birthday_bound(r.vertex_count * static_cast<std::size_t>(r.word_bits)) << " trials\n";
    return s.str();
}

std::string scaling_summary(const std::vector<ScalingPoint>& points) {
    std::ostringstream s;
    s << "N_v     msg_bits   experimental(%)   theoretical(%)\n";
    for (const auto& p : points) {
        s << p.vertex_count << std::string(p.vertex_count < 100 ? 6 : 5, ' ') << p.message_bits
          << "         " << fixed(p.experimental_rate * 100.0, 4) << "            "
          << fixed(p.theoretical_rate * 100.0, 4) << "\n";
    }
    return s.str();
}

int levels_for_size(std::size_t size) {
    if (size < 4 || (size & (size - 1)) != 0) {
        throw InvalidParams("network size " + std::to_string(size) + " is not a power of two >= 4");
    }
    int n = 0;
    while ((std::size_t{1} << n) < size) ++n;
    return n;
}

}  // namespace

void apply_config_text(std::string_view text, HashParams& params) { apply_config(text, params); }

void apply_config_file(const std::string& path, HashParams& params) {
    apply_config(read_file(path), params);
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"hanoihash: hash messages with a message-controlled quantum walk on the HN4 network"};
    app.name("hanoihash");
    app.require_subcommand(1);

    // hash
    auto* hash_cmd = app.add_subcommand("hash", "Hash a message");
    ParamOptions hash_params;
    InputOptions hash_input;
    std::string hash_format = "hex";
    std::string hash_out;
    bool compat = false;
    hash_params.attach(hash_cmd);
    hash_input.attach(hash_cmd);
    hash_cmd->add_option("--format", hash_format, "Output format")
        ->check(CLI::IsMember({"hex", "binary", "decimal", "json"}));
    hash_cmd->add_option("--out", hash_out, "Write output to a file instead of stdout");
    hash_cmd->add_flag("--compat-matrix", compat,
                       "Print the hex digest under every normalization x rounding convention");

    // walk
    auto* walk_cmd = app.add_subcommand("walk", "Dump the per-vertex probability distribution");
    ParamOptions walk_params;
    InputOptions walk_input;
    std::string walk_out;
    bool baseline = false;
    walk_params.attach(walk_cmd);
    walk_input.attach(walk_cmd);
    walk_cmd->add_option("--out", walk_out, "Write CSV to a file instead of stdout");
    walk_cmd->add_flag("--baseline", baseline, "Add the plain-cycle walk at the same step count");

    // test
    auto* test_cmd = app.add_subcommand("test", "Run a statistical test campaign");
    ParamOptions test_params;
    std::string suite;
    std::size_t trials = 0;
    std::size_t msg_bits = 24;
    std::uint64_t seed = 0;
    unsigned threads = 0;
    std::string out_prefix;
    std::vector<std::size_t> sizes{16, 32};
    std::string message = kReferenceMessage;
    test_params.attach(test_cmd);
    test_cmd->add_option("suite", suite, "sensitivity|diffusion|uniform|collision|scaling")->required();
    auto* o_trials = test_cmd->add_option("-N,--trials", trials, "Number of trials");
    test_cmd->add_option("--msg-bits", msg_bits, "Random message bit length");
    auto* o_seed = test_cmd->add_option("--seed", seed, "64-bit campaign seed");
    test_cmd->add_option("--threads", threads, "Worker cap (0 = all cores)");
    test_cmd->add_option("--out", out_prefix, "Report path prefix (writes PREFIX.json and PREFIX.csv)");
    test_cmd->add_option("--sizes", sizes, "Network sizes N_v for the scaling suite")->delimiter(',');
    test_cmd->add_option("--message", message, "m1 for the sensitivity suite (0/1 literal)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (hash_cmd->parsed()) {
            const HashParams params = hash_params.resolve();
            const BitString msg = hash_input.read(in);
            if (compat) {
                std::ostringstream s;
                for (auto norm : {Normalization::Unit, Normalization::Literal}) {
                    for (auto rounding : {Rounding::Floor, Rounding::HalfEven}) {
                        HashParams p = params;
                        p.walk.normalization = norm;
                        p.rounding = rounding;
                        s << (norm == Normalization::Unit ? "unit    " : "literal ")
                          << (rounding == Rounding::Floor ? "floor      " : "half-even  ")
                          << format_hex(digest(msg, p)) << "\n";
                    }
                }
                emit(hash_out, s.str(), out);
            } else {
                emit(hash_out, render_digest(hash_format, msg, digest(msg, params), params), out);
            }
            return kOk;
        }

        if (walk_cmd->parsed()) {
            const HashParams params = walk_params.resolve();
            const BitString msg = walk_input.read(in);
            const HanoiHash hasher(params);
            const auto p = hasher.probabilities(msg);
            if (baseline) {
                const auto steps = walk_schedule(msg, params.walk.mode).size();
                const auto base = cycle_walk_baseline(params.levels, steps);
                emit(walk_out, walk_csv(p, std::span<const double>(base)), out);
            } else {
                emit(walk_out, walk_csv(p), out);
            }
            return kOk;
        }

        // test
        if (std::find(kSuites.begin(), kSuites.end(), suite) == kSuites.end()) {
            err << "unknown suite '" << suite << "'; valid suites:";
            for (const auto& s : kSuites) err << ' ' << s;
            err << "\n";
            return kUsage;
        }
        std::set<std::string> keys;
        HashParams params = test_params.resolve(&keys);
        if (suite == "scaling" && !keys.count("precision")) {
            params.precision = 7;
            params.validate();
        }
        if (!o_seed->count()) {
            std::random_device rd;
            seed = (std::uint64_t{rd()} << 32) ^ rd();
        }
        CampaignConfig config;
        config.message_bits = msg_bits;
        config.seed = seed;
        config.params = params;
        config.threads = threads;
        if (o_trials->count()) {
            config.trials = trials;
        } else {
            config.trials = suite == "diffusion" ? 2000 : 10000;
        }
        const std::string prefix = out_prefix.empty() ? suite : out_prefix;

        std::string json, csv, summary;
        if (suite == "sensitivity") {
            const auto m1 = parse_bit_literal(message);
            if (m1.empty()) throw DomainError("empty message");
            const auto report = sensitivity_suite(m1, HanoiHash(params), seed);
            json = to_json(report, params);
            csv = to_csv(report);
            summary = sensitivity_summary(report);
        } else if (suite == "diffusion") {
            const auto report = diffusion_test(config);
            json = to_json(report, config);
            csv = to_csv(report);
            summary = diffusion_summary(report);
        } else if (suite == "uniform") {
            const auto report = uniform_distribution_test(config);
            json = to_json(report, config);
            csv = to_csv(report);
            summary = uniform_summary(report);
        } else if (suite == "collision") {
            const auto report = collision_test(config);
            json = to_json(report, config);
            csv = to_csv(report);
            summary = collision_summary(report);
        } else {
            std::vector<int> levels;
            for (auto s : sizes) levels.push_back(levels_for_size(s));
            const auto points = scaling_experiment(levels, config);
            json = to_json(points, config);
            csv = to_csv(points);
            summary = scaling_summary(points);
        }
        write_file(prefix + ".json", json);
        write_file(prefix + ".csv", csv);
        out << suite << "  seed: " << seed << "\n" << summary;
        out << "wrote " << prefix << ".json, " << prefix << ".csv\n";
        return kOk;
    } catch (const InvalidParams& e) {
        err << "invalid parameters: " << e.what() << "\n";
        return kInvalidParams;
    } catch (const IoError& e) {
        err << "I/O error: " << e.what() << "\n";
        return kIoError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace hanoihash::cli
