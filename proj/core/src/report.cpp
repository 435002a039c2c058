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

#include "hanoihash/report.hpp"

#include <charconv>
#include <sstream>

#include "hanoihash/error.hpp"
#include "json.hpp"

namespace hanoihash {

namespace {

using Json = nlohmann::ordered_json;

const char* mode_name(ControlMode m) { return m == ControlMode::SingleBit ? "single" : "twobit"; }
const char* norm_name(Normalization n) { return n == Normalization::Unit ? "unit" : "literal"; }
const char* rounding_name(Rounding r) { return r == Rounding::Floor ? "floor" : "half-even"; }

Json coin_json(const CoinSpec& c) { return Json{{"l", c.forward}, {"l_tilde", c.backward}}; }

Json params_object(const HashParams& p) {
    Json pair = Json::object();
    const char* names[] = {"C00", "C01", "C10", "C11"};
    for (std::size_t i = 0; i < 4; ++i) pair[names[i]] = coin_json(p.walk.pair_coins[i]);
    return Json{
        {"levels", p.levels},
        {"vertex_count", p.vertex_count()},
        {"precision", p.precision},
        {"word_bits", p.word_bits},
        {"digest_bits", p.digest_bits()},
        {"mode", mode_name(p.walk.mode)},
        {"l00", p.walk.coin0.forward},
        {"lt00", p.walk.coin0.backward},
        {"l11", p.walk.coin1.forward},
        {"lt11", p.walk.coin1.backward},
        {"pair_coins", pair},
        {"normalization", norm_name(p.walk.normalization)},
        {"rounding", rounding_name(p.rounding)},
    };
}

Json config_object(const CampaignConfig& c) {
    return Json{
        {"trials", c.trials},
        {"message_bits", c.message_bits},
        {"seed", c.seed},
        {"params", params_object(c.params)},
    };
}

Json envelope(const char* suite, Json config, Json summary, Json raw) {
    return Json{
        {"schema", kReportSchema},
        {"suite", suite},
        {"config", std::move(config)},
        {"summary", std::move(summary)},
        {"raw", std::move(raw)},
    };
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

std::string params_json(const HashParams& params) { return dump(params_object(params)); }

std::string to_json(const SensitivityReport& report, const HashParams& params) {
    Json rows = Json::array();
    for (const auto& row : report.rows) {
        rows.push_back(Json{
            {"label", row.label},
            {"message", bits_to_string(row.message)},
            {"bit_length", row.message.size()},
            {"hex", format_hex(row.digest)},
            {"words", row.digest.words()},
        });
    }
    Json pairs = Json::array();
    for (std::size_t a = 0; a < report.rows.size(); ++a) {
        for (std::size_t b = a + 1; b < report.rows.size(); ++b) {
            pairs.push_back(Json{{"a", report.rows[a].label},
                                 {"b", report.rows[b].label},
                                 {"hamming", hamming(report.rows[a].digest, report.rows[b].digest)}});
        }
    }
    Json config{{"seed", report.seed}, {"params", params_object(params)}};
    return dump(envelope("sensitivity", std::move(config), Json{{"pairs", pairs}}, Json{{"rows", rows}}));
}

std::string to_json(const DiffusionReport& r, const CampaignConfig& config) {
    Json summary{
        {"N", r.trials},
        {"L", r.digest_bits},
        {"B_min", r.b_min},
        {"B_max", r.b_max},
        {"B_mean", r.b_mean},
        {"P_percent", r.p * 100.0},
        {"delta_B", r.delta_b},
        {"delta_P_percent", r.delta_p * 100.0},
    };
    return dump(envelope("diffusion", config_object(config), std::move(summary),
                         Json{{"B", r.distances}}));
}

std::string to_json(const UniformityReport& r, const CampaignConfig& config) {
    Json summary{
        {"N", r.trials},
        {"L", r.digest_bits},
        {"T_mean", r.mean},
        {"T_mean_over_N", r.mean / static_cast<double>(r.trials)},
        {"deviation", r.deviation},
        {"delta_T", r.delta_t},
    };
    return dump(envelope("uniform", config_object(config), std::move(summary),
                         Json{{"T", r.flipped}, {"T_same", r.same}}));
}

std::string to_json(const CollisionReport& r, const CampaignConfig& config) {
    Json summary{
        {"N", r.trials},
        {"vertex_count", r.vertex_count},
        {"word_bits", r.word_bits},
        {"W_E", r.observed},
        {"W_T", r.theoretical},
        {"W_T_truncated", truncated_counts(r.theoretical)},
        {"collision_rate_percent", r.collision_rate * 100.0},
        {"theoretical_rate_percent", r.theoretical_rate * 100.0},
        {"birthday_bound_trials", birthday_bound(r.vertex_count * static_cast<std::size_t>(r.word_bits))},
    };
    return dump(envelope("collision", config_object(config), std::move(summary),
                         Json{{"omega", r.matches}}));
}

std::string to_json(std::span<const ScalingPoint> points, const CampaignConfig& config) {
    Json rows = Json::array();
    for (const auto& p : points) {
        rows.push_back(Json{
            {"levels", p.levels},
            {"vertex_count", p.vertex_count},
            {"message_bits", p.message_bits},
            {"experimental_rate_percent", p.experimental_rate * 100.0},
            {"theoretical_rate_percent", p.theoretical_rate * 100.0},
        });
    }
    Json raw = Json::array();
    for (const auto& p : points) raw.push_back(Json{{"vertex_count", p.vertex_count}, {"W_E", p.observed}});
    Json cfg = config_object(config);
    cfg.erase("message_bits");  // derived per size
    return dump(envelope("scaling", std::move(cfg), Json{{"points", rows}}, Json{{"histograms", raw}}));
}

std::string to_csv(const SensitivityReport& report) {
    std::ostringstream out;
    out << "label,bit_length,message,digest_hex\n";
    for (const auto& row : report.rows) {
        out << row.label << ',' << row.message.size() << ',' << bits_to_string(row.message) << ','
            << format_hex(row.digest) << '\n';
    }
    return out.str();
}

std::string to_csv(const DiffusionReport& r) {
    std::ostringstream out;
    out << "N,L,B_min,B_max,B_mean,P_percent,delta_B,delta_P_percent\n"
        << r.trials << ',' << r.digest_bits << ',' << r.b_min << ',' << r.b_max << ','
        << format_double(r.b_mean) << ',' << format_double(r.p * 100.0) << ','
        << format_double(r.delta_b) << ',' << format_double(r.delta_p * 100.0) << '\n';
    return out.str();
}

std::string to_csv(const UniformityReport& r) {
    std::ostringstream out;
    out << "position,T,T_same\n";
    for (std::size_t i = 0; i < r.flipped.size(); ++i) {
        out << i << ',' << r.flipped[i] << ',' << r.same[i] << '\n';
    }
    return out.str();
}

std::string to_csv(const CollisionReport& r) {
    const auto truncated = truncated_counts(r.theoretical);
    std::ostringstream out;
    out << "omega,W_E,W_T,W_T_truncated\n";
    for (std::size_t w = 0; w < r.observed.size(); ++w) {
        out << w << ',' << r.observed[w] << ',' << format_double(r.theoretical[w]) << ','
            << truncated[w] << '\n';
    }
    return out.str();
}

std::string to_csv(std::span<const ScalingPoint> points) {
    std::ostringstream out;
    out << "vertex_count,levels,message_bits,experimental_rate_percent,theoretical_rate_percent\n";
    for (const auto& p : points) {
        out << p.vertex_count << ',' << p.levels << ',' << p.message_bits << ','
            << format_double(p.experimental_rate * 100.0) << ','
            << format_double(p.theoretical_rate * 100.0) << '\n';
    }
    return out.str();
}

std::string digest_json(std::span<const std::uint8_t> message, const Digest& digest,
                        const HashParams& params) {
    Json j{
        {"schema", "hanoihash.digest/1"},
        {"message", bits_to_string(message)},
        {"bit_length", message.size()},
        {"params", params_object(params)},
        {"hex", format_hex(digest)},
        {"binary", format_binary(digest)},
        {"words", digest.words()},
    };
    return dump(j);
}

std::string walk_csv(std::span<const double> probabilities,
                     std::optional<std::span<const double>> baseline) {
    if (baseline && baseline->size() != probabilities.size()) {
        throw DomainError("baseline and walk distributions differ in length");
    }
    std::ostringstream out;
    out << (baseline ? "vertex,probability,baseline\n" : "vertex,probability\n");
    for (std::size_t v = 0; v < probabilities.size(); ++v) {
        out << v << ',' << format_double(probabilities[v]);
        if (baseline) out << ',' << format_double((*baseline)[v]);
        out << '\n';
    }
    return out.str();
}

}  // namespace hanoihash
