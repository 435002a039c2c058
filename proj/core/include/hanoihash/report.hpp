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
 * @file report.hpp
 * @brief JSON and CSV serialization of campaign reports.
 *
 * JSON documents carry the full report including raw per-trial values; CSV
 * files carry plot-ready aggregates.  Both are pure functions of the report
 * and the campaign configuration (the worker count is never written), so
 * reruns with the same seed are byte-identical.
 *
 * JSON layout (keys in this order):
 *   { "schema": "hanoihash.report/1", "suite": <name>,
 *     "config": {...}, "summary": {...}, "raw": {...} }
 */

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hanoihash/stats.hpp"

namespace hanoihash {

inline constexpr const char* kReportSchema = "hanoihash.report/1";

/// Shortest round-trip decimal form of a double.
std::string format_double(double value);

std::string params_json(const HashParams& params);

std::string to_json(const SensitivityReport& report, const HashParams& params);
std::string to_json(const DiffusionReport& report, const CampaignConfig& config);
std::string to_json(const UniformityReport& report, const CampaignConfig& config);
std::string to_json(const CollisionReport& report, const CampaignConfig& config);
std::string to_json(std::span<const ScalingPoint> points, const CampaignConfig& config);

std::string to_csv(const SensitivityReport& report);
std::string to_csv(const DiffusionReport& report);
std::string to_csv(const UniformityReport& report);
std::string to_csv(const CollisionReport& report);
std::string to_csv(std::span<const ScalingPoint> points);

/// Single digest with its message and parameters.
std::string digest_json(std::span<const std::uint8_t> message, const Digest& digest,
                        const HashParams& params);

/// "vertex,probability[,baseline]" rows, one per vertex label.
std::string walk_csv(std::span<const double> probabilities,
                     std::optional<std::span<const double>> baseline = std::nullopt);

}  // namespace hanoihash
