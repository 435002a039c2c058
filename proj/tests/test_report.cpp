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

#include <sstream>

#include "doctest.h"
#include "hanoihash/error.hpp"
#include "hanoihash/report.hpp"
#include "json.hpp"

using namespace hanoihash;
using json = nlohmann::ordered_json;

namespace {

CampaignConfig config(std::size_t n) {
    CampaignConfig c;
    c.trials = n;
    c.seed = 0xFFFFFFFFFFFFFFFFULL;
    return c;
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

std::vector<std::string> keys(const json& j) {
    std::vector<std::string> k;
    for (auto it = j.begin(); it != j.end(); ++it) k.push_back(it.key());
    return k;
}

void check_envelope(const json& j, const char* suite) {
    CHECK(keys(j) == std::vector<std::string>{"schema", "suite", "config", "summary", "raw"});
    CHECK(j["schema"] == kReportSchema);
    CHECK(j["suite"] == suite);
}

const std::vector<std::string> kParamKeys{"levels", "vertex_count", "precision", "word_bits",
                                          "digest_bits", "mode", "l00", "lt00", "l11", "lt11",
                                          "pair_coins", "normalization", "rounding"};

}  // namespace

TEST_CASE("format_double round trips") {
    for (double x : {0.0, 1.0, 0.1, 47.8594, 1e-300, 2.0 / 3.0}) {
        CHECK(std::stod(format_double(x)) == x);
    }
    CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("diffusion report schema") {
    const auto c = config(50);
    const auto r = diffusion_test(c);
    const json j = json::parse(to_json(r, c));
    check_envelope(j, "diffusion");
    CHECK(keys(j["config"]) == std::vector<std::string>{"trials", "message_bits", "seed", "params"});
    CHECK(keys(j["config"]["params"]) == kParamKeys);
    CHECK(j["config"]["seed"].get<std::uint64_t>() == 0xFFFFFFFFFFFFFFFFULL);
    CHECK(keys(j["summary"]) == std::vector<std::string>{"N", "L", "B_min", "B_max", "B_mean",
                                                         "P_percent", "delta_B", "delta_P_percent"});
    CHECK(j["raw"]["B"].size() == 50);
    CHECK(j["summary"]["P_percent"].get<double>() == doctest::Approx(r.p * 100));

    const auto csv = lines(to_csv(r));
    REQUIRE(csv.size() == 2);
    CHECK(csv[0] == "N,L,B_min,B_max,B_mean,P_percent,delta_B,delta_P_percent");
}

TEST_CASE("uniformity report schema") {
    const auto c = config(40);
    const auto r = uniform_distribution_test(c);
    const json j = json::parse(to_json(r, c));
    check_envelope(j, "uniform");
    CHECK(keys(j["summary"]) ==
          std::vector<std::string>{"N", "L", "T_mean", "T_mean_over_N", "deviation", "delta_T"});
    CHECK(j["raw"]["T"].size() == 256);
    CHECK(j["raw"]["T_same"].size() == 256);

    const auto csv = lines(to_csv(r));
    REQUIRE(csv.size() == 257);
    CHECK(csv[0] == "position,T,T_same");
}

TEST_CASE("collision report schema") {
    const auto c = config(40);
    const auto r = collision_test(c);
    const json j = json::parse(to_json(r, c));
    check_envelope(j, "collision");
    CHECK(keys(j["summary"]) ==
          std::vector<std::string>{"N", "vertex_count", "word_bits", "W_E", "W_T", "W_T_truncated",
                                   "collision_rate_percent", "theoretical_rate_percent",
                                   "birthday_bound_trials"});
    CHECK(j["summary"]["W_E"].size() == 17);
    CHECK(j["summary"]["birthday_bound_trials"] == "340282366920938463463374607431768211456");
    CHECK(j["raw"]["omega"].size() == 40);
    const auto csv = lines(to_csv(r));
    CHECK(csv.size() == 18);
    CHECK(csv[0] == "omega,W_E,W_T,W_T_truncated");
}

TEST_CASE("scaling and sensitivity report schemas") {
    auto c = config(20);
    c.params.precision = 7;
    const int levels[] = {4, 5};
    const auto pts = scaling_experiment(levels, c);
    const json j = json::parse(to_json(pts, c));
    check_envelope(j, "scaling");
    CHECK(j["summary"]["points"].size() == 2);
    CHECK(j["summary"]["points"][1]["message_bits"] == 48);
    CHECK(lines(to_csv(pts)).size() == 3);

    const auto s = sensitivity_suite(parse_bit_literal("111110010011000"), HanoiHash{}, 1);
    const json js = json::parse(to_json(s, HashParams{}));
    check_envelope(js, "sensitivity");
    CHECK(js["raw"]["rows"].size() == 5);
    CHECK(js["summary"]["pairs"].size() == 10);
    CHECK(lines(to_csv(s)).size() == 6);
}

TEST_CASE("digest json and walk csv") {
    const auto m = parse_bit_literal("101");
    const Digest d = digest(m);
    const json j = json::parse(digest_json(m, d, HashParams{}));
    CHECK(j["message"] == "101");
    CHECK(j["hex"] == format_hex(d));
    CHECK(j["words"].size() == 16);

    const std::vector<double> p{0.25, 0.75}, b{0.5, 0.5};
    CHECK(walk_csv(p) == "vertex,probability\n0,0.25\n1,0.75\n");
    CHECK(walk_csv(p, std::span<const double>(b)) == "vertex,probability,baseline\n0,0.25,0.5\n1,0.75,0.5\n");
    const std::vector<double> shorter{1.0};
    CHECK_THROWS_AS(walk_csv(p, std::span<const double>(shorter)), DomainError);
}
