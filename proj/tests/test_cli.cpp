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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "hanoihash/error.hpp"

namespace fs = std::filesystem;
using namespace hanoihash;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

std::vector<std::string> split_lines(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("hanoihash_cli_" + std::to_string(std::rand()) + "_" +
                                            std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("hash prints 16 hex groups") {
    const auto a = run({"hash", "--bits", "111110010011000"});
    CHECK(a.code == cli::kOk);
    CHECK(a.out == "19E0 4DB8 434B 3BEE 6484 4099 2ABD 2DB1 3330 4269 4918 42A6 40FE 4D67 456B 5E7F\n");
    CHECK(run({"hash", "--bits", "111110010011000"}).out == a.out);

    CHECK(run({"hash", "--bits", "111110010011000", "--format", "binary"}).out.size() == 257);
    CHECK(split_lines(run({"hash", "--bits", "1", "--format", "decimal"}).out).size() == 1);
    CHECK(run({"hash", "--bits", "1", "--format", "json"}).out.find("\"hex\"") != std::string::npos);
    CHECK(split_lines(run({"hash", "--bits", "101", "--compat-matrix"}).out).size() == 4);
}

TEST_CASE("hash input sources") {
    // Raw bytes from stdin: 'A' = 01000001.
    CHECK(run({"hash"}, "A").out == run({"hash", "--bits", "01000001"}).out);
    CHECK(run({"hash", "--bit-text"}, "0100 0001\n").out == run({"hash", "--bits", "01000001"}).out);

    TempDir dir;
    const auto file = dir.path / "msg.bin";
    std::ofstream(file, std::ios::binary) << "A";
    CHECK(run({"hash", "--file", file.string()}).out == run({"hash", "--bits", "01000001"}).out);
    CHECK(run({"hash", "--file", (dir.path / "missing").string()}).code == cli::kIoError);
}

TEST_CASE("hash error exits") {
    CHECK(run({"hash", "--bits", ""}).code == cli::kUsage);
    CHECK(run({"hash"}, "").code == cli::kUsage);
    CHECK(run({"hash", "--bits", "10x"}).code == cli::kUsage);
    const auto bad = run({"hash", "--bits", "1", "--precision", "4"});
    CHECK(bad.code == cli::kInvalidParams);
    CHECK(bad.err.find("10^4") != std::string::npos);
    CHECK(run({"hash", "--bits", "1", "--mode", "triple"}).code == cli::kUsage);
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("config file precedence") {
    TempDir dir;
    const auto cfg = dir.path / "params.cfg";
    std::ofstream(cfg) << "# published set, higher precision\nn=4\nprecision = 7\nword_bits=16\nmode=single\n";

    HashParams p;
    cli::apply_config_file(cfg.string(), p);
    CHECK(p.precision == 7);
    CHECK_THROWS_AS(cli::apply_config_text("bogus=1", p), InvalidParams);
    CHECK_THROWS_AS(cli::apply_config_text("precision", p), InvalidParams);
    CHECK_THROWS_AS(cli::apply_config_text("l00=abc", p), InvalidParams);
    cli::apply_config_text("c01 = 0.5, 0.25\nrounding=half-even", p);
    CHECK(p.walk.pair_coins[1] == CoinSpec{0.5, 0.25});
    CHECK(p.rounding == Rounding::HalfEven);

    const auto from_file = run({"hash", "--bits", "1011", "--config", cfg.string()});
    const auto explicit7 = run({"hash", "--bits", "1011", "--precision", "7"});
    CHECK(from_file.out == explicit7.out);
    const auto flag_wins = run({"hash", "--bits", "1011", "--config", cfg.string(), "--precision", "6"});
    CHECK(flag_wins.out == run({"hash", "--bits", "1011", "--precision", "6"}).out);

    ::setenv("HANOIHASH_CONFIG", cfg.string().c_str(), 1);
    const auto via_env = run({"hash", "--bits", "1011"});
    ::setenv("HANOIHASH_CONFIG", (dir.path / "missing.cfg").string().c_str(), 1);
    const auto env_missing = run({"hash", "--bits", "1011"});
    ::unsetenv("HANOIHASH_CONFIG");
    CHECK(via_env.out == explicit7.out);
    CHECK(env_missing.code == cli::kIoError);

    std::ofstream(dir.path / "bad.cfg") << "precision=3\n";
    CHECK(run({"hash", "--bits", "1", "--config", (dir.path / "bad.cfg").string()}).code ==
          cli::kInvalidParams);
}

TEST_CASE("walk with baseline") {
    const auto r = run({"walk", "--bits", "101100111", "--baseline"});
    REQUIRE(r.code == cli::kOk);
    const auto rows = split_lines(r.out);
    REQUIRE(rows.size() == 17);
    CHECK(rows[0] == "vertex,probability,baseline");
    double sum_walk = 0.0, sum_base = 0.0;
    for (std::size_t v = 0; v < 16; ++v) {
        std::istringstream row(rows[v + 1]);
        std::string cell;
        std::getline(row, cell, ',');
        CHECK(std::stoul(cell) == v);
        std::getline(row, cell, ',');
        const double p = std::stod(cell);
        std::getline(row, cell, ',');
        const double b = std::stod(cell);
        sum_walk += p;
        sum_base += b;
        CHECK(p > 0.0);
        if ((v + 9) % 2 == 1) CHECK(b == 0.0);
    }
    CHECK(sum_walk == doctest::Approx(1.0));
    CHECK(sum_base == doctest::Approx(1.0));
    CHECK(split_lines(run({"walk", "--bits", "1"}).out).size() == 17);
}

TEST_CASE("test suites write reports") {
    TempDir dir;
    const auto prefix = (dir.path / "diff").string();
    const auto r = run({"test", "diffusion", "-N", "200", "--seed", "7", "--out", prefix});
    REQUIRE(r.code == cli::kOk);
    for (const char* col : {"B_min", "B_max", "B_mean", "P(%)", "dB", "dP(%)"}) {
        CHECK(r.out.find(col) != std::string::npos);
    }
    CHECK(fs::exists(prefix + ".json"));
    CHECK(fs::exists(prefix + ".csv"));

    const auto c = run({"test", "collision", "-N", "300", "--seed", "1", "--out", (dir.path / "c").string()});
    CHECK(c.code == cli::kOk);
    CHECK(c.out.find("W^E(w)") != std::string::npos);
    CHECK(c.out.find("W^T(w)") != std::string::npos);
    CHECK(c.out.find("w>=2") != std::string::npos);

    const auto s = run({"test", "scaling", "--sizes", "16,32", "--precision", "7", "-N", "50", "--seed", "2",
                        "--out", (dir.path / "s").string()});
    CHECK(s.code == cli::kOk);
    CHECK(split_lines(slurp(dir.path / "s.csv")).size() == 3);

    const auto sens = run({"test", "sensitivity", "--seed", "3", "--out", (dir.path / "m").string()});
    CHECK(sens.code == cli::kOk);
    CHECK(sens.out.find("h(m5)") != std::string::npos);

    const auto u = run({"test", "uniform", "-N", "50", "--out", (dir.path / "u").string()});
    CHECK(u.code == cli::kOk);
    CHECK(u.out.find("seed: ") != std::string::npos);

    const auto bad = run({"test", "bogus"});
    CHECK(bad.code == cli::kUsage);
    CHECK(bad.err.find("sensitivity diffusion uniform collision scaling") != std::string::npos);
    CHECK(run({"test", "scaling", "--sizes", "24"}).code == cli::kInvalidParams);
    CHECK(run({"test", "diffusion", "-N", "1", "--out", prefix}).code == cli::kUsage);
    CHECK(run({"test", "diffusion", "-N", "5", "--out", (dir.path / "no" / "such" / "x").string()}).code ==
          cli::kIoError);
}

TEST_CASE("reports are byte-identical across thread counts") {
    TempDir dir;
    const auto base = (dir.path / "t1").string();
    REQUIRE(run({"test", "uniform", "-N", "150", "--seed", "99", "--threads", "1", "--out", base}).code == 0);
    const auto json1 = slurp(base + ".json");
    const auto csv1 = slurp(base + ".csv");
    for (const char* t : {"3", "8"}) {
        const auto other = (dir.path / (std::string("t") + t)).string();
        REQUIRE(run({"test", "uniform", "-N", "150", "--seed", "99", "--threads", t, "--out", other}).code == 0);
        CHECK(slurp(other + ".json") == json1);
        CHECK(slurp(other + ".csv") == csv1);
    }
}
