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

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hanoihash/hash.hpp"

namespace hanoihash::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kInvalidParams = 3, kIoError = 4 };

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Applies flat `key=value` lines to `params`.  '#' starts a comment.
/// Recognized keys: n (or levels), l00, lt00, l11, lt11, precision,
/// word_bits, mode, normalization, rounding, c00, c01, c10, c11 ("l,lt").
/// Throws InvalidParams on unknown keys or malformed values.
void apply_config_text(std::string_view text, HashParams& params);

/// Reads and applies a config file.  Throws IoError if it cannot be read.
void apply_config_file(const std::string& path, HashParams& params);

/// Entry point shared by the executable and the tests.  `args` excludes the
/// program name.  Returns one of ExitCode.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace hanoihash::cli
