// Copyright 2026 The gapchamp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "gapchamp/gap_stats.hpp"

namespace gapchamp {

inline constexpr int kCheckpointFormatVersion = 1;

// Resumable state of a champions run.
struct Checkpoint {
    int format_version = kCheckpointFormatVersion;
    u64 limit = 0;
    std::vector<u64> checkpoints;
    u64 processed_up_to = 1;          // nothing processed yet
    std::optional<u64> last_prime;
    GapHistogram histogram;
    std::vector<ChampionReport> reports;

    bool operator==(const Checkpoint&) const = default;
};

std::string serialize(const Checkpoint& checkpoint);
Checkpoint deserialize(std::string_view text);

// write-temp-then-rename
void save_checkpoint(const std::string& path, const Checkpoint& checkpoint);
Checkpoint load_checkpoint(const std::string& path);

// 10^3, 10^4, ... below limit, then limit itself.
std::vector<u64> default_checkpoints(u64 limit);

struct RunOptions {
    u64 limit = 0;
    std::vector<u64> checkpoints;     // empty: default_checkpoints(limit)
    SieveConfig sieve;                // limit is taken from `limit`
    std::string checkpoint_path;      // empty: no persistence
    std::optional<Checkpoint> resume; // in-memory resume, overrides the file
    std::size_t batch_segments = 0;   // segments between checkpoint writes; 0: 4 * workers
    std::size_t max_batches = 0;      // stop after this many batches; 0: run to completion
    std::function<void(const ChampionReport&)> on_report;
};

struct RunOutcome {
    Checkpoint state;
    bool finished = false;
};

RunOutcome run_champions(const RunOptions& options);

enum class Suite { Table1, Lemma1, Sandwich, Bounds };

const char* to_string(Suite suite) noexcept;
Suite parse_suite(std::string_view name);

struct CheckResult {
    std::string name;
    bool pass = false;
    nlohmann::json witness;
};

struct VerifyOptions {
    std::optional<unsigned> k;  // lemma1: check k = 2..K (default 5)
    std::optional<u64> x;       // sandwich / bounds bound (default 10^6); table1 scan bound
    SieveConfig sieve;
};

std::vector<CheckResult> run_verify(Suite suite, const VerifyOptions& options = {});
nlohmann::json verify_report(Suite suite, const std::vector<CheckResult>& results);

}  // namespace gapchamp
