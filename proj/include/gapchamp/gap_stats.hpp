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
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "gapchamp/gap_histogram.hpp"
#include "gapchamp/prime_engine.hpp"

namespace gapchamp {

inline constexpr u64 kDefaultBruteForceCap = 10'000'000;

// x, N*(x), D*(x) and the number of gaps counted.
struct ChampionReport {
    u64 x = 0;
    u64 n_star = 0;
    std::vector<u64> champions;  // ascending
    u64 total_gaps = 0;

    bool operator==(const ChampionReport&) const = default;
};

ChampionReport make_report(const GapHistogram& histogram, u64 x);

// Folds SegmentSummary values, delivered in ascending range order, into one
// histogram, stitching the gap across each segment boundary exactly once.
class GapAccumulator {
public:
    GapAccumulator() = default;
    GapAccumulator(GapHistogram histogram, u64 processed_up_to, std::optional<u64> last_prime)
        : histogram_(std::move(histogram)), processed_up_to_(processed_up_to), last_prime_(last_prime) {}

    void absorb(const SegmentSummary& segment);

    const GapHistogram& histogram() const noexcept { return histogram_; }
    u64 processed_up_to() const noexcept { return processed_up_to_; }
    std::optional<u64> last_prime() const noexcept { return last_prime_; }

private:
    GapHistogram histogram_;
    u64 processed_up_to_ = 1;
    std::optional<u64> last_prime_;
};

// Ordered sieve ranges covering [from, to], aligned to the config's tile grid
// and additionally split so that every cut point in (from, to] ends a range.
std::vector<Range> plan_ranges(const SieveConfig& config, u64 from, u64 to,
                               std::span<const u64> cuts = {});

// Checks that checkpoints are strictly ascending, each >= 3 and <= x_max.
void validate_checkpoints(std::span<const u64> checkpoints, u64 x_max);

GapHistogram gap_histogram(u64 x, const SieveConfig& config = {});
ChampionReport champions(u64 x, const SieveConfig& config = {});

// One sieve pass up to x_max; element i equals champions(checkpoints[i]).
std::vector<ChampionReport> champion_timeline(u64 x_max, std::span<const u64> checkpoints,
                                              const SieveConfig& config = {});

// Tracks D*(x) incrementally as primes are fed in ascending order. Counts
// only increase, so the champion set can be maintained in O(log) per prime.
class ChampionTracker {
public:
    void feed(u64 prime);
    ChampionReport report(u64 x) const;
    const std::set<u64>& champion_set() const noexcept { return champions_; }
    u64 n_star() const noexcept { return n_star_; }

private:
    std::optional<u64> last_;
    std::map<u64, u64> counts_;
    std::set<u64> champions_;
    u64 n_star_ = 0;
    u64 total_ = 0;
};

// Membership bitset over primes <= x answering pi_2 / pi_3 queries in
// O(pi(x)) each.
class PrimePairCounter {
public:
    explicit PrimePairCounter(u64 x, u64 cap = kDefaultBruteForceCap);

    u64 x() const noexcept { return x_; }
    bool is_prime(u64 n) const noexcept { return n <= x_ && member_[n]; }

    // #{p <= x : p - d prime}
    u64 pi2(u64 d) const;
    // #{p <= x : p - d and p - d_prime both prime}, 1 <= d_prime < d
    u64 pi3(u64 d, u64 d_prime) const;

private:
    u64 x_;
    std::vector<bool> member_;
    std::vector<u64> primes_;
};

u64 pi2(u64 x, u64 d, u64 cap = kDefaultBruteForceCap);
u64 pi3(u64 x, u64 d, u64 d_prime, u64 cap = kDefaultBruteForceCap);

struct SandwichWitness {
    u64 x = 0;
    u64 d = 0;
    u64 pi2 = 0;
    u64 pi3_sum = 0;    // sum over 1 <= d' < d of pi_3(x, d, d')
    u64 consecutive = 0;  // N(x, d)
    bool lower_holds = false;
    bool upper_holds = false;

    // May be negative.
    std::int64_t lower_bound() const noexcept {
        return static_cast<std::int64_t>(pi2) - static_cast<std::int64_t>(pi3_sum);
    }
    bool holds() const noexcept { return lower_holds && upper_holds; }
};

SandwichWitness verify_sandwich(u64 x, u64 d, u64 cap = kDefaultBruteForceCap);
SandwichWitness verify_sandwich(const PrimePairCounter& counter, const GapHistogram& histogram, u64 d);

}  // namespace gapchamp
