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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "gapchamp/gap_histogram.hpp"

namespace gapchamp {

using u64 = std::uint64_t;

inline constexpr u64 kDefaultSegmentSize = u64{1} << 20;
inline constexpr u64 kMinSegmentSize = 64;
// Largest accepted sieve limit; leaves headroom for odd-candidate arithmetic.
inline constexpr u64 kMaxLimit = ~u64{0} - (u64{1} << 33);

// Inclusive integer interval [lo, hi].
struct Range {
    u64 lo = 0;
    u64 hi = 0;

    bool operator==(const Range&) const = default;
};

struct SieveConfig {
    u64 limit = 2;
    u64 segment_size = kDefaultSegmentSize;  // odd candidates per tile
    unsigned worker_count = 1;

    void validate() const;

    // Tile i covers [2 * segment_size * i, 2 * segment_size * (i + 1) - 1],
    // clipped to [2, limit].
    u64 tile_span() const noexcept { return 2 * segment_size; }
    u64 tile_count() const;
    Range tile(u64 index) const;
};

struct SegmentSummary {
    u64 range_start = 0;
    u64 range_end = 0;
    std::optional<u64> first_prime;
    std::optional<u64> last_prime;
    GapHistogram interior_histogram;
    u64 prime_count = 0;
};

// Odd primes up to sqrt(limit), computed once and shared read-only.
class BasePrimes {
public:
    explicit BasePrimes(u64 limit);

    u64 limit() const noexcept { return limit_; }
    std::span<const std::uint32_t> odd_primes() const noexcept { return primes_; }

private:
    u64 limit_;
    std::vector<std::uint32_t> primes_;
};

// Bit-packed odd-only sieve window. One instance per worker; storage is
// reused across windows.
class SegmentSieve {
public:
    explicit SegmentSieve(const BasePrimes& base) : base_(&base) {}

    // Sieves [lo, hi]; hi must not exceed base.limit().
    void sieve(u64 lo, u64 hi);

    // Visits every prime in the last sieved window in ascending order.
    template <class Visit>
    void for_each_prime(Visit&& visit) const {
        if (has_two_) visit(u64{2});
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = ~words_[w];
            if (w + 1 == words_.size() && (bit_count_ & 63) != 0)
                bits &= (std::uint64_t{1} << (bit_count_ & 63)) - 1;
            while (bits != 0) {
                const unsigned b = static_cast<unsigned>(__builtin_ctzll(bits));
                visit(first_odd_ + 2 * (64 * static_cast<u64>(w) + b));
                bits &= bits - 1;
            }
        }
    }

    u64 count() const;
    SegmentSummary summarize() const;

private:
    const BasePrimes* base_;
    std::vector<std::uint64_t> words_;  // set bit = composite
    u64 lo_ = 0, hi_ = 0;
    u64 first_odd_ = 0;
    u64 bit_count_ = 0;
    bool has_two_ = false;
};

SegmentSummary sieve_range(const BasePrimes& base, Range range);
SegmentSummary sieve_segment(const SieveConfig& config, u64 index);
SegmentSummary sieve_segment(const SieveConfig& config, const BasePrimes& base, u64 index);

// Sieves `ranges` (ascending, disjoint, within base.limit()) on `workers`
// threads and hands each summary to `consume` in range order. Stops early
// when `consume` returns false. Returns the number of summaries consumed.
using SegmentConsumer = std::function<bool(std::size_t index, const SegmentSummary&)>;
std::size_t sieve_ranges(const BasePrimes& base, std::span<const Range> ranges,
                         unsigned workers, const SegmentConsumer& consume);

// Sequential visit of all primes in [lo, hi].
template <class Visit>
void for_each_prime(u64 lo, u64 hi, Visit&& visit, u64 window = kDefaultSegmentSize) {
    if (hi < 2 || lo > hi) return;
    BasePrimes base(hi);
    SegmentSieve sieve(base);
    const u64 span = 2 * window;
    for (u64 start = lo < 2 ? 2 : lo;;) {
        const u64 end = (hi - start < span - 1) ? hi : start + span - 1;
        sieve.sieve(start, end);
        sieve.for_each_prime(visit);
        if (end == hi) break;
        start = end + 1;
    }
}

std::vector<u64> primes_up_to(u64 x);
u64 prime_count(u64 x);
// Sum of log p over primes p <= x.
double chebyshev_theta(u64 x);
// Sum of 1/p over primes p <= x.
double mertens_reciprocal_sum(u64 x);

}  // namespace gapchamp
