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

#include "gapchamp/gap_stats.hpp"

#include <algorithm>
#include <string>

#include "gapchamp/error.hpp"

namespace gapchamp {

ChampionReport make_report(const GapHistogram& histogram, u64 x) {
    ChampionReport report;
    report.x = x;
    for (const auto& [gap, n] : histogram.counts()) {
        if (n > report.n_star) {
            report.n_star = n;
            report.champions.assign(1, gap);
        } else if (n == report.n_star && n != 0) {
            report.champions.push_back(gap);
        }
        report.total_gaps += n;
    }
    return report;
}

void GapAccumulator::absorb(const SegmentSummary& segment) {
    if (segment.range_start != processed_up_to_ + 1)
        fail(ErrorKind::Argument, "segment " + std::to_string(segment.range_start) +
                                      " does not continue from " + std::to_string(processed_up_to_));
    histogram_.merge(segment.interior_histogram);
    if (segment.first_prime) {
        if (last_prime_) histogram_.add(*segment.first_prime - *last_prime_);
        last_prime_ = segment.last_prime;
    }
    processed_up_to_ = segment.range_end;
    histogram_.set_upper_bound_x(processed_up_to_);
}

std::vector<Range> plan_ranges(const SieveConfig& config, u64 from, u64 to, std::span<const u64> cuts) {
    config.validate();
    std::vector<Range> out;
    if (from < 2) from = 2;
    if (from > to) return out;
    const u64 span = config.tile_span();
    auto cut = std::lower_bound(cuts.begin(), cuts.end(), from);
    u64 lo = from;
    for (;;) {
        const u64 tile_end = (lo / span) * span + (span - 1);
        u64 hi = std::min(to, tile_end);
        while (cut != cuts.end() && *cut < lo) ++cut;
        if (cut != cuts.end() && *cut < hi) hi = *cut;
        out.push_back({lo, hi});
        if (hi == to) break;
        lo = hi + 1;
    }
    return out;
}

void validate_checkpoints(std::span<const u64> checkpoints, u64 x_max) {
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        if (checkpoints[i] < 3)
            fail(ErrorKind::Argument, "checkpoint " + std::to_string(checkpoints[i]) + " is below 3");
        if (i > 0 && checkpoints[i] <= checkpoints[i - 1])
            fail(ErrorKind::Argument, "checkpoints must be strictly ascending");
        if (checkpoints[i] > x_max)
            fail(ErrorKind::Argument, "checkpoint " + std::to_string(checkpoints[i]) + " exceeds limit");
    }
}

GapHistogram gap_histogram(u64 x, const SieveConfig& config) {
    if (x < 3) fail(ErrorKind::Domain, "no prime gap exists below x = 3");
    SieveConfig cfg = config;
    cfg.limit = x;
    const auto ranges = plan_ranges(cfg, 2, x);
    const BasePrimes base(x);
    GapAccumulator acc;
    sieve_ranges(base, ranges, cfg.worker_count, [&](std::size_t, const SegmentSummary& s) {
        acc.absorb(s);
        return true;
    });
    return acc.histogram();
}

ChampionReport champions(u64 x, const SieveConfig& config) {
    return make_report(gap_histogram(x, config), x);
}

std::vector<ChampionReport> champion_timeline(u64 x_max, std::span<const u64> checkpoints,
                                              const SieveConfig& config) {
    if (x_max < 3) fail(ErrorKind::Domain, "no prime gap exists below x = 3");
    validate_checkpoints(checkpoints, x_max);
    std::vector<ChampionReport> out;
    if (checkpoints.empty()) return out;
    SieveConfig cfg = config;
    cfg.limit = checkpoints.back();
    const auto ranges = plan_ranges(cfg, 2, cfg.limit, checkpoints);
    const BasePrimes base(cfg.limit);
    GapAccumulator acc;
    std::size_t next = 0;
    sieve_ranges(base, ranges, cfg.worker_count, [&](std::size_t, const SegmentSummary& s) {
        acc.absorb(s);
        while (next < checkpoints.size() && checkpoints[next] == acc.processed_up_to())
            out.push_back(make_report(acc.histogram(), checkpoints[next++]));
        return true;
    });
    return out;
}

void ChampionTracker::feed(u64 prime) {
    if (last_) {
        const u64 gap = prime - *last_;
        const u64 n = ++counts_[gap];
        ++total_;
        if (n > n_star_) {
            n_star_ = n;
            champions_.clear();
            champions_.insert(gap);
        } else if (n == n_star_) {
            champions_.insert(gap);
        }
    }
    last_ = prime;
}

ChampionReport ChampionTracker::report(u64 x) const {
    return {x, n_star_, std::vector<u64>(champions_.begin(), champions_.end()), total_};
}

PrimePairCounter::PrimePairCounter(u64 x, u64 cap) : x_(x) {
    if (x < 2) fail(ErrorKind::Domain, "x must be >= 2");
    if (x > cap)
        fail(ErrorKind::Resource, "x = " + std::to_string(x) + " exceeds brute-force cap " + std::to_string(cap));
    member_.assign(x + 1, false);
    primes_ = primes_up_to(x);
    for (const u64 p : primes_) member_[p] = true;
}

u64 PrimePairCounter::pi2(u64 d) const {
    if (d < 1) fail(ErrorKind::Argument, "d must be >= 1");
    u64 n = 0;
    for (const u64 p : primes_)
        if (p > d && member_[p - d]) ++n;
    return n;
}

u64 PrimePairCounter::pi3(u64 d, u64 d_prime) const {
    if (d_prime < 1 || d_prime >= d) fail(ErrorKind::Argument, "pi3 requires 1 <= d' < d");
    u64 n = 0;
    for (const u64 p : primes_)
        if (p > d && member_[p - d] && member_[p - d_prime]) ++n;
    return n;
}

u64 pi2(u64 x, u64 d, u64 cap) { return PrimePairCounter(x, cap).pi2(d); }

u64 pi3(u64 x, u64 d, u64 d_prime, u64 cap) {
    if (d_prime < 1 || d_prime >= d) fail(ErrorKind::Argument, "pi3 requires 1 <= d' < d");
    return PrimePairCounter(x, cap).pi3(d, d_prime);
}

SandwichWitness verify_sandwich(const PrimePairCounter& counter, const GapHistogram& histogram, u64 d) {
    if (d < 2 || d % 2 != 0) fail(ErrorKind::Argument, "sandwich check requires even d >= 2");
    SandwichWitness w;
    w.x = counter.x();
    w.d = d;
    w.pi2 = counter.pi2(d);
    for (u64 dp = 1; dp < d; ++dp) w.pi3_sum += counter.pi3(d, dp);
    w.consecutive = histogram.count(d);
    w.upper_holds = w.consecutive <= w.pi2;
    w.lower_holds = w.lower_bound() <= static_cast<std::int64_t>(w.consecutive);
    return w;
}

SandwichWitness verify_sandwich(u64 x, u64 d, u64 cap) {
    if (x < 3) fail(ErrorKind::Domain, "x must be >= 3");
    const PrimePairCounter counter(x, cap);
    return verify_sandwich(counter, gap_histogram(x), d);
}

}  // namespace gapchamp
