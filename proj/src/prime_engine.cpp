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

#include "gapchamp/prime_engine.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <condition_variable>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "gapchamp/error.hpp"

namespace gapchamp {

namespace {

u64 isqrt(u64 n) {
    u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && (r > n / r)) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

}  // namespace

void SieveConfig::validate() const {
    if (limit < 2) fail(ErrorKind::Domain, "sieve limit must be >= 2");
    if (limit > kMaxLimit) fail(ErrorKind::Range, "sieve limit exceeds 64-bit working range");
    if (segment_size < kMinSegmentSize)
        fail(ErrorKind::Argument, "segment_size must be >= " + std::to_string(kMinSegmentSize));
    if (segment_size > (u64{1} << 40)) fail(ErrorKind::Argument, "segment_size too large");
    if (worker_count < 1) fail(ErrorKind::Argument, "worker_count must be >= 1");
}

u64 SieveConfig::tile_count() const {
    validate();
    return limit / tile_span() + 1;
}

Range SieveConfig::tile(u64 index) const {
    if (index >= tile_count())
        fail(ErrorKind::Range, "tile index " + std::to_string(index) + " out of range");
    const u64 span = tile_span();
    const u64 lo = std::max<u64>(2, index * span);
    const u64 hi = std::min(limit, index * span + (span - 1));
    return {lo, hi};
}

BasePrimes::BasePrimes(u64 limit) : limit_(limit) {
    const u64 root = isqrt(limit);
    if (root < 3) return;
    // index i <-> 2i + 1
    std::vector<bool> composite(root / 2 + 1, false);
    for (u64 i = 1; i < composite.size(); ++i) {
        if (composite[i]) continue;
        const u64 p = 2 * i + 1;
        primes_.push_back(static_cast<std::uint32_t>(p));
        for (u64 j = p * p / 2; j < composite.size(); j += p) composite[j] = true;
    }
}

void SegmentSieve::sieve(u64 lo, u64 hi) {
    if (hi > base_->limit())
        fail(ErrorKind::Range, "segment exceeds base prime coverage");
    lo_ = lo;
    hi_ = hi;
    has_two_ = lo <= 2 && hi >= 2;
    first_odd_ = lo | 1;
    if (hi < first_odd_ || lo > hi) {
        bit_count_ = 0;
        words_.clear();
        return;
    }
    bit_count_ = (hi - first_odd_) / 2 + 1;
    words_.assign((bit_count_ + 63) / 64, 0);
    if (first_odd_ == 1) words_[0] |= 1;

    std::uint64_t* const words = words_.data();
    const u64 bits = bit_count_;
    for (const std::uint32_t p32 : base_->odd_primes()) {
        const u64 p = p32;
        const u64 square = p * p;
        if (square > hi) break;
        u64 start = square;
        if (start < first_odd_) {
            start = (first_odd_ + p - 1) / p * p;
            if ((start & 1) == 0) start += p;
        }
        for (u64 i = (start - first_odd_) / 2; i < bits; i += p)
            words[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
}

u64 SegmentSieve::count() const {
    u64 n = has_two_ ? 1 : 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = ~words_[w];
        if (w + 1 == words_.size() && (bit_count_ & 63) != 0)
            bits &= (std::uint64_t{1} << (bit_count_ & 63)) - 1;
        n += static_cast<u64>(std::popcount(bits));
    }
    return n;
}

SegmentSummary SegmentSieve::summarize() const {
    SegmentSummary out;
    out.range_start = lo_;
    out.range_end = hi_;
    std::vector<u64> dense;
    u64 prev = 0;
    u64 n = 0;
    for_each_prime([&](u64 p) {
        if (n == 0) {
            out.first_prime = p;
        } else {
            const u64 gap = p - prev;
            if (gap >= dense.size()) dense.resize(gap + 1, 0);
            ++dense[gap];
        }
        prev = p;
        ++n;
    });
    if (n != 0) out.last_prime = prev;
    out.prime_count = n;
    out.interior_histogram.set_upper_bound_x(hi_);
    for (u64 gap = 0; gap < dense.size(); ++gap) out.interior_histogram.add(gap, dense[gap]);
    return out;
}

SegmentSummary sieve_range(const BasePrimes& base, Range range) {
    if (range.lo > range.hi) fail(ErrorKind::Argument, "empty range");
    SegmentSieve sieve(base);
    sieve.sieve(range.lo, range.hi);
    return sieve.summarize();
}

SegmentSummary sieve_segment(const SieveConfig& config, const BasePrimes& base, u64 index) {
    return sieve_range(base, config.tile(index));
}

SegmentSummary sieve_segment(const SieveConfig& config, u64 index) {
    config.validate();
    const BasePrimes base(config.limit);
    return sieve_segment(config, base, index);
}

std::size_t sieve_ranges(const BasePrimes& base, std::span<const Range> ranges,
                         unsigned workers, const SegmentConsumer& consume) {
    const std::size_t n = ranges.size();
    if (workers <= 1 || n <= 1) {
        SegmentSieve sieve(base);
        for (std::size_t i = 0; i < n; ++i) {
            sieve.sieve(ranges[i].lo, ranges[i].hi);
            if (!consume(i, sieve.summarize())) return i + 1;
        }
        return n;
    }

    const std::size_t window = 4 * static_cast<std::size_t>(workers);
    std::vector<std::optional<SegmentSummary>> slots(n);
    std::mutex mutex;
    std::condition_variable ready, space;
    std::size_t next = 0, consumed = 0;
    bool stop = false;
    std::exception_ptr error;

    auto work = [&] {
        SegmentSieve sieve(base);
        for (;;) {
            std::size_t i;
            {
                std::unique_lock lock(mutex);
                space.wait(lock, [&] { return stop || next >= n || next < consumed + window; });
                if (stop || next >= n) return;
                i = next++;
            }
            try {
                sieve.sieve(ranges[i].lo, ranges[i].hi);
                SegmentSummary summary = sieve.summarize();
                std::lock_guard lock(mutex);
                slots[i] = std::move(summary);
            } catch (...) {
                std::lock_guard lock(mutex);
                if (!error) error = std::current_exception();
                stop = true;
                space.notify_all();
            }
            ready.notify_one();
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(std::min<std::size_t>(workers, n));
    for (unsigned t = 0; t < workers && t < n; ++t) pool.emplace_back(work);

    std::size_t done = 0;
    std::exception_ptr consume_error;
    for (std::size_t i = 0; i < n; ++i) {
        SegmentSummary summary;
        {
            std::unique_lock lock(mutex);
            ready.wait(lock, [&] { return slots[i].has_value() || error != nullptr; });
            if (error) break;
            summary = std::move(*slots[i]);
            slots[i].reset();
            consumed = i + 1;
        }
        space.notify_all();
        bool keep_going = false;
        try {
            keep_going = consume(i, summary);
        } catch (...) {
            consume_error = std::current_exception();
        }
        done = i + 1;
        if (!keep_going) break;
    }
    {
        std::lock_guard lock(mutex);
        stop = true;
    }
    space.notify_all();
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    if (consume_error) std::rethrow_exception(consume_error);
    return done;
}

std::vector<u64> primes_up_to(u64 x) {
    std::vector<u64> out;
    if (x >= 100) out.reserve(static_cast<std::size_t>(1.26 * x / std::log(double(x))));
    for_each_prime(2, x, [&](u64 p) { out.push_back(p); });
    return out;
}

u64 prime_count(u64 x) {
    if (x < 2) return 0;
    if (x > kMaxLimit) fail(ErrorKind::Range, "prime_count bound exceeds working range");
    const BasePrimes base(x);
    SegmentSieve sieve(base);
    const u64 span = 2 * kDefaultSegmentSize;
    u64 total = 0;
    for (u64 start = 2;;) {
        const u64 end = (x - start < span - 1) ? x : start + span - 1;
        sieve.sieve(start, end);
        total += sieve.count();
        if (end == x) break;
        start = end + 1;
    }
    return total;
}

double chebyshev_theta(u64 x) {
    long double sum = 0;
    for_each_prime(2, x, [&](u64 p) { sum += std::log(static_cast<long double>(p)); });
    return static_cast<double>(sum);
}

double mertens_reciprocal_sum(u64 x) {
    long double sum = 0;
    for_each_prime(2, x, [&](u64 p) { sum += 1.0L / static_cast<long double>(p); });
    return static_cast<double>(sum);
}

}  // namespace gapchamp
