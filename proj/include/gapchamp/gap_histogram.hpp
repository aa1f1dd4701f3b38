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
#include <map>
#include <string>

namespace gapchamp {

// Sparse counts d -> N(x, d) of gaps between consecutive primes up to
// upper_bound_x. Fragments produced per sieve segment are merged in tile
// order by the caller.
class GapHistogram {
public:
    using Counts = std::map<std::uint64_t, std::uint64_t>;

    GapHistogram() = default;
    explicit GapHistogram(std::uint64_t upper_bound_x) : upper_bound_x_(upper_bound_x) {}

    void add(std::uint64_t gap, std::uint64_t n = 1);
    void merge(const GapHistogram& other);

    std::uint64_t count(std::uint64_t gap) const;
    const Counts& counts() const noexcept { return counts_; }
    bool empty() const noexcept { return counts_.empty(); }

    // Number of gaps, i.e. pi(x) - 1 for x >= 2.
    std::uint64_t total_gaps() const;
    // Sum of d * N(x, d); telescopes to (largest prime <= x) - 2.
    std::uint64_t gap_sum() const;

    std::uint64_t upper_bound_x() const noexcept { return upper_bound_x_; }
    void set_upper_bound_x(std::uint64_t x) noexcept { upper_bound_x_ = x; }

    // "d,count" header, ascending d, exact integers, trailing newline.
    std::string to_csv() const;

    bool operator==(const GapHistogram&) const = default;

private:
    Counts counts_;
    std::uint64_t upper_bound_x_ = 0;
};

}  // namespace gapchamp
