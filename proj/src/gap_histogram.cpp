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

#include "gapchamp/gap_histogram.hpp"

#include <sstream>

namespace gapchamp {

void GapHistogram::add(std::uint64_t gap, std::uint64_t n) {
    if (n != 0) counts_[gap] += n;
}

void GapHistogram::merge(const GapHistogram& other) {
    for (const auto& [gap, n] : other.counts_) counts_[gap] += n;
    if (other.upper_bound_x_ > upper_bound_x_) upper_bound_x_ = other.upper_bound_x_;
}

std::uint64_t GapHistogram::count(std::uint64_t gap) const {
    const auto it = counts_.find(gap);
    return it == counts_.end() ? 0 : it->second;
}

std::uint64_t GapHistogram::total_gaps() const {
    std::uint64_t total = 0;
    for (const auto& [gap, n] : counts_) total += n;
    return total;
}

std::uint64_t GapHistogram::gap_sum() const {
    std::uint64_t total = 0;
    for (const auto& [gap, n] : counts_) total += gap * n;
    return total;
}

std::string GapHistogram::to_csv() const {
    std::ostringstream out;
    out << "d,count\n";
    for (const auto& [gap, n] : counts_) out << gap << ',' << n << '\n';
    return out.str();
}

}  // namespace gapchamp
