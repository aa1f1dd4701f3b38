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
#include <span>
#include <vector>

#include "gapchamp/prime_engine.hpp"

namespace gapchamp {

using i64 = std::int64_t;

inline constexpr u64 kDefaultTruncation = 1'000'000;
inline constexpr double kEulerGamma = 0.57721566490153286061;

// A value together with a rigorous bound on |true - value|.
struct SeriesValue {
    double value = 0;
    double error_bound = 0;
    u64 truncation_prime = 0;

    double lower() const noexcept { return value - error_bound; }
    double upper() const noexcept { return value + error_bound; }
    bool contains(double x) const noexcept { return lower() <= x && x <= upper(); }
    bool overlaps(const SeriesValue& o) const noexcept {
        return lower() <= o.upper() && o.lower() <= upper();
    }
};

// prod over odd primes p <= truncation_prime of (1 - 1/(p-1)^2).
SeriesValue twin_prime_constant(u64 truncation_prime);
// twin_prime_constant(kDefaultTruncation), computed once.
const SeriesValue& twin_prime_constant();

// prod over odd primes p | d of (p - 1)/(p - 2), ascending p.
double odd_support_factor(u64 d);

// 0 for odd d; 2 C2 prod_{p | d, p > 2} (p-1)/(p-2) for even d.
SeriesValue singular_series(i64 d, const SeriesValue& twin_constant);
SeriesValue singular_series(i64 d);

// Number of distinct residues of `offsets` modulo the prime p.
unsigned nu_residues(std::span<const i64> offsets, u64 p);

// The offset set {0, d', d}.
struct TripleConfig {
    i64 d_prime = 0;
    i64 d = 0;
    u64 delta = 0;  // d' d (d - d')

    static TripleConfig make(i64 d_prime, i64 d);
};

std::vector<u64> prime_factors(u64 n);

// prod_p (1 - 1/p)^-3 (1 - nu(p)/p): exact over p | delta, truncated at
// truncation_prime elsewhere.
SeriesValue triple_singular_series(const TripleConfig& cfg, u64 truncation_prime);

// prod over primes p <= x of (1 - 1/p).
double mertens_product(u64 x);

// Fitted over all admissible triples with d <= 256: the largest ratio
// S({0,d',d})/(log delta)^2 is 0.1907, at d = 6, d' = 2.
inline constexpr double kBound5Constant = 0.2;

struct Bound5Witness {
    TripleConfig triple;
    SeriesValue value;
    double finite_bound = 0;    // prod_{p | delta} (1 - 1/p)^-2
    double log_delta_sq = 0;
    double ratio = 0;           // value / (log delta)^2
    double constant = kBound5Constant;
    double epsilon = 0;
    double d_pow_epsilon = 0;
    bool within_finite_bound = false;
    bool within_log_bound = false;

    bool passes() const noexcept { return within_finite_bound && within_log_bound; }
};

Bound5Witness check_bound5(const TripleConfig& cfg, double epsilon,
                           double constant = kBound5Constant);

}  // namespace gapchamp
