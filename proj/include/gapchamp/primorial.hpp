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
#include "gapchamp/singular_series.hpp"

namespace gapchamp {

// Largest k with the k-th primorial below 2^64.
inline constexpr unsigned kMaxPrimorialIndex = 15;
inline constexpr unsigned kMaxLemma1Index = 7;

struct PrimorialEntry {
    unsigned k;
    u64 prime;      // p_k
    u64 primorial;  // 2 * 3 * ... * p_k
};

// Entries k = 1 .. kMaxPrimorialIndex.
const std::vector<PrimorialEntry>& primorial_table();
std::vector<u64> primorial_sequence();

u64 primorial(unsigned k);

// The element a_n of the ascending sequence with a_n <= y < a_{n+1}. When y
// is at or past the last element the floor is undetermined and a range error
// is raised, since the next element is unknown.
u64 sequence_floor(double y, std::span<const u64> sequence);
std::size_t sequence_floor_index(double y, std::span<const u64> sequence);

// Both sides of: floor_P(y) = P_n  <=>  theta(p_n) <= log y < theta(p_{n+1}).
struct ThetaWitness {
    double y = 0;
    unsigned floor_index = 0;   // n from the primorial floor
    u64 floor_value = 0;        // P_n
    unsigned theta_index = 0;   // n from the theta bracketing
    u64 p_n = 0;
    u64 p_next = 0;
    long double theta_n = 0;
    long double log_y = 0;
    long double theta_next = 0;

    bool consistent() const noexcept { return floor_index == theta_index; }
};

ThetaWitness theta_characterization(double y);

struct Lemma1Witness {
    unsigned k = 0;
    u64 primorial = 0;
    SeriesValue target;        // S(P_k)
    SeriesValue best;          // max S(d), even 2 <= d < P_k
    std::vector<u64> maximizers;
    u64 evaluated = 0;
    bool holds = false;        // best.upper() < target.lower()
};

// Exhaustive interval check of S(d) < S(P_k) over even d in [2, P_k).
Lemma1Witness verify_lemma1(unsigned k, const SeriesValue& twin_constant);
Lemma1Witness verify_lemma1(unsigned k);

}  // namespace gapchamp
