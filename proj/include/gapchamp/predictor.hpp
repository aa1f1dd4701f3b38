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
#include <string_view>
#include <vector>

#include "gapchamp/gap_histogram.hpp"
#include "gapchamp/prime_engine.hpp"
#include "gapchamp/singular_series.hpp"

namespace gapchamp {

enum class Model { Asymptotic, Integral };

const char* to_string(Model model) noexcept;
Model parse_model(std::string_view name);

struct Prediction {
    u64 x = 0;
    u64 d = 0;
    Model model = Model::Asymptotic;
    double predicted_count = 0;
};

// Integral of dt / (log t)^2 over [2, x], adaptive Gauss-Kronrod.
double log_squared_integral(double x);

// S(d) x / (log x)^2, or S(d) times the integral above.
Prediction predicted_count(u64 x, u64 d, Model model);

// argmax of S(d) over even d <= sqrt(log x): the primorial floor of sqrt(log x).
std::vector<u64> predicted_champion(u64 x);
std::vector<u64> predicted_champion_from_log(double log_x);

// R(x) = S(floor_P((log x)^2)) / S(floor_P(sqrt(log x))) against the covering
// product of (1 + 1/(p - 2)) over odd primes in [loglog x / 3, 3 loglog x].
// The o(1) factors are taken as 1; diagnostic only.
struct TheoremWitness {
    double log_x = 0;
    u64 small_floor = 0;   // floor_P(sqrt(log x))
    u64 large_floor = 0;   // floor_P((log x)^2)
    double ratio = 1;
    double log_log_x = 0;
    double window_lo = 0;
    double window_hi = 0;
    std::vector<u64> window_primes;
    double covering_product = 1;
    bool within_bound = false;
};

TheoremWitness theorem_witness(u64 x);
TheoremWitness theorem_witness_from_log(double log_x);

// x below which the N* lower bound is reported but not asserted.
inline constexpr u64 kLowerBoundAssertFrom = 10'000;
inline constexpr double kLowerBoundCoefficient = 1.32;

struct LowerBoundWitness {
    u64 x = 0;
    u64 n_star = 0;
    double threshold = 0;  // 1.32 x / (log x)^2
    bool holds = false;
    bool report_only = false;

    bool passes() const noexcept { return report_only || holds; }
};

LowerBoundWitness nstar_lower_bound_check(const GapHistogram& histogram, u64 x);
LowerBoundWitness nstar_lower_bound_check(u64 x, const SieveConfig& config = {});

struct LargeGapWitness {
    u64 x = 0;
    double log_x_sq = 0;
    u64 gaps_checked = 0;        // distinct observed d
    u64 large_gaps_checked = 0;  // distinct observed d >= (log x)^2
    u64 max_observed_gap = 0;
    u64 weighted_sum = 0;        // sum d N(x, d) <= x
    bool per_gap_holds = false;  // N(x, d) <= x / d for all observed d
    bool large_gap_holds = false;  // N(x, d) <= x / (log x)^2 for d >= (log x)^2

    bool holds() const noexcept { return per_gap_holds && large_gap_holds; }
};

LargeGapWitness large_gap_bound_check(const GapHistogram& histogram, u64 x);
LargeGapWitness large_gap_bound_check(u64 x, const SieveConfig& config = {});

}  // namespace gapchamp
