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

#include "gapchamp/predictor.hpp"

#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "gapchamp/error.hpp"
#include "gapchamp/gap_stats.hpp"
#include "gapchamp/primorial.hpp"

namespace gapchamp {

namespace {

void require_lower_bound_domain(u64 x) {
    if (x < 1000) fail(ErrorKind::Domain, "bound checks require x >= 1000");
}

}  // namespace

const char* to_string(Model model) noexcept {
    return model == Model::Integral ? "integral" : "asymptotic";
}

Model parse_model(std::string_view name) {
    if (name == "asymptotic") return Model::Asymptotic;
    if (name == "integral") return Model::Integral;
    fail(ErrorKind::Argument, "unknown model '" + std::string(name) + "'");
}

double log_squared_integral(double x) {
    if (x <= 2) return 0;
    // t = e^u turns dt/(log t)^2 into e^u / u^2 du.
    auto integrand = [](double u) { return std::exp(u) / (u * u); };
    double error = 0;
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        integrand, std::log(2.0), std::log(x), 20, 1e-13, &error);
}

Prediction predicted_count(u64 x, u64 d, Model model) {
    if (x < 3) fail(ErrorKind::Domain, "prediction requires x >= 3");
    if (d < 1) fail(ErrorKind::Argument, "d must be >= 1");
    Prediction out{x, d, model, 0};
    if (d % 2 != 0) return out;
    const double s = singular_series(static_cast<i64>(d)).value;
    const double xd = static_cast<double>(x);
    if (model == Model::Asymptotic) {
        const double l = std::log(xd);
        out.predicted_count = s * xd / (l * l);
    } else {
        out.predicted_count = s * log_squared_integral(xd);
    }
    return out;
}

std::vector<u64> predicted_champion_from_log(double log_x) {
    const double root = std::sqrt(log_x);
    if (!(root >= 2)) fail(ErrorKind::Domain, "sqrt(log x) < 2: no even d in the window");
    const auto seq = primorial_sequence();
    return {sequence_floor(root, seq)};
}

std::vector<u64> predicted_champion(u64 x) {
    if (x < 10) fail(ErrorKind::Domain, "predicted champion requires x >= 10");
    return predicted_champion_from_log(std::log(static_cast<double>(x)));
}

TheoremWitness theorem_witness_from_log(double log_x) {
    const auto seq = primorial_sequence();
    TheoremWitness w;
    w.log_x = log_x;
    const double root = std::sqrt(log_x);
    if (!(root >= 2)) fail(ErrorKind::Domain, "sqrt(log x) < 2");
    w.small_floor = sequence_floor(root, seq);
    w.large_floor = sequence_floor(log_x * log_x, seq);

    // small_floor | large_floor, so the ratio is the product over the extra primes.
    for (const u64 p : prime_factors(w.large_floor))
        if (p > 2 && w.small_floor % p != 0) w.ratio *= 1.0 + 1.0 / static_cast<double>(p - 2);

    w.log_log_x = std::log(log_x);
    w.window_lo = w.log_log_x / 3;
    w.window_hi = 3 * w.log_log_x;
    if (w.window_hi >= 3) {
        for_each_prime(3, static_cast<u64>(std::floor(w.window_hi)), [&](u64 p) {
            if (static_cast<double>(p) < w.window_lo) return;
            w.window_primes.push_back(p);
            w.covering_product *= 1.0 + 1.0 / static_cast<double>(p - 2);
        });
    }
    w.within_bound = w.ratio <= w.covering_product * (1 + 1e-12);
    return w;
}

TheoremWitness theorem_witness(u64 x) {
    if (x < 3) fail(ErrorKind::Domain, "theorem witness requires x >= 3");
    return theorem_witness_from_log(std::log(static_cast<double>(x)));
}

LowerBoundWitness nstar_lower_bound_check(const GapHistogram& histogram, u64 x) {
    require_lower_bound_domain(x);
    LowerBoundWitness w;
    w.x = x;
    w.n_star = make_report(histogram, x).n_star;
    const double l = std::log(static_cast<double>(x));
    w.threshold = kLowerBoundCoefficient * static_cast<double>(x) / (l * l);
    w.holds = static_cast<double>(w.n_star) > w.threshold;
    w.report_only = x < kLowerBoundAssertFrom;
    return w;
}

LowerBoundWitness nstar_lower_bound_check(u64 x, const SieveConfig& config) {
    require_lower_bound_domain(x);
    return nstar_lower_bound_check(gap_histogram(x, config), x);
}

LargeGapWitness large_gap_bound_check(const GapHistogram& histogram, u64 x) {
    require_lower_bound_domain(x);
    LargeGapWitness w;
    w.x = x;
    const double l = std::log(static_cast<double>(x));
    w.log_x_sq = l * l;
    const double cap = static_cast<double>(x) / w.log_x_sq;
    w.per_gap_holds = true;
    w.large_gap_holds = true;
    for (const auto& [gap, n] : histogram.counts()) {
        ++w.gaps_checked;
        w.max_observed_gap = gap;
        w.weighted_sum += gap * n;
        if (gap * n > x) w.per_gap_holds = false;
        if (static_cast<double>(gap) >= w.log_x_sq) {
            ++w.large_gaps_checked;
            if (static_cast<double>(n) > cap) w.large_gap_holds = false;
        }
    }
    if (w.weighted_sum > x) w.per_gap_holds = false;
    return w;
}

LargeGapWitness large_gap_bound_check(u64 x, const SieveConfig& config) {
    require_lower_bound_domain(x);
    return large_gap_bound_check(gap_histogram(x, config), x);
}

}  // namespace gapchamp
