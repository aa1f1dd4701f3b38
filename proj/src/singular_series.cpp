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

#include "gapchamp/singular_series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <string>

#include "gapchamp/error.hpp"

namespace gapchamp {

namespace {

// Rounding allowance for a long double product of n factors returned as double.
double roundoff(double value, u64 factors) {
    constexpr double kDouble = std::numeric_limits<double>::epsilon();
    constexpr double kExtended = static_cast<double>(std::numeric_limits<long double>::epsilon());
    return std::abs(value) * (kDouble + 4 * static_cast<double>(factors + 2) * kExtended);
}

bool is_prime_trial(u64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (u64 i = 3; i <= n / i; i += 2)
        if (n % i == 0) return false;
    return true;
}

u64 positive_mod(i64 a, u64 p) {
    const i64 m = static_cast<i64>(p);
    return static_cast<u64>(((a % m) + m) % m);
}

}  // namespace

SeriesValue twin_prime_constant(u64 truncation_prime) {
    if (truncation_prime < 3) fail(ErrorKind::Argument, "truncation_prime must be >= 3");
    long double product = 1;
    u64 factors = 0;
    for_each_prime(3, truncation_prime, [&](u64 p) {
        const long double q = static_cast<long double>(p - 1);
        product *= 1 - 1 / (q * q);
        ++factors;
    });
    // The omitted tail lies in [exp(-T), 1] with T = 1/(P - 2).
    const double tail = 1.0 / static_cast<double>(truncation_prime - 2);
    SeriesValue out;
    out.value = static_cast<double>(product);
    out.error_bound = -std::expm1(-tail) * out.value + roundoff(out.value, factors);
    out.truncation_prime = truncation_prime;
    return out;
}

const SeriesValue& twin_prime_constant() {
    static const SeriesValue c2 = twin_prime_constant(kDefaultTruncation);
    return c2;
}

std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> out;
    if (n < 2) return out;
    if (n % 2 == 0) {
        out.push_back(2);
        while (n % 2 == 0) n /= 2;
    }
    for (u64 i = 3; i <= n / i; i += 2) {
        if (n % i != 0) continue;
        out.push_back(i);
        while (n % i == 0) n /= i;
    }
    if (n > 1) out.push_back(n);
    return out;
}

double odd_support_factor(u64 d) {
    double f = 1;
    for (const u64 p : prime_factors(d))
        if (p > 2) f *= static_cast<double>(p - 1) / static_cast<double>(p - 2);
    return f;
}

SeriesValue singular_series(i64 d, const SeriesValue& c2) {
    if (d == 0) fail(ErrorKind::Domain, "singular series undefined at d = 0");
    SeriesValue out;
    out.truncation_prime = c2.truncation_prime;
    const u64 magnitude = d < 0 ? static_cast<u64>(-(d + 1)) + 1 : static_cast<u64>(d);
    if (magnitude % 2 != 0) return out;
    const double f = odd_support_factor(magnitude);
    out.value = 2 * c2.value * f;
    out.error_bound = 2 * c2.error_bound * f + roundoff(out.value, 16);
    return out;
}

SeriesValue singular_series(i64 d) { return singular_series(d, twin_prime_constant()); }

unsigned nu_residues(std::span<const i64> offsets, u64 p) {
    if (offsets.empty()) fail(ErrorKind::Argument, "offset set is empty");
    if (!is_prime_trial(p)) fail(ErrorKind::Argument, std::to_string(p) + " is not prime");
    std::vector<u64> residues;
    residues.reserve(offsets.size());
    for (const i64 a : offsets) residues.push_back(positive_mod(a, p));
    std::sort(residues.begin(), residues.end());
    return static_cast<unsigned>(std::unique(residues.begin(), residues.end()) - residues.begin());
}

TripleConfig TripleConfig::make(i64 d_prime, i64 d) {
    if (d < 2 || d % 2 != 0) fail(ErrorKind::Argument, "triple requires even d >= 2");
    if (d_prime < 1 || d_prime >= d) fail(ErrorKind::Argument, "triple requires 1 <= d' < d");
    const unsigned __int128 delta = static_cast<unsigned __int128>(d_prime) * static_cast<unsigned __int128>(d) *
                                    static_cast<unsigned __int128>(d - d_prime);
    if (delta > std::numeric_limits<u64>::max()) fail(ErrorKind::Range, "delta = d' d (d - d') overflows 64 bits");
    return {d_prime, d, static_cast<u64>(delta)};
}

SeriesValue triple_singular_series(const TripleConfig& cfg, u64 truncation_prime) {
    if (truncation_prime < 3) fail(ErrorKind::Argument, "truncation_prime must be >= 3");
    const auto factors = prime_factors(cfg.delta);
    const u64 largest = factors.empty() ? 1 : factors.back();
    if (truncation_prime < largest)
        fail(ErrorKind::Argument, "truncation_prime " + std::to_string(truncation_prime) +
                                      " is below the largest prime factor " + std::to_string(largest) +
                                      " of delta");
    SeriesValue out;
    out.truncation_prime = truncation_prime;
    const i64 offsets[] = {0, cfg.d_prime, cfg.d};
    long double product = 1;
    u64 count = 0;
    bool vanished = false;
    for_each_prime(2, truncation_prime, [&](u64 p) {
        if (vanished) return;
        unsigned nu = 3;
        if (cfg.delta % p == 0) nu = nu_residues(offsets, p);
        if (nu == p) {
            vanished = true;
            return;
        }
        const long double x = 1.0L / static_cast<long double>(p);
        const long double keep = 1 - x;
        product *= (1 - nu * x) / (keep * keep * keep);
        ++count;
    });
    if (vanished) return out;
    // Beyond the truncation every p misses delta, and
    // -log f(p) = sum_{k>=2} (3^k - 3) x^k / k <= (9/2) x^2 / (1 - 3x), x = 1/p.
    const double P = static_cast<double>(truncation_prime);
    const double tail = 4.5 * (P + 1) / ((P - 2) * P);
    out.value = static_cast<double>(product);
    out.error_bound = -std::expm1(-tail) * out.value + roundoff(out.value, count);
    return out;
}

double mertens_product(u64 x) {
    if (x < 2) fail(ErrorKind::Domain, "mertens_product requires x >= 2");
    long double product = 1;
    for_each_prime(2, x, [&](u64 p) { product *= 1 - 1.0L / static_cast<long double>(p); });
    return static_cast<double>(product);
}

Bound5Witness check_bound5(const TripleConfig& cfg, double epsilon, double constant) {
    if (!(epsilon > 0)) fail(ErrorKind::Argument, "epsilon must be > 0");
    Bound5Witness w;
    w.triple = cfg;
    w.epsilon = epsilon;
    w.constant = constant;
    const auto factors = prime_factors(cfg.delta);
    const u64 truncation = std::max<u64>(kDefaultTruncation, factors.empty() ? 3 : factors.back());
    w.value = triple_singular_series(cfg, truncation);
    long double finite = 1;
    for (const u64 p : factors) {
        const long double keep = 1 - 1.0L / static_cast<long double>(p);
        finite /= keep * keep;
    }
    w.finite_bound = static_cast<double>(finite);
    const double log_delta = std::log(static_cast<double>(cfg.delta));
    w.log_delta_sq = log_delta * log_delta;
    w.ratio = w.value.value / w.log_delta_sq;
    w.d_pow_epsilon = std::pow(static_cast<double>(cfg.d), epsilon);
    w.within_finite_bound = w.value.value <= w.finite_bound;
    w.within_log_bound = w.value.value <= constant * w.log_delta_sq;
    return w;
}

}  // namespace gapchamp
