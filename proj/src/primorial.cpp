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

#include "gapchamp/primorial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gapchamp/error.hpp"

namespace gapchamp {

namespace {

constexpr u64 kFirstPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};

}  // namespace

const std::vector<PrimorialEntry>& primorial_table() {
    static const std::vector<PrimorialEntry> table = [] {
        std::vector<PrimorialEntry> t;
        u64 product = 1;
        for (unsigned k = 1; k <= kMaxPrimorialIndex; ++k) {
            const u64 p = kFirstPrimes[k - 1];
            product *= p;
            t.push_back({k, p, product});
        }
        return t;
    }();
    return table;
}

std::vector<u64> primorial_sequence() {
    std::vector<u64> out;
    for (const auto& e : primorial_table()) out.push_back(e.primorial);
    return out;
}

u64 primorial(unsigned k) {
    if (k < 1) fail(ErrorKind::Argument, "primorial index must be >= 1");
    if (k > kMaxPrimorialIndex)
        fail(ErrorKind::Range, "primorial P_" + std::to_string(k) + " overflows 64 bits");
    return primorial_table()[k - 1].primorial;
}

std::size_t sequence_floor_index(double y, std::span<const u64> sequence) {
    if (sequence.empty()) fail(ErrorKind::Argument, "empty sequence");
    if (std::isnan(y)) fail(ErrorKind::Domain, "y is NaN");
    const long double ly = y;
    if (ly < static_cast<long double>(sequence.front()))
        fail(ErrorKind::Domain, "y is below the first element of the sequence");
    // u64 -> long double is exact for the 64-bit mantissa format.
    const auto it = std::upper_bound(sequence.begin(), sequence.end(), ly,
                                     [](long double v, u64 a) { return v < static_cast<long double>(a); });
    if (it == sequence.end()) fail(ErrorKind::Range, "y is beyond the tabulated sequence");
    return static_cast<std::size_t>(it - sequence.begin()) - 1;
}

u64 sequence_floor(double y, std::span<const u64> sequence) {
    return sequence[sequence_floor_index(y, sequence)];
}

ThetaWitness theta_characterization(double y) {
    if (!(y >= 2)) fail(ErrorKind::Domain, "theta characterization requires y >= 2");
    const auto seq = primorial_sequence();
    ThetaWitness w;
    w.y = y;
    w.floor_index = static_cast<unsigned>(sequence_floor_index(y, seq)) + 1;
    w.floor_value = seq[w.floor_index - 1];

    w.log_y = std::log(static_cast<long double>(y));
    const long double tol =
        16 * std::numeric_limits<long double>::epsilon() * std::max<long double>(1, w.log_y);
    long double theta = 0;
    w.theta_index = 0;
    for (unsigned n = 1; n <= kMaxPrimorialIndex + 1; ++n) {
        theta += std::log(static_cast<long double>(kFirstPrimes[n - 1]));
        if (theta <= w.log_y + tol) w.theta_index = n;
        if (n == w.floor_index) {
            w.p_n = kFirstPrimes[n - 1];
            w.theta_n = theta;
        } else if (n == w.floor_index + 1) {
            w.p_next = kFirstPrimes[n - 1];
            w.theta_next = theta;
        }
    }
    return w;
}

Lemma1Witness verify_lemma1(unsigned k, const SeriesValue& c2) {
    if (k < 2 || k > kMaxLemma1Index)
        fail(ErrorKind::Argument, "verify_lemma1 supports 2 <= k <= " + std::to_string(kMaxLemma1Index));
    Lemma1Witness w;
    w.k = k;
    w.primorial = primorial(k);
    const u64 top = w.primorial;

    // smallest prime factor table
    std::vector<std::uint32_t> spf(top + 1, 0);
    for (u64 i = 2; i <= top; ++i) {
        if (spf[i] != 0) continue;
        for (u64 j = i; j <= top; j += i)
            if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    }
    auto factor = [&](u64 d) {
        double f = 1;
        while (d > 1) {
            const u64 p = spf[d];
            if (p > 2) f *= static_cast<double>(p - 1) / static_cast<double>(p - 2);
            while (d % p == 0) d /= p;
        }
        return f;
    };

    double best = 0;
    for (u64 d = 2; d < top; d += 2) {
        const double f = factor(d);
        ++w.evaluated;
        if (f > best) {
            best = f;
            w.maximizers.assign(1, d);
        } else if (f == best) {
            w.maximizers.push_back(d);
        }
    }

    w.target = singular_series(static_cast<i64>(top), c2);
    w.best = singular_series(static_cast<i64>(w.maximizers.front()), c2);
    if (w.best.value >= w.target.value) {
        w.holds = false;
    } else if (w.best.upper() < w.target.lower()) {
        w.holds = true;
    } else {
        fail(ErrorKind::Precision, "intervals for S(" + std::to_string(w.maximizers.front()) + ") and S(P_" +
                                       std::to_string(k) + ") overlap; raise the truncation");
    }
    return w;
}

Lemma1Witness verify_lemma1(unsigned k) { return verify_lemma1(k, twin_prime_constant()); }

}  // namespace gapchamp
