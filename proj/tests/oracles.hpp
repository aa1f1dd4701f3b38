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

// Independent reference implementations used only by tests. Nothing here
// calls into the engine.
#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include <boost/math/special_functions/expint.hpp>

namespace oracle {

using u64 = std::uint64_t;

inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 i = 2; i * i <= n; ++i)
        if (n % i == 0) return false;
    return true;
}

inline std::vector<u64> trial_primes(u64 lo, u64 hi) {
    std::vector<u64> out;
    for (u64 n = lo; n <= hi; ++n)
        if (is_prime(n)) out.push_back(n);
    return out;
}

// Plain unsegmented byte sieve.
inline std::vector<u64> simple_sieve(u64 x) {
    std::vector<u64> out;
    if (x < 2) return out;
    std::vector<char> composite(x + 1, 0);
    for (u64 i = 2; i <= x; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (u64 j = i * i; j <= x; j += i) composite[j] = 1;
    }
    return out;
}

inline std::map<u64, u64> gap_counts(const std::vector<u64>& primes) {
    std::map<u64, u64> out;
    for (std::size_t i = 1; i < primes.size(); ++i) ++out[primes[i] - primes[i - 1]];
    return out;
}

inline std::vector<u64> champions(const std::map<u64, u64>& counts) {
    u64 best = 0;
    for (const auto& [d, n] : counts) best = std::max(best, n);
    std::vector<u64> out;
    for (const auto& [d, n] : counts)
        if (n == best) out.push_back(d);
    return out;
}

inline u64 pi2(u64 x, u64 d) {
    u64 n = 0;
    for (u64 p = d + 2; p <= x; ++p)
        if (is_prime(p) && is_prime(p - d)) ++n;
    return n;
}

inline u64 pi3(u64 x, u64 d, u64 dp) {
    u64 n = 0;
    for (u64 p = d + 2; p <= x; ++p)
        if (is_prime(p) && is_prime(p - d) && is_prime(p - dp)) ++n;
    return n;
}

inline std::set<u64> odd_prime_divisors(u64 d) {
    std::set<u64> out;
    for (u64 p = 3; p <= d; p += 2)
        if (d % p == 0 && is_prime(p)) out.insert(p);
    return out;
}

// Closed form: integral of dt/(log t)^2 = li(t) - t/log t.
inline double log_squared_integral(double x) {
    auto antiderivative = [](double t) { return boost::math::expint(std::log(t)) - t / std::log(t); };
    return antiderivative(x) - antiderivative(2.0);
}

}  // namespace oracle
