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

#include <cmath>
#include <random>

#include "doctest.h"
#include "gapchamp/error.hpp"
#include "gapchamp/primorial.hpp"
#include "oracles.hpp"

using namespace gapchamp;

namespace {

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::Io;
}

}  // namespace

TEST_CASE("primorial values") {
    CHECK(primorial(1) == 2);
    CHECK(primorial(2) == 6);
    CHECK(primorial(3) == 30);
    CHECK(primorial(4) == 210);
    CHECK(primorial(5) == 2310);
    CHECK(primorial(6) == 30030);
    CHECK(primorial(15) == 614889782588491410ULL);
    CHECK(kind_of([] { primorial(16); }) == ErrorKind::Range);
    CHECK(kind_of([] { primorial(0); }) != ErrorKind::Io);

    const auto primes = oracle::trial_primes(2, 50);
    const auto& table = primorial_table();
    REQUIRE(table.size() == kMaxPrimorialIndex);
    u64 product = 1;
    for (unsigned k = 1; k <= kMaxPrimorialIndex; ++k) {
        product *= primes[k - 1];
        CHECK(table[k - 1].k == k);
        CHECK(table[k - 1].prime == primes[k - 1]);
        CHECK(table[k - 1].primorial == product);
    }
    // the next one does not fit
    CHECK(product > ~u64{0} / primes[kMaxPrimorialIndex]);
}

TEST_CASE("primorial floor") {
    const auto seq = primorial_sequence();
    CHECK(sequence_floor(100, seq) == 30);
    CHECK(sequence_floor(30, seq) == 30);
    CHECK(sequence_floor(29.999, seq) == 6);
    CHECK(sequence_floor(2, seq) == 2);
    CHECK(sequence_floor(5.99, seq) == 2);
    CHECK(sequence_floor(1e9, seq) == 223092870);
    CHECK(kind_of([&] { sequence_floor(1.5, seq); }) == ErrorKind::Domain);
    CHECK(kind_of([&] { sequence_floor(1e19, seq); }) == ErrorKind::Range);

    for (const u64 p : seq) {
        const double y = static_cast<double>(p);
        if (static_cast<u64>(y) != p) continue;  // not representable
        const u64 once = sequence_floor(y, seq);
        CHECK(once == p);
        CHECK(sequence_floor(static_cast<double>(once), seq) == once);
    }
    // 614889782588491410 rounds down as a double
    CHECK(sequence_floor(static_cast<double>(primorial(15)), seq) == primorial(14));

    // constant on [a_n, a_{n+1})
    std::mt19937_64 rng(7);
    for (std::size_t n = 0; n + 1 < seq.size(); ++n) {
        std::uniform_real_distribution<double> in(static_cast<double>(seq[n]), static_cast<double>(seq[n + 1]));
        for (int i = 0; i < 50; ++i) {
            const double y = in(rng);
            if (y >= static_cast<double>(seq[n + 1])) continue;
            CHECK(sequence_floor(y, seq) == seq[n]);
        }
    }
}

TEST_CASE("theta characterization") {
    const auto w = theta_characterization(100);
    CHECK(w.consistent());
    CHECK(w.floor_index == 3);
    CHECK(w.floor_value == 30);
    CHECK(w.p_n == 5);
    CHECK(w.p_next == 7);
    CHECK(w.theta_n <= w.log_y);
    CHECK(w.log_y < w.theta_next);

    for (const u64 p : primorial_sequence()) {
        if (p > 1'000'000'000'000ULL) break;
        CAPTURE(p);
        CHECK(theta_characterization(static_cast<double>(p)).consistent());
    }

    std::mt19937_64 rng(20261016);
    std::uniform_real_distribution<double> log_y(std::log(2.0), std::log(1e9));
    for (int i = 0; i < 10'000; ++i) {
        const double y = std::max(2.0, std::exp(log_y(rng)));
        const auto t = theta_characterization(y);
        CAPTURE(y);
        CHECK(t.consistent());
    }
    CHECK(kind_of([] { theta_characterization(1.9); }) == ErrorKind::Domain);
}

TEST_CASE("singular series maximum below primorials") {
    const auto w2 = verify_lemma1(2);
    CHECK(w2.holds);
    CHECK(w2.maximizers == std::vector<u64>{2, 4});
    CHECK(w2.evaluated == 2);

    const auto w3 = verify_lemma1(3);
    CHECK(w3.holds);
    CHECK(w3.maximizers == std::vector<u64>{6, 12, 18, 24});

    for (unsigned k = 2; k <= 5; ++k) {
        const auto w = verify_lemma1(k);
        CAPTURE(k);
        CHECK(w.holds);
        CHECK(w.best.upper() < w.target.lower());
        CHECK(w.maximizers.front() == primorial(k - 1));
        CHECK(w.primorial % w.maximizers.front() == 0);
        for (const u64 d : w.maximizers) {
            CHECK(d < w.primorial);
            CHECK(d % w.maximizers.front() == 0);
        }
        // brute force over every even d with the closed form
        double best = 0;
        for (u64 d = 2; d < w.primorial; d += 2) {
            double f = 1;
            for (const u64 p : oracle::odd_prime_divisors(d)) f *= (static_cast<double>(p) - 1) / (static_cast<double>(p) - 2);
            best = std::max(best, f);
        }
        CHECK(w.best.value == doctest::Approx(2 * twin_prime_constant().value * best).epsilon(1e-13));
    }

    CHECK(kind_of([] { verify_lemma1(1); }) == ErrorKind::Argument);
    CHECK(kind_of([] { verify_lemma1(kMaxLemma1Index + 1); }) == ErrorKind::Argument);

    // a coarse constant cannot separate the intervals
    const auto crude = twin_prime_constant(3);
    CHECK(kind_of([&] { verify_lemma1(3, crude); }) == ErrorKind::Precision);
}
