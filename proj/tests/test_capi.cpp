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

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "gapchamp/gapchamp.h"
#include "oracles.hpp"

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    gch_string_free(s);
    return out;
}

gch_sieve_config small_config() {
    gch_sieve_config cfg = gch_sieve_config_default();
    cfg.segment_size = 4096;
    cfg.worker_count = 2;
    return cfg;
}

void collect(const char* json, void* user) { static_cast<std::vector<std::string>*>(user)->emplace_back(json); }

}  // namespace

TEST_CASE("capi basics") {
    CHECK(std::strlen(gch_version()) > 0);
    CHECK(std::string(gch_status_name(GCH_OK)) == "ok");
    CHECK(std::string(gch_status_name(GCH_ERR_CHECKPOINT)) == "checkpoint error");
    const auto cfg = gch_sieve_config_default();
    CHECK(cfg.segment_size > 0);
    CHECK(cfg.worker_count >= 1);
    gch_string_free(nullptr);
}

TEST_CASE("capi primes") {
    uint64_t n = 0;
    REQUIRE(gch_prime_count(1'000'000, &n) == GCH_OK);
    CHECK(n == 78'498);
    double theta = 0;
    REQUIRE(gch_chebyshev_theta(100, &theta) == GCH_OK);
    double expected = 0;
    for (const auto p : oracle::trial_primes(2, 100)) expected += std::log(static_cast<double>(p));
    CHECK(theta == doctest::Approx(expected).epsilon(1e-14));
    double m = 0;
    CHECK(gch_mertens_product(3, &m) == GCH_OK);
    CHECK(m == doctest::Approx(1.0 / 3));
    CHECK(gch_mertens_reciprocal_sum(10, &m) == GCH_OK);
    CHECK(m == doctest::Approx(0.5 + 1.0 / 3 + 0.2 + 1.0 / 7));

    CHECK(gch_prime_count(10, nullptr) == GCH_ERR_ARGUMENT);
    CHECK(std::strlen(gch_last_error()) > 0);
}

TEST_CASE("capi histogram and champions") {
    const auto cfg = small_config();
    gch_histogram* h = nullptr;
    REQUIRE(gch_histogram_compute(100'000, &cfg, &h) == GCH_OK);
    const auto counts = oracle::gap_counts(oracle::simple_sieve(100'000));
    CHECK(gch_histogram_upper_bound(h) == 100'000);
    REQUIRE(gch_histogram_size(h) == counts.size());
    std::size_t i = 0;
    for (const auto& [d, c] : counts) {
        uint64_t dd = 0, cc = 0;
        REQUIRE(gch_histogram_entry(h, i++, &dd, &cc) == GCH_OK);
        CHECK(dd == d);
        CHECK(cc == c);
        CHECK(gch_histogram_count(h, d) == c);
    }
    uint64_t dd, cc;
    CHECK(gch_histogram_entry(h, counts.size(), &dd, &cc) == GCH_ERR_RANGE);
    char* csv = nullptr;
    REQUIRE(gch_histogram_csv(h, &csv) == GCH_OK);
    CHECK(take(csv).rfind("d,count\n1,1\n2,", 0) == 0);
    gch_histogram_free(h);
    gch_histogram_free(nullptr);

    CHECK(gch_histogram_compute(2, &cfg, &h) == GCH_ERR_DOMAIN);
    gch_sieve_config broken = cfg;
    broken.segment_size = 3;
    CHECK(gch_histogram_compute(1000, &broken, &h) == GCH_ERR_ARGUMENT);

    gch_report* r = nullptr;
    REQUIRE(gch_champions(941, &cfg, &r) == GCH_OK);
    CHECK(gch_report_x(r) == 941);
    REQUIRE(gch_report_champion_count(r) == 2);
    CHECK(gch_report_champion(r, 0) == 4);
    CHECK(gch_report_champion(r, 1) == 6);
    char* json = nullptr;
    REQUIRE(gch_report_json(r, &json) == GCH_OK);
    const auto j = nlohmann::json::parse(take(json));
    CHECK(j["champions"] == nlohmann::json({4, 6}));
    CHECK(j["n_star"] == gch_report_n_star(r));
    CHECK(j["total_gaps"] == gch_report_total_gaps(r));
    gch_report_free(r);
}

TEST_CASE("capi pair counts") {
    uint64_t n = 0;
    REQUIRE(gch_pi2(10'000, 2, &n) == GCH_OK);
    CHECK(n == oracle::pi2(10'000, 2));
    REQUIRE(gch_pi3(10'000, 6, 2, &n) == GCH_OK);
    CHECK(n == oracle::pi3(10'000, 6, 2));
    CHECK(gch_pi2(100'000'000, 2, &n) == GCH_ERR_RESOURCE);
}

TEST_CASE("capi series") {
    gch_series_value v{};
    REQUIRE(gch_twin_prime_constant(1000000, &v) == GCH_OK);
    CHECK(v.value == doctest::Approx(0.6601618606).epsilon(1e-10));
    CHECK(gch_twin_prime_constant(2, &v) == GCH_ERR_ARGUMENT);
    REQUIRE(gch_singular_series(6, &v) == GCH_OK);
    CHECK(v.value == doctest::Approx(2.64065).epsilon(1e-5));
    CHECK(gch_singular_series(0, &v) == GCH_ERR_DOMAIN);
    REQUIRE(gch_triple_singular_series(2, 6, 0, &v) == GCH_OK);
    CHECK(v.value == doctest::Approx(2.85825).epsilon(1e-5));
    CHECK(gch_triple_singular_series(2, 14, 5, &v) == GCH_ERR_ARGUMENT);
    char* json = nullptr;
    REQUIRE(gch_series_json(&v, &json) == GCH_OK);
    const auto j = nlohmann::json::parse(take(json));
    CHECK(j["value"] == v.value);
    CHECK(j["truncation_prime"] == v.truncation_prime);

    const int64_t offsets[] = {0, 2, 4};
    unsigned nu = 0;
    REQUIRE(gch_nu_residues(offsets, 3, 3, &nu) == GCH_OK);
    CHECK(nu == 3);
    CHECK(gch_nu_residues(offsets, 3, 4, &nu) == GCH_ERR_ARGUMENT);
}

TEST_CASE("capi primorials and predictions") {
    uint64_t p = 0;
    REQUIRE(gch_primorial(5, &p) == GCH_OK);
    CHECK(p == 2310);
    CHECK(gch_primorial(16, &p) == GCH_ERR_RANGE);
    char* json = nullptr;
    REQUIRE(gch_theta_characterization(100, &json) == GCH_OK);
    const auto t = nlohmann::json::parse(take(json));
    CHECK(t["floor_value"] == 30);

    double c = 0;
    REQUIRE(gch_predicted_count(22026, 2, GCH_MODEL_ASYMPTOTIC, &c) == GCH_OK);
    CHECK(c == doctest::Approx(290.8).epsilon(1e-3));
    REQUIRE(gch_predicted_count(22026, 3, GCH_MODEL_INTEGRAL, &c) == GCH_OK);
    CHECK(c == 0);

    const auto cfg = small_config();
    REQUIRE(gch_predict_json(1'000'000, 2, GCH_MODEL_ASYMPTOTIC, 1, &cfg, &json) == GCH_OK);
    const auto j = nlohmann::json::parse(take(json));
    CHECK(j["model"] == "asymptotic");
    CHECK(j["observed"] == 8169);
    CHECK(j["ratio"].get<double>() > 1.0);
    CHECK(j["ratio"].get<double>() < 1.3);
}

TEST_CASE("capi resumable run") {
    const auto cfg = small_config();
    const uint64_t cps[] = {1000, 50'000, 200'000};
    gch_run* full = nullptr;
    REQUIRE(gch_run_create(200'000, cps, 3, &cfg, nullptr, &full) == GCH_OK);
    std::vector<std::string> reports;
    int finished = 0;
    REQUIRE(gch_run_execute(full, 0, 0, collect, &reports, &finished) == GCH_OK);
    CHECK(finished == 1);
    CHECK(reports.size() == 3);
    char* csv = nullptr;
    REQUIRE(gch_run_histogram_csv(full, &csv) == GCH_OK);
    const std::string expected = take(csv);

    gch_run* part = nullptr;
    REQUIRE(gch_run_create(200'000, cps, 3, &cfg, nullptr, &part) == GCH_OK);
    std::vector<std::string> seen;
    REQUIRE(gch_run_execute(part, 5, 1, collect, &seen, &finished) == GCH_OK);
    CHECK(finished == 0);
    seen.clear();
    REQUIRE(gch_run_execute(part, 0, 1, collect, &seen, &finished) == GCH_OK);
    CHECK(finished == 1);
    CHECK(seen == reports);
    REQUIRE(gch_run_histogram_csv(part, &csv) == GCH_OK);
    CHECK(take(csv) == expected);

    char* a = nullptr;
    char* b = nullptr;
    REQUIRE(gch_run_state_json(full, &a) == GCH_OK);
    REQUIRE(gch_run_state_json(part, &b) == GCH_OK);
    CHECK(take(a) == take(b));
    gch_run_free(full);
    gch_run_free(part);

    gch_run* bad = nullptr;
    const uint64_t unordered[] = {5000, 1000};
    CHECK(gch_run_create(10'000, unordered, 2, &cfg, nullptr, &bad) == GCH_ERR_ARGUMENT);
    CHECK(bad == nullptr);
}

TEST_CASE("capi verify") {
    const auto cfg = small_config();
    int passed = 0;
    char* json = nullptr;
    REQUIRE(gch_verify("lemma1", 3, 0, &cfg, &passed, &json) == GCH_OK);
    CHECK(passed == 1);
    const auto j = nlohmann::json::parse(take(json));
    CHECK(j["checks"].size() == 2);
    CHECK(gch_verify("nope", 0, 0, &cfg, &passed, &json) == GCH_ERR_ARGUMENT);
    CHECK(gch_verify(nullptr, 0, 0, &cfg, &passed, &json) == GCH_ERR_ARGUMENT);
}
