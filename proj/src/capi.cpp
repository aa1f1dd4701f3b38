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

#include "gapchamp/gapchamp.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <iterator>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <thread>

#include "gapchamp/error.hpp"
#include "gapchamp/gap_stats.hpp"
#include "gapchamp/json_io.hpp"
#include "gapchamp/predictor.hpp"
#include "gapchamp/primorial.hpp"
#include "gapchamp/runner.hpp"
#include "gapchamp/singular_series.hpp"

struct gch_histogram {
    gapchamp::GapHistogram histogram;
};

struct gch_report {
    gapchamp::ChampionReport report;
};

struct gch_run {
    gapchamp::RunOptions options;
    std::optional<gapchamp::Checkpoint> state;
};

namespace {

using namespace gapchamp;

thread_local std::string last_error;

gch_status status_of(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Domain: return GCH_ERR_DOMAIN;
        case ErrorKind::Range: return GCH_ERR_RANGE;
        case ErrorKind::Argument: return GCH_ERR_ARGUMENT;
        case ErrorKind::Resource: return GCH_ERR_RESOURCE;
        case ErrorKind::Precision: return GCH_ERR_PRECISION;
        case ErrorKind::Checkpoint: return GCH_ERR_CHECKPOINT;
        case ErrorKind::Io: return GCH_ERR_IO;
    }
    return GCH_ERR_INTERNAL;
}

template <class F>
gch_status guarded(F&& body) noexcept {
    try {
        last_error.clear();
        body();
        return GCH_OK;
    } catch (const Error& e) {
        last_error = e.what();
        return status_of(e.kind());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return GCH_ERR_RESOURCE;
    } catch (const std::exception& e) {
        last_error = e.what();
        return GCH_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown exception";
        return GCH_ERR_INTERNAL;
    }
}

template <class T>
void require(const T* p, const char* name) {
    if (p == nullptr) fail(ErrorKind::Argument, std::string(name) + " must not be NULL");
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

SieveConfig to_config(const gch_sieve_config* cfg) {
    const gch_sieve_config c = cfg ? *cfg : gch_sieve_config_default();
    SieveConfig out;
    out.segment_size = c.segment_size;
    out.worker_count = c.worker_count;
    return out;
}

Model to_model(gch_model model) {
    if (model == GCH_MODEL_ASYMPTOTIC) return Model::Asymptotic;
    if (model == GCH_MODEL_INTEGRAL) return Model::Integral;
    fail(ErrorKind::Argument, "unknown model");
}

void assign(gch_series_value* out, const SeriesValue& v) {
    out->value = v.value;
    out->error_bound = v.error_bound;
    out->truncation_prime = v.truncation_prime;
}

}  // namespace

extern "C" {

const char* gch_version(void) { return "1.0.0"; }

const char* gch_status_name(gch_status status) {
    switch (status) {
        case GCH_OK: return "ok";
        case GCH_ERR_DOMAIN: return "domain error";
        case GCH_ERR_RANGE: return "range error";
        case GCH_ERR_ARGUMENT: return "argument error";
        case GCH_ERR_RESOURCE: return "resource error";
        case GCH_ERR_PRECISION: return "precision error";
        case GCH_ERR_CHECKPOINT: return "checkpoint error";
        case GCH_ERR_IO: return "i/o error";
        case GCH_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* gch_last_error(void) { return last_error.c_str(); }

void gch_string_free(char* s) { std::free(s); }

gch_sieve_config gch_sieve_config_default(void) {
    gch_sieve_config cfg{kDefaultSegmentSize, 1};
    unsigned workers = std::thread::hardware_concurrency();
    if (const char* env = std::getenv("GAPCHAMP_THREADS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= 4096) workers = static_cast<unsigned>(v);
    }
    cfg.worker_count = workers == 0 ? 1 : workers;
    return cfg;
}

gch_status gch_prime_count(uint64_t x, uint64_t* out) {
    return guarded([&] {
        require(out, "out");
        *out = prime_count(x);
    });
}

gch_status gch_chebyshev_theta(uint64_t x, double* out) {
    return guarded([&] {
        require(out, "out");
        if (x < 2) fail(ErrorKind::Domain, "theta requires x >= 2");
        *out = chebyshev_theta(x);
    });
}

gch_status gch_mertens_reciprocal_sum(uint64_t x, double* out) {
    return guarded([&] {
        require(out, "out");
        if (x < 2) fail(ErrorKind::Domain, "reciprocal sum requires x >= 2");
        *out = mertens_reciprocal_sum(x);
    });
}

gch_status gch_mertens_product(uint64_t x, double* out) {
    return guarded([&] {
        require(out, "out");
        *out = mertens_product(x);
    });
}

gch_status gch_histogram_compute(uint64_t x, const gch_sieve_config* cfg, gch_histogram** out) {
    return guarded([&] {
        require(out, "out");
        *out = new gch_histogram{gap_histogram(x, to_config(cfg))};
    });
}

void gch_histogram_free(gch_histogram* h) { delete h; }

uint64_t gch_histogram_upper_bound(const gch_histogram* h) { return h ? h->histogram.upper_bound_x() : 0; }

size_t gch_histogram_size(const gch_histogram* h) { return h ? h->histogram.counts().size() : 0; }

gch_status gch_histogram_entry(const gch_histogram* h, size_t index, uint64_t* d, uint64_t* count) {
    return guarded([&] {
        require(h, "histogram");
        require(d, "d");
        require(count, "count");
        const auto& counts = h->histogram.counts();
        if (index >= counts.size()) fail(ErrorKind::Range, "histogram index out of range");
        auto it = counts.begin();
        std::advance(it, static_cast<std::ptrdiff_t>(index));
        *d = it->first;
        *count = it->second;
    });
}

uint64_t gch_histogram_count(const gch_histogram* h, uint64_t d) { return h ? h->histogram.count(d) : 0; }

gch_status gch_histogram_csv(const gch_histogram* h, char** out) {
    return guarded([&] {
        require(h, "histogram");
        require(out, "out");
        *out = dup_string(h->histogram.to_csv());
    });
}

gch_status gch_champions(uint64_t x, const gch_sieve_config* cfg, gch_report** out) {
    return guarded([&] {
        require(out, "out");
        *out = new gch_report{champions(x, to_config(cfg))};
    });
}

void gch_report_free(gch_report* r) { delete r; }
uint64_t gch_report_x(const gch_report* r) { return r ? r->report.x : 0; }
uint64_t gch_report_n_star(const gch_report* r) { return r ? r->report.n_star : 0; }
uint64_t gch_report_total_gaps(const gch_report* r) { return r ? r->report.total_gaps : 0; }
size_t gch_report_champion_count(const gch_report* r) { return r ? r->report.champions.size() : 0; }

uint64_t gch_report_champion(const gch_report* r, size_t index) {
    return (r && index < r->report.champions.size()) ? r->report.champions[index] : 0;
}

gch_status gch_report_json(const gch_report* r, char** out) {
    return guarded([&] {
        require(r, "report");
        require(out, "out");
        *out = dup_string(to_json(r->report).dump());
    });
}

gch_status gch_pi2(uint64_t x, uint64_t d, uint64_t* out) {
    return guarded([&] {
        require(out, "out");
        *out = pi2(x, d);
    });
}

gch_status gch_pi3(uint64_t x, uint64_t d, uint64_t d_prime, uint64_t* out) {
    return guarded([&] {
        require(out, "out");
        *out = pi3(x, d, d_prime);
    });
}

gch_status gch_twin_prime_constant(uint64_t truncation_prime, gch_series_value* out) {
    return guarded([&] {
        require(out, "out");
        assign(out, twin_prime_constant(truncation_prime));
    });
}

gch_status gch_singular_series(int64_t d, gch_series_value* out) {
    return guarded([&] {
        require(out, "out");
        assign(out, singular_series(d));
    });
}

gch_status gch_triple_singular_series(int64_t d_prime, int64_t d, uint64_t truncation_prime,
                                      gch_series_value* out) {
    return guarded([&] {
        require(out, "out");
        const auto cfg = TripleConfig::make(d_prime, d);
        if (truncation_prime == 0) {
            const auto factors = prime_factors(cfg.delta);
            truncation_prime = std::max<uint64_t>(kDefaultTruncation, factors.empty() ? 3 : factors.back());
        }
        assign(out, triple_singular_series(cfg, truncation_prime));
    });
}

gch_status gch_nu_residues(const int64_t* offsets, size_t count, uint64_t p, unsigned* out) {
    return guarded([&] {
        require(offsets, "offsets");
        require(out, "out");
        *out = nu_residues(std::span<const int64_t>(offsets, count), p);
    });
}

gch_status gch_series_json(const gch_series_value* v, char** out) {
    return guarded([&] {
        require(v, "value");
        require(out, "out");
        *out = dup_string(to_json(SeriesValue{v->value, v->error_bound, v->truncation_prime}).dump());
    });
}

gch_status gch_primorial(unsigned k, uint64_t* out) {
    return guarded([&] {
        require(out, "out");
        *out = primorial(k);
    });
}

gch_status gch_theta_characterization(double y, char** json_out) {
    return guarded([&] {
        require(json_out, "json_out");
        *json_out = dup_string(to_json(theta_characterization(y)).dump());
    });
}

gch_status gch_predicted_count(uint64_t x, uint64_t d, gch_model model, double* out) {
    return guarded([&] {
        require(out, "out");
        *out = predicted_count(x, d, to_model(model)).predicted_count;
    });
}

gch_status gch_predict_json(uint64_t x, uint64_t d, gch_model model, int with_observed,
                            const gch_sieve_config* cfg, char** out) {
    return guarded([&] {
        require(out, "out");
        const auto prediction = predicted_count(x, d, to_model(model));
        nlohmann::json j = to_json(prediction);
        if (with_observed) {
            const u64 observed = gap_histogram(x, to_config(cfg)).count(d);
            j["observed"] = observed;
            j["ratio"] = prediction.predicted_count > 0
                             ? nlohmann::json(static_cast<double>(observed) / prediction.predicted_count)
                             : nlohmann::json(nullptr);
        }
        *out = dup_string(j.dump());
    });
}

gch_status gch_run_create(uint64_t limit, const uint64_t* checkpoints, size_t checkpoint_count,
                          const gch_sieve_config* cfg, const char* checkpoint_path, gch_run** out) {
    return guarded([&] {
        require(out, "out");
        if (checkpoint_count > 0) require(checkpoints, "checkpoints");
        auto run = std::make_unique<gch_run>();
        run->options.limit = limit;
        if (checkpoints) run->options.checkpoints.assign(checkpoints, checkpoints + checkpoint_count);
        run->options.sieve = to_config(cfg);
        run->options.sieve.limit = limit < 2 ? 2 : limit;
        run->options.sieve.validate();
        if (limit < 3) fail(ErrorKind::Domain, "limit must be >= 3");
        if (run->options.checkpoints.empty()) run->options.checkpoints = default_checkpoints(limit);
        validate_checkpoints(run->options.checkpoints, limit);
        if (checkpoint_path) run->options.checkpoint_path = checkpoint_path;
        *out = run.release();
    });
}

gch_status gch_run_execute(gch_run* run, size_t max_batches, size_t batch_segments,
                           gch_report_callback callback, void* user, int* finished) {
    return guarded([&] {
        require(run, "run");
        RunOptions options = run->options;
        options.resume = run->state;
        options.max_batches = max_batches;
        options.batch_segments = batch_segments;
        if (callback) {
            options.on_report = [&](const ChampionReport& r) { callback(to_json(r).dump().c_str(), user); };
        }
        RunOutcome outcome = run_champions(options);
        run->state = std::move(outcome.state);
        if (finished) *finished = outcome.finished ? 1 : 0;
    });
}

gch_status gch_run_histogram_csv(const gch_run* run, char** out) {
    return guarded([&] {
        require(run, "run");
        require(out, "out");
        *out = dup_string(run->state ? run->state->histogram.to_csv() : GapHistogram().to_csv());
    });
}

gch_status gch_run_reports_json(const gch_run* run, char** out) {
    return guarded([&] {
        require(run, "run");
        require(out, "out");
        nlohmann::json arr = nlohmann::json::array();
        if (run->state)
            for (const auto& r : run->state->reports) arr.push_back(to_json(r));
        *out = dup_string(arr.dump());
    });
}

gch_status gch_run_state_json(const gch_run* run, char** out) {
    return guarded([&] {
        require(run, "run");
        require(out, "out");
        if (!run->state) fail(ErrorKind::Argument, "run has not been executed");
        *out = dup_string(serialize(*run->state));
    });
}

void gch_run_free(gch_run* run) { delete run; }

gch_status gch_verify(const char* suite, unsigned k, uint64_t x, const gch_sieve_config* cfg, int* passed,
                      char** json_out) {
    return guarded([&] {
        require(suite, "suite");
        const Suite s = parse_suite(suite);
        VerifyOptions options;
        if (k != 0) options.k = k;
        if (x != 0) options.x = x;
        options.sieve = to_config(cfg);
        const auto results = run_verify(s, options);
        const auto report = verify_report(s, results);
        if (passed) *passed = report.at("passed").get<bool>() ? 1 : 0;
        if (json_out) *json_out = dup_string(report.dump());
    });
}

}  // extern "C"
