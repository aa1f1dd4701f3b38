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

// Command-line front end. Talks to the engine only through the C API.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gapchamp/gapchamp.h"

namespace {

constexpr int kExitFailedChecks = 1;
constexpr int kExitError = 2;
constexpr int kExitInterrupted = 3;

struct Failure {
    gch_status status;
};

void check(gch_status status) {
    if (status != GCH_OK) throw Failure{status};
}

// Owns a char* returned by the C API.
class ApiString {
public:
    ApiString() = default;
    ApiString(const ApiString&) = delete;
    ApiString& operator=(const ApiString&) = delete;
    ~ApiString() { gch_string_free(ptr_); }

    char** out() { return &ptr_; }
    const char* c_str() const { return ptr_ ? ptr_ : ""; }

private:
    char* ptr_ = nullptr;
};

std::vector<std::uint64_t> parse_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        const auto v = std::stoull(item, &used);
        if (used != item.size()) throw CLI::ValidationError("list", "not an integer: " + item);
        out.push_back(v);
    }
    return out;
}

void print_report(const char* json, void*) {
    std::fputs(json, stdout);
    std::fputc('\n', stdout);
    std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Prime gap statistics: jumping champions, singular series and verification suites"};
    app.require_subcommand(1);

    const gch_sieve_config defaults = gch_sieve_config_default();
    unsigned threads = defaults.worker_count;
    std::uint64_t segment_size = defaults.segment_size;
    auto add_sieve_options = [&](CLI::App* cmd) {
        cmd->add_option("--threads", threads, "Worker threads (default: $GAPCHAMP_THREADS or hardware)")
            ->check(CLI::Range(1u, 4096u));
        cmd->add_option("--segment-size", segment_size, "Odd candidates per sieve tile")->check(CLI::Range(64ull, 1ull << 40));
    };

    // champions
    auto* champions = app.add_subcommand("champions", "Jumping champions D*(x) at checkpoints up to --limit");
    std::uint64_t limit = 0;
    std::string checkpoints_text, resume_path, out_format = "json";
    std::size_t stop_after = 0, batch_segments = 0;
    champions->add_option("--limit", limit, "Upper bound x")->required();
    champions->add_option("--checkpoints", checkpoints_text, "Comma-separated ascending checkpoints");
    champions->add_option("--resume", resume_path, "Checkpoint file (resumed if present, updated as the run goes)");
    champions->add_option("--out", out_format, "json: one report per line; csv: final gap histogram")
        ->check(CLI::IsMember({"json", "csv"}));
    champions->add_option("--batch-segments", batch_segments, "Segments between checkpoint writes");
    champions->add_option("--stop-after-batches", stop_after, "Stop after N batches (leaves a resumable checkpoint)")
        ->group("");
    add_sieve_options(champions);

    // series
    auto* series = app.add_subcommand("series", "Singular series S(d) or the triple series S({0,d',d})");
    std::int64_t series_d = 0;
    std::string triple_text;
    std::uint64_t truncation = 0;
    auto* d_opt = series->add_option("--d", series_d, "Difference d");
    auto* triple_opt = series->add_option("--triple", triple_text, "d',d for the triple {0,d',d}");
    d_opt->excludes(triple_opt);
    series->add_option("--truncation", truncation, "Truncation prime for the triple product");

    // constant
    auto* constant = app.add_subcommand("constant", "Twin prime constant C2 with truncation error bound");
    std::uint64_t constant_truncation = 1'000'000;
    constant->add_option("--truncation", constant_truncation, "Truncation prime")->check(CLI::Range(3ull, 1ull << 40));

    // predict
    auto* predict = app.add_subcommand("predict", "Predicted pair count S(d) x/(log x)^2 or its integral form");
    std::uint64_t predict_x = 0, predict_d = 0;
    std::string model_name = "asymptotic";
    bool observed = false;
    predict->add_option("--limit", predict_x, "x")->required();
    predict->add_option("--d", predict_d, "Gap d")->required();
    predict->add_option("--model", model_name, "asymptotic|integral")->check(CLI::IsMember({"asymptotic", "integral"}));
    predict->add_flag("--observed", observed, "Also count N(x, d) and report observed/predicted");
    add_sieve_options(predict);

    // verify
    auto* verify = app.add_subcommand("verify", "Run a verification suite; exit 0 iff every check passes");
    std::string suite;
    unsigned verify_k = 0;
    std::uint64_t verify_x = 0;
    verify->add_option("--suite", suite, "table1|lemma1|sandwich|bounds")
        ->required()
        ->check(CLI::IsMember({"table1", "lemma1", "sandwich", "bounds"}));
    verify->add_option("--k", verify_k, "lemma1: check k = 2..K");
    verify->add_option("--x", verify_x, "Bound for sandwich/bounds, scan bound for table1");
    add_sieve_options(verify);

    // theta
    auto* theta = app.add_subcommand("theta", "Chebyshev theta(x), pi(x), sum 1/p and the primorial floor witness");
    std::uint64_t theta_x = 0;
    theta->add_option("--x", theta_x, "x")->required()->check(CLI::Range(2ull, ~0ull));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitError;
    }

    gch_sieve_config cfg{segment_size, threads};
    try {
        if (*champions) {
            std::vector<std::uint64_t> cps = parse_list(checkpoints_text);
            gch_run* run = nullptr;
            check(gch_run_create(limit, cps.empty() ? nullptr : cps.data(), cps.size(), &cfg,
                                 resume_path.empty() ? nullptr : resume_path.c_str(), &run));
            int finished = 0;
            const gch_status st = gch_run_execute(run, stop_after, batch_segments,
                                                  out_format == "json" ? print_report : nullptr, nullptr, &finished);
            if (st == GCH_OK && out_format == "csv" && finished) {
                ApiString csv;
                const gch_status cs = gch_run_histogram_csv(run, csv.out());
                if (cs == GCH_OK) std::fputs(csv.c_str(), stdout);
                gch_run_free(run);
                check(cs);
            } else {
                gch_run_free(run);
                check(st);
            }
            if (!finished) {
                std::fprintf(stderr, "interrupted; resume with --resume %s\n", resume_path.c_str());
                return kExitInterrupted;
            }
            return 0;
        }
        if (*series) {
            gch_series_value v{};
            if (!triple_text.empty()) {
                const auto pair = parse_list(triple_text);
                if (pair.size() != 2) throw CLI::ValidationError("--triple", "expected d',d");
                check(gch_triple_singular_series(static_cast<std::int64_t>(pair[0]), static_cast<std::int64_t>(pair[1]),
                                                 truncation, &v));
            } else if (*d_opt) {
                check(gch_singular_series(series_d, &v));
            } else {
                throw CLI::ValidationError("series", "one of --d or --triple is required");
            }
            ApiString json;
            check(gch_series_json(&v, json.out()));
            std::puts(json.c_str());
            return 0;
        }
        if (*constant) {
            gch_series_value v{};
            check(gch_twin_prime_constant(constant_truncation, &v));
            ApiString json;
            check(gch_series_json(&v, json.out()));
            std::puts(json.c_str());
            return 0;
        }
        if (*predict) {
            ApiString json;
            const gch_model model = model_name == "integral" ? GCH_MODEL_INTEGRAL : GCH_MODEL_ASYMPTOTIC;
            check(gch_predict_json(predict_x, predict_d, model, observed ? 1 : 0, &cfg, json.out()));
            std::puts(json.c_str());
            return 0;
        }
        if (*verify) {
            ApiString json;
            int passed = 0;
            check(gch_verify(suite.c_str(), verify_k, verify_x, &cfg, &passed, json.out()));
            std::puts(json.c_str());
            return passed ? 0 : kExitFailedChecks;
        }
        if (*theta) {
            double value = 0, reciprocal = 0;
            std::uint64_t count = 0;
            check(gch_chebyshev_theta(theta_x, &value));
            check(gch_prime_count(theta_x, &count));
            check(gch_mertens_reciprocal_sum(theta_x, &reciprocal));
            ApiString witness;
            const gch_status ws = gch_theta_characterization(static_cast<double>(theta_x), witness.out());
            std::printf("{\"x\":%llu,\"theta\":%.17g,\"prime_count\":%llu,\"reciprocal_sum\":%.17g,\"characterization\":%s}\n",
                        static_cast<unsigned long long>(theta_x), value, static_cast<unsigned long long>(count),
                        reciprocal, ws == GCH_OK ? witness.c_str() : "null");
            return 0;
        }
    } catch (const Failure& f) {
        std::fprintf(stderr, "error: %s: %s\n", gch_status_name(f.status), gch_last_error());
        return kExitError;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitError;
    }
    return 0;
}
