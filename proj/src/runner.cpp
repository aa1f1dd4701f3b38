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

#include "gapchamp/runner.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <system_error>

#include "gapchamp/error.hpp"
#include "gapchamp/json_io.hpp"
#include "gapchamp/predictor.hpp"
#include "gapchamp/primorial.hpp"
#include "gapchamp/singular_series.hpp"

namespace gapchamp {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Checkpoint persistence

std::string serialize(const Checkpoint& cp) {
    json reports = json::array();
    for (const auto& r : cp.reports) reports.push_back(to_json(r));
    json j = {{"format_version", cp.format_version},
              {"limit", cp.limit},
              {"checkpoints", cp.checkpoints},
              {"processed_up_to", cp.processed_up_to},
              {"last_prime", cp.last_prime ? json(*cp.last_prime) : json(nullptr)},
              {"histogram", histogram_to_json(cp.histogram)},
              {"reports", reports}};
    return j.dump(1) + "\n";
}

Checkpoint deserialize(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        fail(ErrorKind::Checkpoint, std::string("checkpoint is not valid JSON: ") + e.what());
    }
    Checkpoint cp;
    try {
        cp.format_version = j.at("format_version").get<int>();
        if (cp.format_version != kCheckpointFormatVersion)
            fail(ErrorKind::Checkpoint, "unsupported checkpoint format_version " + std::to_string(cp.format_version));
        cp.limit = j.at("limit").get<u64>();
        cp.checkpoints = j.at("checkpoints").get<std::vector<u64>>();
        cp.processed_up_to = j.at("processed_up_to").get<u64>();
        if (!j.at("last_prime").is_null()) cp.last_prime = j.at("last_prime").get<u64>();
        cp.histogram = histogram_from_json(j.at("histogram"), cp.processed_up_to);
        for (const auto& r : j.at("reports")) cp.reports.push_back(report_from_json(r));
    } catch (const json::exception& e) {
        fail(ErrorKind::Checkpoint, std::string("checkpoint field error: ") + e.what());
    }

    if (cp.processed_up_to > cp.limit) fail(ErrorKind::Checkpoint, "processed_up_to exceeds limit");
    if (cp.processed_up_to >= 2 && !cp.last_prime)
        fail(ErrorKind::Checkpoint, "last_prime missing although primes were processed");
    if (cp.last_prime) {
        if (*cp.last_prime > cp.processed_up_to) fail(ErrorKind::Checkpoint, "last_prime beyond processed_up_to");
        if (cp.histogram.gap_sum() + 2 != *cp.last_prime)
            fail(ErrorKind::Checkpoint, "histogram does not telescope to last_prime");
    } else if (!cp.histogram.empty()) {
        fail(ErrorKind::Checkpoint, "histogram present without last_prime");
    }
    for (const auto& [gap, n] : cp.histogram.counts())
        if (gap % 2 != 0 && (gap != 1 || n != 1)) fail(ErrorKind::Checkpoint, "odd gap count violates parity");
    try {
        validate_checkpoints(cp.checkpoints, cp.limit);
    } catch (const Error& e) {
        fail(ErrorKind::Checkpoint, std::string("stored checkpoints invalid: ") + e.what());
    }
    if (cp.reports.size() > cp.checkpoints.size()) fail(ErrorKind::Checkpoint, "more reports than checkpoints");
    for (std::size_t i = 0; i < cp.reports.size(); ++i) {
        if (cp.reports[i].x != cp.checkpoints[i] || cp.reports[i].x > cp.processed_up_to)
            fail(ErrorKind::Checkpoint, "report sequence does not match checkpoints");
    }
    return cp;
}

void save_checkpoint(const std::string& path, const Checkpoint& cp) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) fail(ErrorKind::Io, "cannot write " + tmp);
        out << serialize(cp);
        out.flush();
        if (!out) fail(ErrorKind::Io, "short write to " + tmp);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) fail(ErrorKind::Io, "rename " + tmp + " -> " + path + ": " + ec.message());
}

Checkpoint load_checkpoint(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::Io, "cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return deserialize(buffer.str());
}

std::vector<u64> default_checkpoints(u64 limit) {
    std::vector<u64> out;
    for (u64 c = 1000; c < limit; c *= 10) {
        out.push_back(c);
        if (c > ~u64{0} / 10) break;
    }
    if (limit >= 3) out.push_back(limit);
    return out;
}

// ---------------------------------------------------------------------------
// Champions run

RunOutcome run_champions(const RunOptions& options) {
    if (options.limit < 3) fail(ErrorKind::Domain, "limit must be >= 3");
    SieveConfig cfg = options.sieve;
    cfg.limit = options.limit;
    cfg.validate();
    const std::vector<u64> checkpoints =
        options.checkpoints.empty() ? default_checkpoints(options.limit) : options.checkpoints;
    validate_checkpoints(checkpoints, options.limit);

    Checkpoint state;
    state.limit = options.limit;
    state.checkpoints = checkpoints;
    if (options.resume) {
        state = *options.resume;
    } else if (!options.checkpoint_path.empty() && std::filesystem::exists(options.checkpoint_path)) {
        state = load_checkpoint(options.checkpoint_path);
    }
    if (state.limit != options.limit)
        fail(ErrorKind::Checkpoint, "checkpoint limit " + std::to_string(state.limit) +
                                        " does not match requested limit " + std::to_string(options.limit));
    if (state.checkpoints != checkpoints)
        fail(ErrorKind::Checkpoint, "checkpoint schedule does not match the requested checkpoints");

    if (options.on_report)
        for (const auto& r : state.reports) options.on_report(r);

    auto persist = [&] {
        if (!options.checkpoint_path.empty()) save_checkpoint(options.checkpoint_path, state);
    };

    RunOutcome outcome;
    if (state.processed_up_to >= options.limit) {
        outcome.state = std::move(state);
        outcome.finished = true;
        return outcome;
    }

    const auto ranges = plan_ranges(cfg, state.processed_up_to + 1, options.limit, checkpoints);
    const BasePrimes base(options.limit);
    GapAccumulator acc(state.histogram, state.processed_up_to, state.last_prime);
    const std::size_t batch = options.batch_segments ? options.batch_segments : 4 * std::size_t{cfg.worker_count};
    std::size_t in_batch = 0, batches = 0;

    auto sync_state = [&] {
        state.histogram = acc.histogram();
        state.processed_up_to = acc.processed_up_to();
        state.last_prime = acc.last_prime();
    };

    sieve_ranges(base, ranges, cfg.worker_count, [&](std::size_t, const SegmentSummary& s) {
        acc.absorb(s);
        while (state.reports.size() < checkpoints.size() &&
               checkpoints[state.reports.size()] == acc.processed_up_to()) {
            state.reports.push_back(make_report(acc.histogram(), acc.processed_up_to()));
            if (options.on_report) options.on_report(state.reports.back());
        }
        if (++in_batch < batch && acc.processed_up_to() != options.limit) return true;
        in_batch = 0;
        sync_state();
        persist();
        ++batches;
        return options.max_batches == 0 || batches < options.max_batches;
    });
    sync_state();
    outcome.finished = state.processed_up_to == options.limit;
    outcome.state = std::move(state);
    return outcome;
}

// ---------------------------------------------------------------------------
// Verification suites

const char* to_string(Suite suite) noexcept {
    switch (suite) {
        case Suite::Table1: return "table1";
        case Suite::Lemma1: return "lemma1";
        case Suite::Sandwich: return "sandwich";
        case Suite::Bounds: return "bounds";
    }
    return "?";
}

Suite parse_suite(std::string_view name) {
    if (name == "table1") return Suite::Table1;
    if (name == "lemma1") return Suite::Lemma1;
    if (name == "sandwich") return Suite::Sandwich;
    if (name == "bounds") return Suite::Bounds;
    fail(ErrorKind::Argument, "unknown suite '" + std::string(name) + "'");
}

namespace {

struct TableRow {
    std::vector<u64> champions;
    u64 smallest;
    std::optional<u64> largest_known;  // absent: beyond any desk-scale scan
};

const std::vector<TableRow>& table1_rows() {
    static const std::vector<TableRow> rows = {
        {{1}, 3, 3},          {{1, 2}, 5, 5},     {{2}, 7, 433},
        {{2, 4}, 101, 173},   {{4}, 131, 541},    {{2, 4, 6}, 179, 487},
        {{2, 6}, 379, 463},   {{6}, 389, std::nullopt}, {{4, 6}, 547, 941},
    };
    return rows;
}

std::string set_name(const std::vector<u64>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

std::vector<CheckResult> verify_table1(const VerifyOptions& opts) {
    std::vector<CheckResult> out;
    const auto& rows = table1_rows();
    const u64 scan = opts.x.value_or(1'000'000);

    std::vector<u64> smallest;
    for (const auto& row : rows) smallest.push_back(row.smallest);
    std::sort(smallest.begin(), smallest.end());
    const auto reports = champion_timeline(smallest.back(), smallest, opts.sieve);
    for (const auto& row : rows) {
        const auto it = std::find_if(reports.begin(), reports.end(), [&](const auto& r) { return r.x == row.smallest; });
        out.push_back({"smallest " + set_name(row.champions) + " at " + std::to_string(row.smallest),
                       it->champions == row.champions, to_json(*it)});
    }

    // One pass over primes <= scan tracking first / last occurrence of each row's set.
    std::map<std::vector<u64>, std::pair<u64, u64>> seen;  // set -> (first, last) prime
    ChampionTracker tracker;
    u64 largest_prime = 0;
    for_each_prime(2, scan, [&](u64 p) {
        tracker.feed(p);
        largest_prime = p;
        if (p < 3) return;
        std::vector<u64> set(tracker.champion_set().begin(), tracker.champion_set().end());
        auto [it, inserted] = seen.try_emplace(std::move(set), p, p);
        if (!inserted) it->second.second = p;
    });
    for (const auto& row : rows) {
        const auto it = seen.find(row.champions);
        const u64 first = it == seen.end() ? 0 : it->second.first;
        const u64 last = it == seen.end() ? 0 : it->second.second;
        json witness = {{"scan_bound", scan}, {"first_occurrence", first}, {"last_occurrence", last}};
        if (row.largest_known) {
            witness["largest_known"] = *row.largest_known;
            const bool ok = *row.largest_known <= scan ? last == *row.largest_known && first == row.smallest
                                                      : last <= scan && first == row.smallest;
            out.push_back({"record " + set_name(row.champions) + " at " + std::to_string(*row.largest_known) +
                               ", none later up to " + std::to_string(scan),
                           ok, witness});
        } else {
            out.push_back({"record " + set_name(row.champions) + " persists to " + std::to_string(scan),
                           first == row.smallest && last == largest_prime, witness});
        }
    }
    return out;
}

std::vector<CheckResult> verify_lemma1_suite(const VerifyOptions& opts) {
    std::vector<CheckResult> out;
    const unsigned top = opts.k.value_or(5);
    if (top < 2 || top > kMaxLemma1Index)
        fail(ErrorKind::Argument, "--k must be in [2, " + std::to_string(kMaxLemma1Index) + "]");
    for (unsigned k = 2; k <= top; ++k) {
        std::string name = "lemma1 k=" + std::to_string(k);
        try {
            const auto w = verify_lemma1(k);
            // smallest maximizer is squarefree; the others are its multiples
            const bool divides = !w.maximizers.empty() && w.primorial % w.maximizers.front() == 0;
            json witness = to_json(w);
            witness["maximizers_divide_primorial"] = divides;
            out.push_back({name, w.holds && divides, witness});
        } catch (const Error& e) {
            out.push_back({name, false, {{"error", e.what()}}});
        }
    }
    return out;
}

std::vector<CheckResult> verify_sandwich_suite(const VerifyOptions& opts) {
    std::vector<CheckResult> out;
    const u64 x = opts.x.value_or(1'000'000);
    const PrimePairCounter counter(x);
    const GapHistogram hist = gap_histogram(x, opts.sieve);
    for (u64 d = 2; d <= 50; d += 2) {
        const auto w = verify_sandwich(counter, hist, d);
        out.push_back({"sandwich x=" + std::to_string(x) + " d=" + std::to_string(d), w.holds(), to_json(w)});
    }
    const u64 twins = counter.pi2(2);
    out.push_back({"N(x,2) = pi2(x,2) at x=" + std::to_string(x), hist.count(2) == twins,
                   {{"consecutive", hist.count(2)}, {"pi2", twins}}});
    return out;
}

std::vector<CheckResult> verify_bounds_suite(const VerifyOptions& opts) {
    std::vector<CheckResult> out;
    const u64 x = opts.x.value_or(1'000'000);
    if (x < 1000) fail(ErrorKind::Domain, "bounds suite requires x >= 1000");

    const SeriesValue c2 = twin_prime_constant(kDefaultTruncation);
    constexpr double kTwinDigits = 0.66016;
    out.push_back({"twin prime constant matches 0.66016",
                   std::abs(c2.value - kTwinDigits) <= 5e-6 && c2.lower() >= kTwinDigits && c2.upper() < 0.66017,
                   to_json(c2)});

    const SeriesValue s2 = singular_series(2);
    out.push_back({"S(2) > 1.32", s2.lower() > kLowerBoundCoefficient, to_json(s2)});

    const GapHistogram hist = gap_histogram(x, opts.sieve);
    const auto lower = nstar_lower_bound_check(hist, x);
    out.push_back({"N*(x) > 1.32 x/(log x)^2 at x=" + std::to_string(x), lower.passes(), to_json(lower)});

    const auto large = large_gap_bound_check(hist, x);
    out.push_back({"N(x,d) <= x/(log x)^2 for d >= (log x)^2 at x=" + std::to_string(x), large.holds(),
                   to_json(large)});

    const auto theorem = theorem_witness(x);
    out.push_back({"theorem witness ratio <= covering product at x=" + std::to_string(x),
                   theorem.within_bound && theorem.ratio >= 1, to_json(theorem)});

    for (const auto& [dp, d] : std::vector<std::pair<i64, i64>>{{2, 6}, {2, 4}, {6, 30}, {2310, 30030}}) {
        const auto w = check_bound5(TripleConfig::make(dp, d), 0.5);
        out.push_back({"triple series bound d=" + std::to_string(d) + " d'=" + std::to_string(dp), w.passes(),
                       to_json(w)});
    }

    const double product = mertens_product(x);
    const double asymptotic = std::exp(-kEulerGamma) / std::log(static_cast<double>(x));
    out.push_back({"Mertens product within 2% of e^-gamma/log x",
                   std::abs(product / asymptotic - 1) < 0.02,
                   {{"product", product}, {"asymptotic", asymptotic}}});
    return out;
}

}  // namespace

std::vector<CheckResult> run_verify(Suite suite, const VerifyOptions& options) {
    switch (suite) {
        case Suite::Table1: return verify_table1(options);
        case Suite::Lemma1: return verify_lemma1_suite(options);
        case Suite::Sandwich: return verify_sandwich_suite(options);
        case Suite::Bounds: return verify_bounds_suite(options);
    }
    return {};
}

json verify_report(Suite suite, const std::vector<CheckResult>& results) {
    json checks = json::array();
    bool all = true;
    for (const auto& r : results) {
        checks.push_back({{"name", r.name}, {"pass", r.pass}, {"witness", r.witness}});
        all = all && r.pass;
    }
    return {{"suite", to_string(suite)}, {"passed", all}, {"checks", checks}};
}

}  // namespace gapchamp
