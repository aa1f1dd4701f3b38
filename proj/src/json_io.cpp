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

#include "gapchamp/json_io.hpp"

#include "gapchamp/error.hpp"

namespace gapchamp {

using nlohmann::json;

json to_json(const ChampionReport& r) {
    return {{"x", r.x}, {"n_star", r.n_star}, {"champions", r.champions}, {"total_gaps", r.total_gaps}};
}

ChampionReport report_from_json(const json& j) {
    ChampionReport r;
    r.x = j.at("x").get<u64>();
    r.n_star = j.at("n_star").get<u64>();
    r.champions = j.at("champions").get<std::vector<u64>>();
    r.total_gaps = j.at("total_gaps").get<u64>();
    return r;
}

json to_json(const SeriesValue& v) {
    return {{"value", v.value}, {"error_bound", v.error_bound}, {"truncation_prime", v.truncation_prime}};
}

json to_json(const Prediction& p) {
    return {{"x", p.x}, {"d", p.d}, {"model", to_string(p.model)}, {"predicted", p.predicted_count}};
}

json to_json(const SandwichWitness& w) {
    return {{"x", w.x},
            {"d", w.d},
            {"pi2", w.pi2},
            {"pi3_sum", w.pi3_sum},
            {"lower_bound", w.lower_bound()},
            {"consecutive", w.consecutive},
            {"lower_holds", w.lower_holds},
            {"upper_holds", w.upper_holds}};
}

json to_json(const Lemma1Witness& w) {
    return {{"k", w.k},
            {"primorial", w.primorial},
            {"target", to_json(w.target)},
            {"best", to_json(w.best)},
            {"maximizers", w.maximizers},
            {"evaluated", w.evaluated},
            {"holds", w.holds}};
}

json to_json(const ThetaWitness& w) {
    return {{"y", w.y},
            {"floor_index", w.floor_index},
            {"floor_value", w.floor_value},
            {"theta_index", w.theta_index},
            {"p_n", w.p_n},
            {"p_next", w.p_next},
            {"theta_n", static_cast<double>(w.theta_n)},
            {"log_y", static_cast<double>(w.log_y)},
            {"theta_next", static_cast<double>(w.theta_next)},
            {"consistent", w.consistent()}};
}

json to_json(const TheoremWitness& w) {
    return {{"log_x", w.log_x},
            {"small_floor", w.small_floor},
            {"large_floor", w.large_floor},
            {"ratio", w.ratio},
            {"log_log_x", w.log_log_x},
            {"window", {w.window_lo, w.window_hi}},
            {"window_primes", w.window_primes},
            {"covering_product", w.covering_product},
            {"within_bound", w.within_bound}};
}

json to_json(const LowerBoundWitness& w) {
    return {{"x", w.x},
            {"n_star", w.n_star},
            {"threshold", w.threshold},
            {"holds", w.holds},
            {"report_only", w.report_only}};
}

json to_json(const LargeGapWitness& w) {
    return {{"x", w.x},
            {"log_x_sq", w.log_x_sq},
            {"gaps_checked", w.gaps_checked},
            {"large_gaps_checked", w.large_gaps_checked},
            {"max_observed_gap", w.max_observed_gap},
            {"weighted_sum", w.weighted_sum},
            {"per_gap_holds", w.per_gap_holds},
            {"large_gap_holds", w.large_gap_holds}};
}

json to_json(const Bound5Witness& w) {
    return {{"d", w.triple.d},
            {"d_prime", w.triple.d_prime},
            {"delta", w.triple.delta},
            {"series", to_json(w.value)},
            {"finite_bound", w.finite_bound},
            {"log_delta_sq", w.log_delta_sq},
            {"ratio", w.ratio},
            {"constant", w.constant},
            {"epsilon", w.epsilon},
            {"d_pow_epsilon", w.d_pow_epsilon},
            {"within_finite_bound", w.within_finite_bound},
            {"within_log_bound", w.within_log_bound}};
}

json histogram_to_json(const GapHistogram& h) {
    json out = json::array();
    for (const auto& [gap, n] : h.counts()) out.push_back({gap, n});
    return out;
}

GapHistogram histogram_from_json(const json& j, u64 upper_bound_x) {
    if (!j.is_array()) fail(ErrorKind::Checkpoint, "histogram must be an array of [d, count] pairs");
    GapHistogram h(upper_bound_x);
    u64 previous = 0;
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != 2)
            fail(ErrorKind::Checkpoint, "histogram rows must be [d, count] pairs");
        const u64 gap = row[0].get<u64>();
        const u64 n = row[1].get<u64>();
        if (gap <= previous) fail(ErrorKind::Checkpoint, "histogram gaps must be strictly ascending");
        if (n == 0) fail(ErrorKind::Checkpoint, "histogram counts must be positive");
        h.add(gap, n);
        previous = gap;
    }
    return h;
}

}  // namespace gapchamp
