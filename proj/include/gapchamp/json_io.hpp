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

#pragma once

#include <nlohmann/json.hpp>

#include "gapchamp/gap_stats.hpp"
#include "gapchamp/predictor.hpp"
#include "gapchamp/primorial.hpp"
#include "gapchamp/singular_series.hpp"

namespace gapchamp {

nlohmann::json to_json(const ChampionReport& report);
ChampionReport report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SeriesValue& value);
nlohmann::json to_json(const Prediction& prediction);
nlohmann::json to_json(const SandwichWitness& w);
nlohmann::json to_json(const Lemma1Witness& w);
nlohmann::json to_json(const ThetaWitness& w);
nlohmann::json to_json(const TheoremWitness& w);
nlohmann::json to_json(const LowerBoundWitness& w);
nlohmann::json to_json(const LargeGapWitness& w);
nlohmann::json to_json(const Bound5Witness& w);

// [[d, count], ...] ascending d.
nlohmann::json histogram_to_json(const GapHistogram& histogram);
GapHistogram histogram_from_json(const nlohmann::json& j, u64 upper_bound_x);

}  // namespace gapchamp
