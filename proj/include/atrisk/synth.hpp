/*
 * Copyright 2026 The atrisk Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ATRISK_SYNTH_HPP_
#define ATRISK_SYNTH_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "atrisk/survey.hpp"

namespace atrisk {

// Days ~ Binomial(7, lerp(day_prob_low, day_prob_high, p)); minutes on
// active days ~ Normal(lerp(min_mean_low, min_mean_high, p), min_sd),
// rounded to whole minutes and clamped to [min_floor, min_ceiling].
struct ActivityVolume {
  double day_prob_low = 0.0;
  double day_prob_high = 0.0;
  double min_mean_low = 0.0;
  double min_mean_high = 0.0;
  double min_sd = 0.0;
  double min_floor = 5.0;
  double min_ceiling = 180.0;

  friend bool operator==(const ActivityVolume&,
                         const ActivityVolume&) = default;
};

// Generative description of a cohort. The latent activity propensity of a
// record is p = sigmoid(beta * sum_v weights[v] * z_v + bias + noise) where
// z_v is the record's canonical value index for v, standardized with the
// mean and standard deviation implied by marginals[v], and noise is
// Normal(0, noise_sd).
struct CohortSpec {
  // Indexed by Variable, then by canonical value index.
  std::array<std::vector<double>, kAllVariables.size()> marginals;
  double beta = 0.0;
  std::array<double, kAllVariables.size()> weights{};
  double bias = 0.0;
  double noise_sd = 0.0;
  ActivityVolume moderate;
  ActivityVolume vigorous;

  // Throws Error(kInvalidSpec) on a marginal of the wrong length, negative
  // cells, cells not summing to 1 within 1e-9, or negative beta / spreads /
  // probabilities outside [0, 1].
  void Validate() const;

  friend bool operator==(const CohortSpec&, const CohortSpec&) = default;
};

// Marginals from the study's demographic and scale tables (counts / 146).
// With full_support, zero-count cells get one pseudo-count before
// normalization so every category can appear.
CohortSpec DefaultSpec(bool full_support = false);

// JSON overlay on DefaultSpec(). Throws Error(kInvalidSpec) on malformed
// JSON, unknown keys, or an invalid resulting spec.
CohortSpec SpecFromJson(std::string_view json_text);
std::string SpecToJson(const CohortSpec& spec);

// n labeled records; record i draws from a generator seeded with
// MixSeed(seed, i). Labels come from ClassifyActivity.
std::vector<SurveyResponse> GenerateCohort(const CohortSpec& spec,
                                           std::size_t n, std::uint64_t seed);

}  // namespace atrisk

#endif  // ATRISK_SYNTH_HPP_
