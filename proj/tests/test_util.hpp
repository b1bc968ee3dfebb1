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

#ifndef ATRISK_TESTS_TEST_UTIL_HPP_
#define ATRISK_TESTS_TEST_UTIL_HPP_

#include <vector>

#include "atrisk/rng.hpp"
#include "atrisk/survey.hpp"

namespace atrisk::testing {

// Uniform over every categorical value; activity uniform over valid logs.
inline SurveyResponse RandomResponse(Rng& rng, bool labeled = true) {
  SurveyResponse r;
  for (Variable v : kAllVariables) {
    SetValueIndex(r, v, static_cast<std::size_t>(rng.Below(Cardinality(v))));
  }
  const int md = static_cast<int>(rng.Below(8));
  const int vd = static_cast<int>(rng.Below(8));
  r.activity = ActivityLog::Make(md, md ? static_cast<double>(rng.Below(90)) : 0.0,
                                 vd, vd ? static_cast<double>(rng.Below(90)) : 0.0);
  if (labeled) {
    r.label = rng.Bernoulli(0.5) ? RiskLabel::kAtRisk : RiskLabel::kNotAtRisk;
  }
  return r;
}

inline std::vector<SurveyResponse> RandomResponses(std::size_t n,
                                                   std::uint64_t seed) {
  Rng rng(seed);
  std::vector<SurveyResponse> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(RandomResponse(rng));
  return out;
}

}  // namespace atrisk::testing

#endif  // ATRISK_TESTS_TEST_UTIL_HPP_
