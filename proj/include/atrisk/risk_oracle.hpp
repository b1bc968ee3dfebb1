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

#ifndef ATRISK_RISK_ORACLE_HPP_
#define ATRISK_RISK_ORACLE_HPP_

#include "atrisk/survey.hpp"

namespace atrisk {

// MET-weighted minutes per week; moderate minutes count 4, vigorous 8.
struct MetScore {
  double value = 0.0;
};

inline constexpr double kMetThreshold = 600.0;

MetScore WeeklyMet(const ActivityLog& log);

// >= 3 days of >= 20 average minutes at vigorous intensity.
bool MeetsVigorousGuideline(const ActivityLog& log);

// >= 5 days of >= 30 average minutes at moderate intensity.
bool MeetsModerateGuideline(const ActivityLog& log);

// NotAtRisk when either guideline holds or the weekly MET reaches 600
// (inclusive).
RiskLabel ClassifyActivity(const ActivityLog& log);

}  // namespace atrisk

#endif  // ATRISK_RISK_ORACLE_HPP_
