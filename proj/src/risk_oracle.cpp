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

#include "atrisk/risk_oracle.hpp"

namespace atrisk {

MetScore WeeklyMet(const ActivityLog& log) {
  return {4.0 * log.mod_days() * log.mod_min() +
          8.0 * log.vig_days() * log.vig_min()};
}

bool MeetsVigorousGuideline(const ActivityLog& log) {
  return log.vig_days() >= 3 && log.vig_min() >= 20.0;
}

bool MeetsModerateGuideline(const ActivityLog& log) {
  return log.mod_days() >= 5 && log.mod_min() >= 30.0;
}

RiskLabel ClassifyActivity(const ActivityLog& log) {
  if (MeetsVigorousGuideline(log) || MeetsModerateGuideline(log) ||
      WeeklyMet(log).value >= kMetThreshold) {
    return RiskLabel::kNotAtRisk;
  }
  return RiskLabel::kAtRisk;
}

}  // namespace atrisk
