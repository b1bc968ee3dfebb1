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

#ifndef ATRISK_SURVEY_HPP_
#define ATRISK_SURVEY_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>

namespace atrisk {

// Five-level label assigned to an averaged 1..5 scale.
enum class Band { kReallyLow = 0, kLow, kMedium, kHigh, kReallyHigh };

// Self-reported perception of physical/psychological health or diet.
enum class HealthRating { kVeryPoor = 0, kPoor, kFair, kGood, kExcellent };

// Binary demographics. The enumerator with value 1 is the one encoded as an
// "on" input node.
enum class Gender { kFemale = 0, kMale = 1 };
enum class Hispanic { kNo = 0, kYes = 1 };
enum class Major { kNotSportRelated = 0, kSportRelated = 1 };

// AtRisk is the positive class everywhere.
enum class RiskLabel { kAtRisk = 0, kNotAtRisk = 1 };

inline constexpr std::size_t kLevels = 5;

// Seven-day self-reported activity. Days are whole days in 0..7, minutes are
// the average minutes per active day.
class ActivityLog {
 public:
  ActivityLog() = default;

  // Throws Error(kInvalidActivity) on days outside 0..7, negative or
  // non-finite minutes, or nonzero minutes on zero days.
  static ActivityLog Make(int mod_days, double mod_min, int vig_days,
                          double vig_min);

  int mod_days() const { return mod_days_; }
  double mod_min() const { return mod_min_; }
  int vig_days() const { return vig_days_; }
  double vig_min() const { return vig_min_; }

  friend bool operator==(const ActivityLog&, const ActivityLog&) = default;

 private:
  int mod_days_ = 0;
  double mod_min_ = 0.0;
  int vig_days_ = 0;
  double vig_min_ = 0.0;
};

struct SurveyResponse {
  Gender gender = Gender::kFemale;
  Hispanic hispanic = Hispanic::kNo;
  Major major = Major::kNotSportRelated;
  HealthRating physical_health = HealthRating::kFair;
  HealthRating psych_health = HealthRating::kFair;
  HealthRating diet = HealthRating::kFair;
  Band self_efficacy = Band::kMedium;
  Band importance = Band::kMedium;
  Band expectations = Band::kMedium;
  Band support = Band::kMedium;
  ActivityLog activity;
  std::optional<RiskLabel> label;

  friend bool operator==(const SurveyResponse&,
                         const SurveyResponse&) = default;
};

// Scale arithmetic -----------------------------------------------------------

struct ScaleScore {
  double value;
  Band band;
};

// Half-open unit intervals: (4,5] really high, (3,4] high, (2,3] medium,
// (1,2] low, everything <= 1 really low. Throws kInvalidAnswer above 5.
Band BandOf(double value);

// Mean of 1..5 answers, banded. Throws kEmptyScale / kInvalidAnswer.
ScaleScore AggregateLikert(std::span<const int> answers);

struct ExpectationItem {
  int importance;  // 1..5
  int frequency;   // 1..3
};

// mean(importance * frequency) / 3, banded like AggregateLikert.
ScaleScore ExpectationsScore(std::span<const ExpectationItem> items);

// Categorical variables ------------------------------------------------------

// The ten categorical predictors, in CSV column order.
enum class Variable {
  kGender = 0,
  kHispanic,
  kMajor,
  kPhysicalHealth,
  kPsychHealth,
  kDiet,
  kSelfEfficacy,
  kImportance,
  kExpectations,
  kSupport,
};

inline constexpr std::array<Variable, 10> kAllVariables = {
    Variable::kGender,       Variable::kHispanic,    Variable::kMajor,
    Variable::kPhysicalHealth, Variable::kPsychHealth, Variable::kDiet,
    Variable::kSelfEfficacy, Variable::kImportance,  Variable::kExpectations,
    Variable::kSupport};

std::string_view VariableName(Variable v);
std::optional<Variable> VariableFromName(std::string_view name);

bool IsBinary(Variable v);

// 2 for binary variables, 5 otherwise.
std::size_t Cardinality(Variable v);

// Canonical index of the response's value for `v`: the enumerator's integer
// value (declared order, lowest first).
std::size_t ValueIndex(const SurveyResponse& r, Variable v);

// Sets the value of `v` from a canonical index. Index must be < Cardinality.
void SetValueIndex(SurveyResponse& r, Variable v, std::size_t index);

// Lowercase snake tokens used in CSV and model files.
std::string_view ValueToken(Variable v, std::size_t index);
std::optional<std::size_t> ValueFromToken(Variable v, std::string_view token);

std::string_view LabelToken(RiskLabel label);
std::optional<RiskLabel> LabelFromToken(std::string_view token);

}  // namespace atrisk

#endif  // ATRISK_SURVEY_HPP_
