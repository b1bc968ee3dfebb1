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

#include "atrisk/survey.hpp"

#include <cmath>
#include <string>

#include "atrisk/error.hpp"

namespace atrisk {
namespace {

constexpr std::array<std::string_view, 5> kBandTokens = {
    "really_low", "low", "medium", "high", "really_high"};
constexpr std::array<std::string_view, 5> kHealthTokens = {
    "very_poor", "poor", "fair", "good", "excellent"};
constexpr std::array<std::string_view, 2> kGenderTokens = {"female", "male"};
constexpr std::array<std::string_view, 2> kHispanicTokens = {"no", "yes"};
constexpr std::array<std::string_view, 2> kMajorTokens = {"not_sport_related",
                                                          "sport_related"};
constexpr std::array<std::string_view, 10> kVariableNames = {
    "gender",        "hispanic",   "major",        "physical_health",
    "psych_health",  "diet",       "self_efficacy", "importance",
    "expectations",  "support"};

std::span<const std::string_view> TokensOf(Variable v) {
  switch (v) {
    case Variable::kGender: return kGenderTokens;
    case Variable::kHispanic: return kHispanicTokens;
    case Variable::kMajor: return kMajorTokens;
    case Variable::kPhysicalHealth:
    case Variable::kPsychHealth:
    case Variable::kDiet: return kHealthTokens;
    default: return kBandTokens;
  }
}

void CheckDays(int days, double minutes, const char* what) {
  if (days < 0 || days > 7) {
    throw Error(ErrorCode::kInvalidActivity,
                std::string(what) + " days must be in 0..7, got " +
                    std::to_string(days));
  }
  if (!std::isfinite(minutes) || minutes < 0.0) {
    throw Error(ErrorCode::kInvalidActivity,
                std::string(what) + " minutes must be finite and >= 0");
  }
  if (days == 0 && minutes != 0.0) {
    throw Error(ErrorCode::kInvalidActivity,
                std::string(what) + " minutes must be 0 when days is 0");
  }
}

}  // namespace

ActivityLog ActivityLog::Make(int mod_days, double mod_min, int vig_days,
                              double vig_min) {
  CheckDays(mod_days, mod_min, "moderate");
  CheckDays(vig_days, vig_min, "vigorous");
  ActivityLog log;
  log.mod_days_ = mod_days;
  log.mod_min_ = mod_min;
  log.vig_days_ = vig_days;
  log.vig_min_ = vig_min;
  return log;
}

Band BandOf(double value) {
  if (std::isnan(value) || value > 5.0) {
    throw Error(ErrorCode::kInvalidAnswer,
                "scale value " + std::to_string(value) + " exceeds 5");
  }
  if (value > 4.0) return Band::kReallyHigh;
  if (value > 3.0) return Band::kHigh;
  if (value > 2.0) return Band::kMedium;
  if (value > 1.0) return Band::kLow;
  return Band::kReallyLow;
}

ScaleScore AggregateLikert(std::span<const int> answers) {
  if (answers.empty()) throw Error(ErrorCode::kEmptyScale, "no answers");
  long sum = 0;
  for (int a : answers) {
    if (a < 1 || a > 5) {
      throw Error(ErrorCode::kInvalidAnswer,
                  "answer " + std::to_string(a) + " outside 1..5");
    }
    sum += a;
  }
  const double mean =
      static_cast<double>(sum) / static_cast<double>(answers.size());
  return {mean, BandOf(mean)};
}

ScaleScore ExpectationsScore(std::span<const ExpectationItem> items) {
  if (items.empty()) throw Error(ErrorCode::kEmptyScale, "no expectations");
  long sum = 0;
  for (const auto& item : items) {
    if (item.importance < 1 || item.importance > 5 || item.frequency < 1 ||
        item.frequency > 3) {
      throw Error(ErrorCode::kInvalidAnswer,
                  "expectation pair (" + std::to_string(item.importance) +
                      "," + std::to_string(item.frequency) + ") out of range");
    }
    sum += item.importance * item.frequency;
  }
  const double score = static_cast<double>(sum) /
                       static_cast<double>(items.size()) / 3.0;
  return {score, BandOf(score)};
}

std::string_view VariableName(Variable v) {
  return kVariableNames[static_cast<std::size_t>(v)];
}

std::optional<Variable> VariableFromName(std::string_view name) {
  for (Variable v : kAllVariables) {
    if (VariableName(v) == name) return v;
  }
  return std::nullopt;
}

bool IsBinary(Variable v) {
  return v == Variable::kGender || v == Variable::kHispanic ||
         v == Variable::kMajor;
}

std::size_t Cardinality(Variable v) { return IsBinary(v) ? 2 : kLevels; }

std::size_t ValueIndex(const SurveyResponse& r, Variable v) {
  switch (v) {
    case Variable::kGender: return static_cast<std::size_t>(r.gender);
    case Variable::kHispanic: return static_cast<std::size_t>(r.hispanic);
    case Variable::kMajor: return static_cast<std::size_t>(r.major);
    case Variable::kPhysicalHealth:
      return static_cast<std::size_t>(r.physical_health);
    case Variable::kPsychHealth:
      return static_cast<std::size_t>(r.psych_health);
    case Variable::kDiet: return static_cast<std::size_t>(r.diet);
    case Variable::kSelfEfficacy:
      return static_cast<std::size_t>(r.self_efficacy);
    case Variable::kImportance: return static_cast<std::size_t>(r.importance);
    case Variable::kExpectations:
      return static_cast<std::size_t>(r.expectations);
    case Variable::kSupport: return static_cast<std::size_t>(r.support);
  }
  throw Error(ErrorCode::kInternal, "bad variable");
}

void SetValueIndex(SurveyResponse& r, Variable v, std::size_t index) {
  if (index >= Cardinality(v)) {
    throw Error(ErrorCode::kInvalidArgument,
                "value index out of range for " + std::string(VariableName(v)));
  }
  const int i = static_cast<int>(index);
  switch (v) {
    case Variable::kGender: r.gender = static_cast<Gender>(i); break;
    case Variable::kHispanic: r.hispanic = static_cast<Hispanic>(i); break;
    case Variable::kMajor: r.major = static_cast<Major>(i); break;
    case Variable::kPhysicalHealth:
      r.physical_health = static_cast<HealthRating>(i);
      break;
    case Variable::kPsychHealth:
      r.psych_health = static_cast<HealthRating>(i);
      break;
    case Variable::kDiet: r.diet = static_cast<HealthRating>(i); break;
    case Variable::kSelfEfficacy: r.self_efficacy = static_cast<Band>(i); break;
    case Variable::kImportance: r.importance = static_cast<Band>(i); break;
    case Variable::kExpectations: r.expectations = static_cast<Band>(i); break;
    case Variable::kSupport: r.support = static_cast<Band>(i); break;
  }
}

std::string_view ValueToken(Variable v, std::size_t index) {
  const auto tokens = TokensOf(v);
  if (index >= tokens.size()) {
    throw Error(ErrorCode::kInvalidArgument, "value index out of range");
  }
  return tokens[index];
}

std::optional<std::size_t> ValueFromToken(Variable v, std::string_view token) {
  const auto tokens = TokensOf(v);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i] == token) return i;
  }
  return std::nullopt;
}

std::string_view LabelToken(RiskLabel label) {
  return label == RiskLabel::kAtRisk ? "at_risk" : "not_at_risk";
}

std::optional<RiskLabel> LabelFromToken(std::string_view token) {
  if (token == "at_risk") return RiskLabel::kAtRisk;
  if (token == "not_at_risk") return RiskLabel::kNotAtRisk;
  return std::nullopt;
}

}  // namespace atrisk
