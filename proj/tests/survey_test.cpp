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

#include <algorithm>
#include <vector>

#include "atrisk/error.hpp"
#include "atrisk/rng.hpp"
#include "atrisk/survey.hpp"
#include "doctest.h"

namespace atrisk {
namespace {

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

TEST_CASE("AggregateLikert bands the mean") {
  const std::vector<int> maximal{5, 5, 5};
  auto s = AggregateLikert(maximal);
  CHECK(s.value == 5.0);
  CHECK(s.band == Band::kReallyHigh);

  const std::vector<int> mixed{4, 3};
  s = AggregateLikert(mixed);
  CHECK(s.value == 3.5);
  CHECK(s.band == Band::kHigh);

  const std::vector<int> lowest{1};
  s = AggregateLikert(lowest);
  CHECK(s.value == 1.0);
  CHECK(s.band == Band::kReallyLow);
}

TEST_CASE("AggregateLikert rejects bad input") {
  CHECK(CodeOf([] { AggregateLikert({}); }) == ErrorCode::kEmptyScale);
  const std::vector<int> zero{3, 0};
  CHECK(CodeOf([&] { AggregateLikert(zero); }) == ErrorCode::kInvalidAnswer);
  const std::vector<int> six{6};
  CHECK(CodeOf([&] { AggregateLikert(six); }) == ErrorCode::kInvalidAnswer);
}

TEST_CASE("ExpectationsScore divides the mean product by three") {
  const std::vector<ExpectationItem> top{{5, 3}};
  auto s = ExpectationsScore(top);
  CHECK(s.value == 5.0);
  CHECK(s.band == Band::kReallyHigh);

  const std::vector<ExpectationItem> two{{3, 3}, {5, 1}};
  s = ExpectationsScore(two);
  CHECK(s.value == doctest::Approx(14.0 / 6.0).epsilon(1e-15));
  CHECK(s.band == Band::kMedium);

  const std::vector<ExpectationItem> bottom{{1, 1}};
  s = ExpectationsScore(bottom);
  CHECK(s.value == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(s.band == Band::kReallyLow);

  CHECK(CodeOf([] { ExpectationsScore({}); }) == ErrorCode::kEmptyScale);
  const std::vector<ExpectationItem> bad_freq{{3, 4}};
  CHECK(CodeOf([&] { ExpectationsScore(bad_freq); }) ==
        ErrorCode::kInvalidAnswer);
  const std::vector<ExpectationItem> bad_imp{{0, 2}};
  CHECK(CodeOf([&] { ExpectationsScore(bad_imp); }) ==
        ErrorCode::kInvalidAnswer);
}

TEST_CASE("BandOf interval edges") {
  CHECK(BandOf(5.0) == Band::kReallyHigh);
  CHECK(BandOf(3.0) == Band::kMedium);
  CHECK(BandOf(0.5) == Band::kReallyLow);
  CHECK(BandOf(4.0) == Band::kHigh);
  CHECK(BandOf(4.0 + 1e-9) == Band::kReallyHigh);
  CHECK(BandOf(2.0) == Band::kLow);
  CHECK(BandOf(1.0) == Band::kReallyLow);
  CHECK(BandOf(1.0 + 1e-9) == Band::kLow);
  CHECK(CodeOf([] { BandOf(5.0 + 1e-9); }) == ErrorCode::kInvalidAnswer);
}

TEST_CASE("BandOf is monotone") {
  Rng rng(11);
  for (int i = 0; i < 5000; ++i) {
    double a = rng.Uniform(-1.0, 5.0);
    double b = rng.Uniform(-1.0, 5.0);
    if (a > b) std::swap(a, b);
    CHECK(BandOf(a) <= BandOf(b));
  }
}

TEST_CASE("scale properties on random answer lists") {
  Rng rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<int> answers(1 + rng.Below(12));
    for (int& a : answers) a = 1 + static_cast<int>(rng.Below(5));
    const auto s = AggregateLikert(answers);
    const auto [lo, hi] = std::minmax_element(answers.begin(), answers.end());
    CHECK(s.value >= *lo);
    CHECK(s.value <= *hi);

    const ExpectationItem item{1 + static_cast<int>(rng.Below(5)),
                               1 + static_cast<int>(rng.Below(3))};
    const std::vector<ExpectationItem> one{item};
    const std::vector<ExpectationItem> many(1 + rng.Below(9), item);
    CHECK(ExpectationsScore(one).value == ExpectationsScore(many).value);
    CHECK(ExpectationsScore(one).band == ExpectationsScore(many).band);
  }
}

TEST_CASE("ActivityLog construction invariants") {
  CHECK_NOTHROW(ActivityLog::Make(7, 30, 0, 0));
  CHECK(CodeOf([] { ActivityLog::Make(8, 30, 0, 0); }) ==
        ErrorCode::kInvalidActivity);
  CHECK(CodeOf([] { ActivityLog::Make(0, 0, -1, 0); }) ==
        ErrorCode::kInvalidActivity);
  CHECK(CodeOf([] { ActivityLog::Make(2, -1, 0, 0); }) ==
        ErrorCode::kInvalidActivity);
  CHECK(CodeOf([] { ActivityLog::Make(0, 10, 0, 0); }) ==
        ErrorCode::kInvalidActivity);
}

TEST_CASE("value tokens round-trip for every variable") {
  for (Variable v : kAllVariables) {
    for (std::size_t i = 0; i < Cardinality(v); ++i) {
      const auto token = ValueToken(v, i);
      REQUIRE(ValueFromToken(v, token).has_value());
      CHECK(*ValueFromToken(v, token) == i);
    }
    CHECK(VariableFromName(VariableName(v)) == v);
  }
  CHECK(ValueToken(Variable::kPhysicalHealth, 0) == "very_poor");
  CHECK(ValueToken(Variable::kSupport, 4) == "really_high");
  CHECK(ValueToken(Variable::kMajor, 0) == "not_sport_related");
  CHECK_FALSE(ValueFromToken(Variable::kGender, "other").has_value());
  CHECK(LabelFromToken("at_risk") == RiskLabel::kAtRisk);
  CHECK(LabelToken(RiskLabel::kNotAtRisk) == "not_at_risk");
}

}  // namespace
}  // namespace atrisk
