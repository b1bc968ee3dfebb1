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

#ifndef ATRISK_ENCODER_HPP_
#define ATRISK_ENCODER_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "atrisk/survey.hpp"

namespace atrisk {

// Input nodes allocated to one categorical variable.
struct VariableEncoding {
  Variable variable;
  // Encodable canonical value indices, ascending. Binary variables always
  // list both values and own a single node; five-level variables own one
  // node per listed value.
  std::vector<std::size_t> values;
  std::size_t offset = 0;
  std::size_t width = 0;

  friend bool operator==(const VariableEncoding&,
                         const VariableEncoding&) = default;
};

class EncodingSchema {
 public:
  // Validates that entries cover each variable once, in kAllVariables order,
  // with contiguous offsets and widths consistent with the value lists.
  // Throws Error(kInvalidArgument) otherwise.
  explicit EncodingSchema(std::vector<VariableEncoding> entries);

  const std::vector<VariableEncoding>& entries() const { return entries_; }
  const VariableEncoding& entry(Variable v) const {
    return entries_[static_cast<std::size_t>(v)];
  }
  std::size_t total_nodes() const { return total_nodes_; }

  friend bool operator==(const EncodingSchema&,
                         const EncodingSchema&) = default;

 private:
  std::vector<VariableEncoding> entries_;
  std::size_t total_nodes_ = 0;
};

struct FeatureVector {
  std::vector<std::uint8_t> bits;

  std::vector<double> AsInput() const {
    return std::vector<double>(bits.begin(), bits.end());
  }
  friend bool operator==(const FeatureVector&,
                         const FeatureVector&) = default;
};

// One node per binary variable; one node per value observed at least once
// for the five-level variables. Throws kEmptyDataset on an empty dataset.
EncodingSchema InferSchema(std::span<const SurveyResponse> dataset);

// Throws UnknownCategoryError when a five-level value has no node.
FeatureVector Encode(const SurveyResponse& response,
                     const EncodingSchema& schema);

// Inverse of Encode on the categorical fields: canonical value index per
// variable. Throws kDimensionMismatch on a wrong-length vector and
// kInvalidArgument when a one-hot block does not have exactly one bit set.
std::array<std::size_t, kAllVariables.size()> Decode(
    const FeatureVector& features, const EncodingSchema& schema);

}  // namespace atrisk

#endif  // ATRISK_ENCODER_HPP_
