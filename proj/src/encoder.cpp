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

#include "atrisk/encoder.hpp"

#include <algorithm>
#include <string>

#include "atrisk/error.hpp"

namespace atrisk {

EncodingSchema::EncodingSchema(std::vector<VariableEncoding> entries)
    : entries_(std::move(entries)) {
  if (entries_.size() != kAllVariables.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "schema must list all " +
                    std::to_string(kAllVariables.size()) + " variables");
  }
  std::size_t offset = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    const std::string name(VariableName(kAllVariables[i]));
    if (e.variable != kAllVariables[i]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "schema entry " + std::to_string(i) + " should be " + name);
    }
    if (e.values.empty() ||
        !std::is_sorted(e.values.begin(), e.values.end()) ||
        std::adjacent_find(e.values.begin(), e.values.end()) !=
            e.values.end() ||
        e.values.back() >= Cardinality(e.variable)) {
      throw Error(ErrorCode::kInvalidArgument, "bad value list for " + name);
    }
    const std::size_t expected_width = IsBinary(e.variable) ? 1 : e.values.size();
    if (IsBinary(e.variable) && e.values.size() != 2) {
      throw Error(ErrorCode::kInvalidArgument,
                  "binary variable " + name + " must list both values");
    }
    if (e.width != expected_width || e.offset != offset) {
      throw Error(ErrorCode::kInvalidArgument, "bad node layout for " + name);
    }
    offset += e.width;
  }
  total_nodes_ = offset;
}

EncodingSchema InferSchema(std::span<const SurveyResponse> dataset) {
  if (dataset.empty()) {
    throw Error(ErrorCode::kEmptyDataset, "cannot infer schema from no data");
  }
  std::vector<VariableEncoding> entries;
  std::size_t offset = 0;
  for (Variable v : kAllVariables) {
    VariableEncoding e{v, {}, offset, 0};
    if (IsBinary(v)) {
      e.values = {0, 1};
      e.width = 1;
    } else {
      std::array<bool, kLevels> seen{};
      for (const auto& r : dataset) seen[ValueIndex(r, v)] = true;
      for (std::size_t i = 0; i < kLevels; ++i) {
        if (seen[i]) e.values.push_back(i);
      }
      e.width = e.values.size();
    }
    offset += e.width;
    entries.push_back(std::move(e));
  }
  return EncodingSchema(std::move(entries));
}

FeatureVector Encode(const SurveyResponse& response,
                     const EncodingSchema& schema) {
  FeatureVector out;
  out.bits.assign(schema.total_nodes(), 0);
  for (const auto& e : schema.entries()) {
    const std::size_t value = ValueIndex(response, e.variable);
    if (IsBinary(e.variable)) {
      out.bits[e.offset] = static_cast<std::uint8_t>(value);
      continue;
    }
    const auto it = std::lower_bound(e.values.begin(), e.values.end(), value);
    if (it == e.values.end() || *it != value) {
      throw UnknownCategoryError(std::string(VariableName(e.variable)),
                                 std::string(ValueToken(e.variable, value)));
    }
    out.bits[e.offset + static_cast<std::size_t>(it - e.values.begin())] = 1;
  }
  return out;
}

std::array<std::size_t, kAllVariables.size()> Decode(
    const FeatureVector& features, const EncodingSchema& schema) {
  if (features.bits.size() != schema.total_nodes()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "feature vector has " + std::to_string(features.bits.size()) +
                    " bits, schema expects " +
                    std::to_string(schema.total_nodes()));
  }
  std::array<std::size_t, kAllVariables.size()> values{};
  for (const auto& e : schema.entries()) {
    const auto slot = static_cast<std::size_t>(e.variable);
    if (IsBinary(e.variable)) {
      values[slot] = features.bits[e.offset] ? 1 : 0;
      continue;
    }
    std::size_t hot = e.width;
    for (std::size_t i = 0; i < e.width; ++i) {
      if (!features.bits[e.offset + i]) continue;
      if (hot != e.width) hot = e.width + 1;  // second set bit
      else hot = i;
    }
    if (hot >= e.width) {
      throw Error(ErrorCode::kInvalidArgument,
                  "block for " + std::string(VariableName(e.variable)) +
                      " is not one-hot");
    }
    values[slot] = e.values[hot];
  }
  return values;
}

}  // namespace atrisk
