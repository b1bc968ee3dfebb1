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

#ifndef ATRISK_EVALUATION_HPP_
#define ATRISK_EVALUATION_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "atrisk/neuralnet.hpp"
#include "atrisk/survey.hpp"

namespace atrisk {

struct ConfusionCounts {
  std::size_t tp = 0;
  std::size_t tn = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;

  std::size_t total() const { return tp + tn + fp + fn; }
  friend bool operator==(const ConfusionCounts&,
                         const ConfusionCounts&) = default;
};

// Rates with AtRisk as the positive class. A rate whose denominator is zero
// is reported as 0 and the matching *_class_empty flag is set.
struct EvalReport {
  ConfusionCounts counts;
  double accuracy = 0.0;
  double tp_rate = 0.0;
  double tn_rate = 0.0;
  double fp_rate = 0.0;
  double fn_rate = 0.0;
  bool positive_class_empty = false;  // tp + fn == 0
  bool negative_class_empty = false;  // tn + fp == 0
  // Held-out records that could not be encoded and were scored as AtRisk.
  std::size_t abstained = 0;
};

// Partition of 0..labels.size()-1 into k folds. Within each class the
// indices are shuffled by `seed` and dealt round-robin, continuing the
// rotation across classes, so per-class and total fold sizes differ by at
// most one. Throws kInvalidArgument for k < 2 and kTooFewExamples for
// k > n.
std::vector<std::vector<std::size_t>> StratifiedFolds(
    std::span<const RiskLabel> labels, std::size_t k, std::uint64_t seed);

// Same, reading labels from the records. Throws kMissingLabel.
std::vector<std::vector<std::size_t>> StratifiedFolds(
    std::span<const SurveyResponse> data, std::size_t k, std::uint64_t seed);

// Throws kDimensionMismatch on unequal lengths, kEmptyEvaluation when empty.
ConfusionCounts Confusion(std::span<const RiskLabel> predictions,
                          std::span<const RiskLabel> truth);

// Throws kEmptyEvaluation when counts.total() == 0.
EvalReport Rates(const ConfusionCounts& counts);

struct CvWarning {
  std::size_t record;  // index into the caller's dataset
  std::size_t fold;
  std::string message;
};

struct CvResult {
  EvalReport report;
  std::vector<CvWarning> warnings;
};

struct CvOptions {
  // 0 picks std::thread::hardware_concurrency(); 1 runs folds inline.
  unsigned threads = 0;
};

// Stratified k-fold cross-validation. Records are first put in a canonical
// content order, so the result does not depend on the input order. Fold i
// infers its schema from the training folds only and trains a fresh network
// with seed MixSeed(config.seed, i); held-out predictions are pooled.
CvResult CrossValidate(std::span<const SurveyResponse> data, std::size_t k,
                       const TrainingConfig& config,
                       const CvOptions& options = {});

}  // namespace atrisk

#endif  // ATRISK_EVALUATION_HPP_
