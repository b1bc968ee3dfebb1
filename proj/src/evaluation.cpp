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

#include "atrisk/evaluation.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <thread>
#include <tuple>

#include "atrisk/encoder.hpp"
#include "atrisk/error.hpp"
#include "atrisk/rng.hpp"

namespace atrisk {
namespace {

constexpr std::uint64_t kFoldStream = 0xF01D;

auto ContentKey(const SurveyResponse& r) {
  std::array<std::size_t, kAllVariables.size()> values{};
  for (Variable v : kAllVariables) {
    values[static_cast<std::size_t>(v)] = ValueIndex(r, v);
  }
  const int label = r.label ? static_cast<int>(*r.label) : -1;
  return std::make_tuple(values, r.activity.mod_days(), r.activity.mod_min(),
                         r.activity.vig_days(), r.activity.vig_min(), label);
}

struct FoldOutcome {
  std::vector<std::size_t> held_out;  // canonical positions
  std::vector<RiskLabel> predictions;
  std::vector<CvWarning> warnings;
};

FoldOutcome RunFold(std::span<const SurveyResponse> sorted,
                    std::span<const std::size_t> original_index,
                    const std::vector<std::vector<std::size_t>>& folds,
                    std::size_t fold, const TrainingConfig& config) {
  std::vector<SurveyResponse> train_records;
  for (std::size_t f = 0; f < folds.size(); ++f) {
    if (f == fold) continue;
    for (std::size_t i : folds[f]) train_records.push_back(sorted[i]);
  }
  const EncodingSchema schema = InferSchema(train_records);
  std::vector<LabeledFeatures> train_set;
  train_set.reserve(train_records.size());
  for (const auto& r : train_records) {
    train_set.push_back({Encode(r, schema), *r.label});
  }
  TrainingConfig fold_config = config;
  fold_config.seed = MixSeed(config.seed, fold);
  const Network net = Train(train_set, fold_config);

  FoldOutcome out;
  out.held_out = folds[fold];
  std::sort(out.held_out.begin(), out.held_out.end());
  for (std::size_t i : out.held_out) {
    try {
      out.predictions.push_back(Predict(net, Encode(sorted[i], schema)).label);
    } catch (const UnknownCategoryError& e) {
      out.predictions.push_back(RiskLabel::kAtRisk);
      out.warnings.push_back({original_index[i], fold,
                              std::string(e.what()) +
                                  "; scored as at_risk"});
    }
  }
  return out;
}

}  // namespace

std::vector<std::vector<std::size_t>> StratifiedFolds(
    std::span<const RiskLabel> labels, std::size_t k, std::uint64_t seed) {
  if (k < 2) throw Error(ErrorCode::kInvalidArgument, "k must be >= 2");
  if (k > labels.size()) {
    throw Error(ErrorCode::kTooFewExamples,
                "k=" + std::to_string(k) + " exceeds the " +
                    std::to_string(labels.size()) + " available examples");
  }
  std::vector<std::vector<std::size_t>> folds(k);
  Rng rng(seed);
  std::size_t next_fold = 0;
  for (RiskLabel cls : {RiskLabel::kAtRisk, RiskLabel::kNotAtRisk}) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == cls) members.push_back(i);
    }
    rng.Shuffle(std::span<std::size_t>(members));
    for (std::size_t i : members) {
      folds[next_fold].push_back(i);
      next_fold = (next_fold + 1) % k;
    }
  }
  return folds;
}

std::vector<std::vector<std::size_t>> StratifiedFolds(
    std::span<const SurveyResponse> data, std::size_t k, std::uint64_t seed) {
  std::vector<RiskLabel> labels;
  labels.reserve(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (!data[i].label) {
      throw Error(ErrorCode::kMissingLabel,
                  "record " + std::to_string(i) + " has no label");
    }
    labels.push_back(*data[i].label);
  }
  return StratifiedFolds(labels, k, seed);
}

ConfusionCounts Confusion(std::span<const RiskLabel> predictions,
                          std::span<const RiskLabel> truth) {
  if (predictions.size() != truth.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::to_string(predictions.size()) + " predictions for " +
                    std::to_string(truth.size()) + " labels");
  }
  if (predictions.empty()) {
    throw Error(ErrorCode::kEmptyEvaluation, "nothing to evaluate");
  }
  ConfusionCounts c;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const bool pred_risk = predictions[i] == RiskLabel::kAtRisk;
    const bool true_risk = truth[i] == RiskLabel::kAtRisk;
    if (pred_risk && true_risk) ++c.tp;
    else if (!pred_risk && !true_risk) ++c.tn;
    else if (pred_risk) ++c.fp;
    else ++c.fn;
  }
  return c;
}

EvalReport Rates(const ConfusionCounts& counts) {
  const std::size_t total = counts.total();
  if (total == 0) throw Error(ErrorCode::kEmptyEvaluation, "no counts");
  auto ratio = [](std::size_t num, std::size_t den) {
    return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
  };
  EvalReport r;
  r.counts = counts;
  r.accuracy = ratio(counts.tp + counts.tn, total);
  r.tp_rate = ratio(counts.tp, counts.tp + counts.fn);
  r.fn_rate = ratio(counts.fn, counts.tp + counts.fn);
  r.tn_rate = ratio(counts.tn, counts.tn + counts.fp);
  r.fp_rate = ratio(counts.fp, counts.tn + counts.fp);
  r.positive_class_empty = counts.tp + counts.fn == 0;
  r.negative_class_empty = counts.tn + counts.fp == 0;
  return r;
}

CvResult CrossValidate(std::span<const SurveyResponse> data, std::size_t k,
                       const TrainingConfig& config,
                       const CvOptions& options) {
  config.Validate();
  // Labels are checked before sorting so errors name the caller's index.
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (!data[i].label) {
      throw Error(ErrorCode::kMissingLabel,
                  "record " + std::to_string(i) + " has no label");
    }
  }

  std::vector<std::size_t> original(data.size());
  std::iota(original.begin(), original.end(), std::size_t{0});
  std::stable_sort(original.begin(), original.end(),
                   [&](std::size_t a, std::size_t b) {
                     return ContentKey(data[a]) < ContentKey(data[b]);
                   });
  std::vector<SurveyResponse> sorted;
  sorted.reserve(data.size());
  for (std::size_t i : original) sorted.push_back(data[i]);

  const auto folds =
      StratifiedFolds(std::span<const SurveyResponse>(sorted), k,
                      MixSeed(config.seed, kFoldStream));

  unsigned threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  std::vector<FoldOutcome> outcomes(k);
  if (threads == 1) {
    for (std::size_t f = 0; f < k; ++f) {
      outcomes[f] = RunFold(sorted, original, folds, f, config);
    }
  } else {
    // Batches of `threads` folds; results land in their fold slot.
    for (std::size_t start = 0; start < k; start += threads) {
      std::vector<std::future<FoldOutcome>> pending;
      const std::size_t stop = std::min<std::size_t>(k, start + threads);
      for (std::size_t f = start; f < stop; ++f) {
        pending.push_back(std::async(std::launch::async, [&, f] {
          return RunFold(sorted, original, folds, f, config);
        }));
      }
      for (std::size_t f = start; f < stop; ++f) {
        outcomes[f] = pending[f - start].get();
      }
    }
  }

  std::vector<RiskLabel> predictions(sorted.size(), RiskLabel::kAtRisk);
  std::vector<RiskLabel> truth(sorted.size(), RiskLabel::kAtRisk);
  CvResult result;
  for (const auto& outcome : outcomes) {
    for (std::size_t j = 0; j < outcome.held_out.size(); ++j) {
      const std::size_t pos = outcome.held_out[j];
      predictions[pos] = outcome.predictions[j];
      truth[pos] = *sorted[pos].label;
    }
    result.warnings.insert(result.warnings.end(), outcome.warnings.begin(),
                           outcome.warnings.end());
  }
  result.report = Rates(Confusion(predictions, truth));
  result.report.abstained = result.warnings.size();
  return result;
}

}  // namespace atrisk
