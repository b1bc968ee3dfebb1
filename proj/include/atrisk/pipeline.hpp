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

#ifndef ATRISK_PIPELINE_HPP_
#define ATRISK_PIPELINE_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "atrisk/csv.hpp"
#include "atrisk/model_file.hpp"
#include "atrisk/neuralnet.hpp"
#include "atrisk/survey.hpp"

namespace atrisk {

// Infers the schema, trains, and records the training-set accuracy. The
// returned config has `hidden` resolved. Throws kMissingLabel for an
// unlabeled record and kEmptyDataset for no records.
ModelFile TrainModel(std::span<const SurveyResponse> data,
                     const TrainingConfig& config);

struct RowPrediction {
  Prediction prediction;
  // Set when the response could not be encoded; the row is then scored
  // AtRisk with scores {1, 0}.
  std::optional<std::string> warning;
};

RowPrediction PredictResponse(const ModelFile& model,
                              const SurveyResponse& response);

// Fraction of labeled records predicted correctly; unlabeled ones skipped.
// Throws kEmptyEvaluation when nothing is labeled.
double Accuracy(const ModelFile& model, std::span<const SurveyResponse> data);

struct PredictSummary {
  std::size_t rows = 0;
  std::size_t warnings = 0;
  std::size_t labeled = 0;
  std::size_t correct = 0;
};

// Appends (or overwrites) predicted_label, score_at_risk, score_not_at_risk
// and warning columns. Activity columns are not needed.
CsvTable PredictTable(const ModelFile& model, const CsvTable& input,
                      PredictSummary* summary = nullptr);

// Appends (or overwrites) the label column from the activity columns. Other
// columns pass through untouched.
CsvTable LabelTable(const CsvTable& input);

}  // namespace atrisk

#endif  // ATRISK_PIPELINE_HPP_
