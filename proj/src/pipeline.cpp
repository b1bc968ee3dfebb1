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

#include "atrisk/pipeline.hpp"

#include "atrisk/encoder.hpp"
#include "atrisk/error.hpp"
#include "atrisk/risk_oracle.hpp"

namespace atrisk {
namespace {

std::size_t SetColumn(CsvTable& t, std::string_view name) {
  if (auto i = t.Find(name)) return *i;
  t.header.emplace_back(name);
  for (auto& row : t.rows) row.emplace_back();
  return t.header.size() - 1;
}

}  // namespace

ModelFile TrainModel(std::span<const SurveyResponse> data,
                     const TrainingConfig& config) {
  config.Validate();
  if (data.empty()) throw Error(ErrorCode::kEmptyDataset, "no training data");
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (!data[i].label) {
      throw Error(ErrorCode::kMissingLabel,
                  "record " + std::to_string(i) + " has no label");
    }
  }
  EncodingSchema schema = InferSchema(data);
  std::vector<LabeledFeatures> train;
  train.reserve(data.size());
  for (const auto& r : data) train.push_back({Encode(r, schema), *r.label});

  TrainingConfig resolved = config;
  resolved.hidden = config.hidden.value_or(DefaultHidden(schema.total_nodes(), 2));
  Network net = Train(train, resolved);

  std::size_t correct = 0;
  for (const auto& t : train) {
    if (Predict(net, t.features).label == t.label) ++correct;
  }
  return ModelFile{std::move(schema), std::move(net), resolved, data.size(),
                   static_cast<double>(correct) / static_cast<double>(data.size())};
}

RowPrediction PredictResponse(const ModelFile& model,
                              const SurveyResponse& response) {
  try {
    return {Predict(model.network, Encode(response, model.schema)), std::nullopt};
  } catch (const UnknownCategoryError& e) {
    return {Prediction{RiskLabel::kAtRisk, {1.0, 0.0}},
            "unknown_category:" + e.variable() + "=" + e.value()};
  }
}

double Accuracy(const ModelFile& model, std::span<const SurveyResponse> data) {
  std::size_t labeled = 0;
  std::size_t correct = 0;
  for (const auto& r : data) {
    if (!r.label) continue;
    ++labeled;
    if (PredictResponse(model, r).prediction.label == *r.label) ++correct;
  }
  if (labeled == 0) throw Error(ErrorCode::kEmptyEvaluation, "no labeled rows");
  return static_cast<double>(correct) / static_cast<double>(labeled);
}

CsvTable PredictTable(const ModelFile& model, const CsvTable& input,
                      PredictSummary* summary) {
  const auto responses = ResponsesFromTable(input, /*require_activity=*/false);
  CsvTable out = input;
  const std::size_t label_col = SetColumn(out, "predicted_label");
  const std::size_t risk_col = SetColumn(out, "score_at_risk");
  const std::size_t safe_col = SetColumn(out, "score_not_at_risk");
  const std::size_t warn_col = SetColumn(out, "warning");
  PredictSummary s;
  for (std::size_t i = 0; i < responses.size(); ++i) {
    const RowPrediction p = PredictResponse(model, responses[i]);
    auto& row = out.rows[i];
    row[label_col] = LabelToken(p.prediction.label);
    // Abstained rows carry no network scores.
    row[risk_col] = p.warning ? "" : FormatDouble(p.prediction.scores[0]);
    row[safe_col] = p.warning ? "" : FormatDouble(p.prediction.scores[1]);
    row[warn_col] = p.warning.value_or("");
    ++s.rows;
    if (p.warning) ++s.warnings;
    if (responses[i].label) {
      ++s.labeled;
      if (*responses[i].label == p.prediction.label) ++s.correct;
    }
  }
  if (summary) *summary = s;
  return out;
}

CsvTable LabelTable(const CsvTable& input) {
  CsvTable out = input;
  const std::size_t col = SetColumn(out, "label");
  for (std::size_t i = 0; i < out.rows.size(); ++i) {
    out.rows[i][col] = LabelToken(ClassifyActivity(ActivityFromRow(input, i)));
  }
  return out;
}

}  // namespace atrisk
