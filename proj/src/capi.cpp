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

#include "atrisk/atrisk.h"

#include <algorithm>
#include <exception>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "atrisk/csv.hpp"
#include "atrisk/encoder.hpp"
#include "atrisk/error.hpp"
#include "atrisk/evaluation.hpp"
#include "atrisk/model_file.hpp"
#include "atrisk/pipeline.hpp"
#include "atrisk/risk_oracle.hpp"
#include "atrisk/synth.hpp"
#include "atrisk/version.hpp"

struct atrisk_cohort_spec {
  atrisk::CohortSpec spec;
};

struct atrisk_dataset {
  std::vector<atrisk::SurveyResponse> records;
};

struct atrisk_model {
  atrisk::ModelFile file;
};

namespace {

using atrisk::Error;
using atrisk::ErrorCode;

static_assert(static_cast<int>(ErrorCode::kEmptyScale) == ATRISK_EMPTY_SCALE);
static_assert(static_cast<int>(ErrorCode::kUnknownCategory) ==
              ATRISK_UNKNOWN_CATEGORY);
static_assert(static_cast<int>(ErrorCode::kInvalidSpec) == ATRISK_INVALID_SPEC);
static_assert(static_cast<int>(ErrorCode::kInternal) == ATRISK_INTERNAL);

thread_local std::string g_last_error;

atrisk_status Fail(atrisk_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into a status and saved message.
template <typename F>
atrisk_status Guard(F&& body) {
  try {
    body();
    return ATRISK_OK;
  } catch (const Error& e) {
    return Fail(static_cast<atrisk_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(ATRISK_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(ATRISK_INTERNAL, e.what());
  } catch (...) {
    return Fail(ATRISK_INTERNAL, "unknown exception");
  }
}

void Require(const void* p, const char* what) {
  if (p == nullptr) {
    throw Error(ErrorCode::kInvalidArgument, std::string(what) + " is null");
  }
}

atrisk::ActivityLog ToLog(const atrisk_activity* log) {
  Require(log, "activity");
  return atrisk::ActivityLog::Make(log->mod_days, log->mod_min, log->vig_days,
                                   log->vig_min);
}

atrisk::TrainingConfig ToConfig(const atrisk_training_config* c) {
  Require(c, "config");
  atrisk::TrainingConfig out;
  out.epochs = c->epochs;
  out.lr0 = c->lr0;
  out.decay = c->decay;
  out.momentum = c->momentum;
  out.seed = c->seed;
  if (c->hidden > 0) out.hidden = c->hidden;
  out.zero_init = c->zero_init != 0;
  out.Validate();
  return out;
}

}  // namespace

extern "C" {

const char* atrisk_version(void) { return atrisk::kVersion.data(); }

const char* atrisk_status_name(atrisk_status status) {
  if (status == ATRISK_OK) return "Ok";
  if (status < ATRISK_EMPTY_SCALE || status > ATRISK_INTERNAL) return "Unknown";
  return atrisk::ErrorCodeName(static_cast<ErrorCode>(status)).data();
}

const char* atrisk_last_error(void) { return g_last_error.c_str(); }

int atrisk_status_is_input_error(atrisk_status status) {
  return status != ATRISK_OK && status != ATRISK_INTERNAL;
}

atrisk_status atrisk_weekly_met(const atrisk_activity* log, double* met) {
  return Guard([&] {
    Require(met, "met");
    *met = atrisk::WeeklyMet(ToLog(log)).value;
  });
}

atrisk_status atrisk_classify_activity(const atrisk_activity* log,
                                       atrisk_label* label) {
  return Guard([&] {
    Require(label, "label");
    *label = static_cast<atrisk_label>(atrisk::ClassifyActivity(ToLog(log)));
  });
}

atrisk_status atrisk_label_csv(const char* in_path, const char* out_path,
                               size_t* rows) {
  return Guard([&] {
    Require(in_path, "in_path");
    Require(out_path, "out_path");
    const auto labeled = atrisk::LabelTable(atrisk::ReadCsvFile(in_path));
    atrisk::WriteCsvFile(out_path, labeled);
    if (rows) *rows = labeled.rows.size();
  });
}

atrisk_status atrisk_cohort_spec_default(int full_support,
                                         atrisk_cohort_spec** out) {
  return Guard([&] {
    Require(out, "out");
    *out = new atrisk_cohort_spec{atrisk::DefaultSpec(full_support != 0)};
  });
}

atrisk_status atrisk_cohort_spec_load(const char* path,
                                      atrisk_cohort_spec** out) {
  return Guard([&] {
    Require(path, "path");
    Require(out, "out");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::kIo, std::string("cannot open ") + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    *out = new atrisk_cohort_spec{atrisk::SpecFromJson(buf.str())};
  });
}

atrisk_status atrisk_cohort_spec_set_beta(atrisk_cohort_spec* spec,
                                          double beta) {
  return Guard([&] {
    Require(spec, "spec");
    atrisk::CohortSpec updated = spec->spec;
    updated.beta = beta;
    updated.Validate();
    spec->spec = updated;
  });
}

void atrisk_cohort_spec_free(atrisk_cohort_spec* spec) { delete spec; }

atrisk_status atrisk_dataset_generate(const atrisk_cohort_spec* spec, size_t n,
                                      uint64_t seed, atrisk_dataset** out) {
  return Guard([&] {
    Require(spec, "spec");
    Require(out, "out");
    *out = new atrisk_dataset{atrisk::GenerateCohort(spec->spec, n, seed)};
  });
}

atrisk_status atrisk_dataset_read_csv(const char* path, atrisk_dataset** out) {
  return Guard([&] {
    Require(path, "path");
    Require(out, "out");
    *out = new atrisk_dataset{atrisk::ReadResponses(path)};
  });
}

atrisk_status atrisk_dataset_write_csv(const atrisk_dataset* data,
                                       const char* path) {
  return Guard([&] {
    Require(data, "data");
    Require(path, "path");
    atrisk::WriteResponses(path, data->records);
  });
}

atrisk_status atrisk_dataset_csv(const atrisk_dataset* data, char* buf,
                                 size_t cap, size_t* len) {
  return Guard([&] {
    Require(data, "data");
    Require(len, "len");
    std::ostringstream out;
    atrisk::WriteCsv(out, atrisk::ResponsesToTable(data->records));
    const std::string text = out.str();
    *len = text.size();
    if (buf && cap > 0) {
      const std::size_t n = std::min(cap - 1, text.size());
      std::copy_n(text.data(), n, buf);
      buf[n] = '\0';
    }
  });
}

size_t atrisk_dataset_size(const atrisk_dataset* data) {
  return data ? data->records.size() : 0;
}

atrisk_status atrisk_dataset_label_counts(const atrisk_dataset* data,
                                          size_t* at_risk, size_t* not_at_risk,
                                          size_t* unlabeled) {
  return Guard([&] {
    Require(data, "data");
    size_t counts[3] = {0, 0, 0};
    for (const auto& r : data->records) {
      if (!r.label) ++counts[2];
      else ++counts[static_cast<int>(*r.label)];
    }
    if (at_risk) *at_risk = counts[0];
    if (not_at_risk) *not_at_risk = counts[1];
    if (unlabeled) *unlabeled = counts[2];
  });
}

atrisk_status atrisk_dataset_input_nodes(const atrisk_dataset* data,
                                         size_t* nodes) {
  return Guard([&] {
    Require(data, "data");
    Require(nodes, "nodes");
    *nodes = atrisk::InferSchema(data->records).total_nodes();
  });
}

void atrisk_dataset_free(atrisk_dataset* data) { delete data; }

void atrisk_training_config_init(atrisk_training_config* config) {
  if (!config) return;
  const atrisk::TrainingConfig d;
  *config = atrisk_training_config{d.epochs, d.lr0,  d.decay, d.momentum,
                                   d.seed,   0,      0};
}

atrisk_status atrisk_default_hidden(size_t n_in, size_t n_out,
                                    size_t* hidden) {
  return Guard([&] {
    Require(hidden, "hidden");
    if (n_in == 0 || n_out == 0) {
      throw Error(ErrorCode::kInvalidArgument, "layer sizes must be >= 1");
    }
    *hidden = atrisk::DefaultHidden(n_in, n_out);
  });
}

atrisk_status atrisk_model_train(const atrisk_dataset* data,
                                 const atrisk_training_config* config,
                                 atrisk_model** out) {
  return Guard([&] {
    Require(data, "data");
    Require(out, "out");
    *out = new atrisk_model{atrisk::TrainModel(data->records, ToConfig(config))};
  });
}

atrisk_status atrisk_model_save(const atrisk_model* model, const char* path) {
  return Guard([&] {
    Require(model, "model");
    Require(path, "path");
    atrisk::SaveModelFile(path, model->file);
  });
}

atrisk_status atrisk_model_load(const char* path, atrisk_model** out) {
  return Guard([&] {
    Require(path, "path");
    Require(out, "out");
    *out = new atrisk_model{atrisk::LoadModelFile(path)};
  });
}

void atrisk_model_free(atrisk_model* model) { delete model; }

size_t atrisk_model_input_size(const atrisk_model* model) {
  return model ? model->file.network.input_size() : 0;
}

size_t atrisk_model_hidden_size(const atrisk_model* model) {
  if (!model) return 0;
  const auto sizes = model->file.network.layer_sizes();
  return sizes.size() > 2 ? sizes[1] : 0;
}

double atrisk_model_training_accuracy(const atrisk_model* model) {
  return model ? model->file.training_accuracy : 0.0;
}

atrisk_status atrisk_model_predict_features(const atrisk_model* model,
                                            const double* x, size_t n,
                                            atrisk_label* label,
                                            double scores[2]) {
  return Guard([&] {
    Require(model, "model");
    Require(x, "x");
    const auto p = atrisk::Predict(model->file.network, std::span(x, n));
    if (label) *label = static_cast<atrisk_label>(p.label);
    if (scores) {
      scores[0] = p.scores[0];
      scores[1] = p.scores[1];
    }
  });
}

atrisk_status atrisk_model_accuracy(const atrisk_model* model,
                                    const atrisk_dataset* data,
                                    double* accuracy) {
  return Guard([&] {
    Require(model, "model");
    Require(data, "data");
    Require(accuracy, "accuracy");
    *accuracy = atrisk::Accuracy(model->file, data->records);
  });
}

atrisk_status atrisk_model_predict_csv(const atrisk_model* model,
                                       const char* in_path,
                                       const char* out_path,
                                       atrisk_predict_summary* summary,
                                       atrisk_warning_fn on_warning,
                                       void* user) {
  return Guard([&] {
    Require(model, "model");
    Require(in_path, "in_path");
    Require(out_path, "out_path");
    const auto input = atrisk::ReadCsvFile(in_path);
    atrisk::PredictSummary s;
    const auto out = atrisk::PredictTable(model->file, input, &s);
    atrisk::WriteCsvFile(out_path, out);
    if (on_warning) {
      const std::size_t col = *out.Find("warning");
      for (std::size_t i = 0; i < out.rows.size(); ++i) {
        if (out.rows[i][col].empty()) continue;
        const std::string msg = "line " + std::to_string(out.line_numbers[i]) +
                                ": " + out.rows[i][col] + "; flagged at_risk";
        on_warning(user, msg.c_str());
      }
    }
    if (summary) {
      *summary = atrisk_predict_summary{s.rows, s.warnings, s.labeled, s.correct};
    }
  });
}

atrisk_status atrisk_cross_validate(const atrisk_dataset* data, size_t k,
                                    const atrisk_training_config* config,
                                    unsigned threads,
                                    atrisk_eval_report* report,
                                    atrisk_warning_fn on_warning, void* user) {
  return Guard([&] {
    Require(data, "data");
    Require(report, "report");
    const auto result = atrisk::CrossValidate(data->records, k, ToConfig(config),
                                              atrisk::CvOptions{threads});
    if (on_warning) {
      for (const auto& w : result.warnings) {
        const std::string msg = "record " + std::to_string(w.record) +
                                " (fold " + std::to_string(w.fold) +
                                "): " + w.message;
        on_warning(user, msg.c_str());
      }
    }
    const auto& r = result.report;
    *report = atrisk_eval_report{r.counts.tp,           r.counts.tn,
                                 r.counts.fp,           r.counts.fn,
                                 r.accuracy,            r.tp_rate,
                                 r.tn_rate,             r.fp_rate,
                                 r.fn_rate,             r.positive_class_empty,
                                 r.negative_class_empty, r.abstained};
  });
}

}  // extern "C"
