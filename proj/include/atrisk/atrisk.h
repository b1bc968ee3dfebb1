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

/*
 * C interface to the atrisk library.
 *
 * All objects are opaque handles created by an atrisk_*_create/load/generate
 * function and released with the matching *_free. Every fallible call
 * returns an atrisk_status; on failure a human-readable message is kept per
 * thread and can be read with atrisk_last_error() until the next failing
 * call on that thread.
 */
#ifndef ATRISK_ATRISK_H_
#define ATRISK_ATRISK_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ATRISK_BUILDING_LIBRARY)
#    define ATRISK_API __declspec(dllexport)
#  else
#    define ATRISK_API __declspec(dllimport)
#  endif
#else
#  define ATRISK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum atrisk_status {
  ATRISK_OK = 0,
  ATRISK_EMPTY_SCALE = 1,
  ATRISK_INVALID_ANSWER = 2,
  ATRISK_INVALID_ACTIVITY = 3,
  ATRISK_EMPTY_DATASET = 4,
  ATRISK_UNKNOWN_CATEGORY = 5,
  ATRISK_INVALID_TOPOLOGY = 6,
  ATRISK_DIMENSION_MISMATCH = 7,
  ATRISK_TOO_FEW_EXAMPLES = 8,
  ATRISK_MISSING_LABEL = 9,
  ATRISK_EMPTY_EVALUATION = 10,
  ATRISK_INVALID_SPEC = 11,
  ATRISK_PARSE_ERROR = 12,
  ATRISK_MISSING_COLUMN = 13,
  ATRISK_IO_ERROR = 14,
  ATRISK_UNSUPPORTED_FORMAT = 15,
  ATRISK_INVALID_ARGUMENT = 16,
  ATRISK_INTERNAL = 17
} atrisk_status;

typedef enum atrisk_label {
  ATRISK_AT_RISK = 0,
  ATRISK_NOT_AT_RISK = 1
} atrisk_label;

typedef struct atrisk_cohort_spec atrisk_cohort_spec;
typedef struct atrisk_dataset atrisk_dataset;
typedef struct atrisk_model atrisk_model;

typedef struct atrisk_activity {
  int mod_days;
  double mod_min;
  int vig_days;
  double vig_min;
} atrisk_activity;

/* hidden == 0 selects floor((inputs + 2) / 2). */
typedef struct atrisk_training_config {
  int epochs;
  double lr0;
  double decay;
  double momentum;
  uint64_t seed;
  size_t hidden;
  int zero_init;
} atrisk_training_config;

typedef struct atrisk_eval_report {
  size_t tp, tn, fp, fn;
  double accuracy;
  double tp_rate, tn_rate, fp_rate, fn_rate;
  int positive_class_empty;
  int negative_class_empty;
  size_t abstained;
} atrisk_eval_report;

typedef struct atrisk_predict_summary {
  size_t rows;
  size_t warnings;
  size_t labeled;
  size_t correct;
} atrisk_predict_summary;

/* Receives one message per abstained (unencodable) record. */
typedef void (*atrisk_warning_fn)(void* user, const char* message);

ATRISK_API const char* atrisk_version(void);
ATRISK_API const char* atrisk_status_name(atrisk_status status);
ATRISK_API const char* atrisk_last_error(void);
/* Nonzero for statuses caused by bad input rather than a library fault. */
ATRISK_API int atrisk_status_is_input_error(atrisk_status status);

/* Labeling ---------------------------------------------------------------- */

ATRISK_API atrisk_status atrisk_weekly_met(const atrisk_activity* log,
                                           double* met);
ATRISK_API atrisk_status atrisk_classify_activity(const atrisk_activity* log,
                                                  atrisk_label* label);
/* Adds or overwrites the label column of a CSV from its activity columns. */
ATRISK_API atrisk_status atrisk_label_csv(const char* in_path,
                                          const char* out_path,
                                          size_t* rows);

/* Synthetic cohorts ------------------------------------------------------- */

ATRISK_API atrisk_status atrisk_cohort_spec_default(int full_support,
                                                    atrisk_cohort_spec** out);
/* JSON overlay on the default spec. */
ATRISK_API atrisk_status atrisk_cohort_spec_load(const char* path,
                                                 atrisk_cohort_spec** out);
ATRISK_API atrisk_status atrisk_cohort_spec_set_beta(atrisk_cohort_spec* spec,
                                                     double beta);
ATRISK_API void atrisk_cohort_spec_free(atrisk_cohort_spec* spec);

/* Datasets ---------------------------------------------------------------- */

ATRISK_API atrisk_status atrisk_dataset_generate(const atrisk_cohort_spec* spec,
                                                 size_t n, uint64_t seed,
                                                 atrisk_dataset** out);
ATRISK_API atrisk_status atrisk_dataset_read_csv(const char* path,
                                                 atrisk_dataset** out);
ATRISK_API atrisk_status atrisk_dataset_write_csv(const atrisk_dataset* data,
                                                  const char* path);
/* Canonical CSV text. Copies up to cap bytes (NUL-terminated when room
 * allows) and stores the full length, excluding NUL, in *len. */
ATRISK_API atrisk_status atrisk_dataset_csv(const atrisk_dataset* data,
                                            char* buf, size_t cap,
                                            size_t* len);
ATRISK_API size_t atrisk_dataset_size(const atrisk_dataset* data);
ATRISK_API atrisk_status atrisk_dataset_label_counts(
    const atrisk_dataset* data, size_t* at_risk, size_t* not_at_risk,
    size_t* unlabeled);
/* Input width of the schema inferred from the whole dataset. */
ATRISK_API atrisk_status atrisk_dataset_input_nodes(const atrisk_dataset* data,
                                                    size_t* nodes);
ATRISK_API void atrisk_dataset_free(atrisk_dataset* data);

/* Models ------------------------------------------------------------------ */

ATRISK_API void atrisk_training_config_init(atrisk_training_config* config);
ATRISK_API atrisk_status atrisk_default_hidden(size_t n_in, size_t n_out,
                                               size_t* hidden);

ATRISK_API atrisk_status atrisk_model_train(
    const atrisk_dataset* data, const atrisk_training_config* config,
    atrisk_model** out);
ATRISK_API atrisk_status atrisk_model_save(const atrisk_model* model,
                                           const char* path);
ATRISK_API atrisk_status atrisk_model_load(const char* path,
                                           atrisk_model** out);
ATRISK_API void atrisk_model_free(atrisk_model* model);

ATRISK_API size_t atrisk_model_input_size(const atrisk_model* model);
ATRISK_API size_t atrisk_model_hidden_size(const atrisk_model* model);
ATRISK_API double atrisk_model_training_accuracy(const atrisk_model* model);

/* scores[0] is the risk node, scores[1] the no-risk node. */
ATRISK_API atrisk_status atrisk_model_predict_features(
    const atrisk_model* model, const double* x, size_t n, atrisk_label* label,
    double scores[2]);
/* Accuracy over the labeled records of a dataset. */
ATRISK_API atrisk_status atrisk_model_accuracy(const atrisk_model* model,
                                               const atrisk_dataset* data,
                                               double* accuracy);
/* Writes the input rows plus predicted_label, score_at_risk,
 * score_not_at_risk and warning columns. */
ATRISK_API atrisk_status atrisk_model_predict_csv(
    const atrisk_model* model, const char* in_path, const char* out_path,
    atrisk_predict_summary* summary, atrisk_warning_fn on_warning, void* user);

/* Evaluation -------------------------------------------------------------- */

/* threads == 0 uses the hardware concurrency. */
ATRISK_API atrisk_status atrisk_cross_validate(
    const atrisk_dataset* data, size_t k, const atrisk_training_config* config,
    unsigned threads, atrisk_eval_report* report, atrisk_warning_fn on_warning,
    void* user);

#ifdef __cplusplus
}
#endif

#endif /* ATRISK_ATRISK_H_ */
