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

// Command-line front end. Talks to the library only through atrisk.h.

#include <charconv>
#include <chrono>
#include <cstdio>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "atrisk/atrisk.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

int Report(atrisk_status status) {
  std::fprintf(stderr, "error: %s: %s\n", atrisk_status_name(status),
               atrisk_last_error());
  return atrisk_status_is_input_error(status) ? kExitInput : kExitInternal;
}

std::string Shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void PrintWarning(void* /*user*/, const char* message) {
  std::fprintf(stderr, "warning: %s\n", message);
}

struct SpecDeleter {
  void operator()(atrisk_cohort_spec* s) const { atrisk_cohort_spec_free(s); }
};
struct DatasetDeleter {
  void operator()(atrisk_dataset* d) const { atrisk_dataset_free(d); }
};
struct ModelDeleter {
  void operator()(atrisk_model* m) const { atrisk_model_free(m); }
};
using SpecPtr = std::unique_ptr<atrisk_cohort_spec, SpecDeleter>;
using DatasetPtr = std::unique_ptr<atrisk_dataset, DatasetDeleter>;
using ModelPtr = std::unique_ptr<atrisk_model, ModelDeleter>;

struct SynthArgs {
  std::size_t n = 146;
  std::uint64_t seed = 1;
  std::string spec = "default";
  std::string out;
  std::optional<double> beta;
  bool full_support = false;
};

struct TrainFlags {
  int epochs = 500;
  double lr0 = 0.2;
  double decay = 1.0;
  double momentum = 0.0;
  std::size_t hidden = 0;
  std::uint64_t seed = 0;

  atrisk_training_config ToConfig() const {
    atrisk_training_config c;
    atrisk_training_config_init(&c);
    c.epochs = epochs;
    c.lr0 = lr0;
    c.decay = decay;
    c.momentum = momentum;
    c.hidden = hidden;
    c.seed = seed;
    return c;
  }
};

void AddTrainFlags(CLI::App* cmd, TrainFlags& f) {
  cmd->add_option("--epochs", f.epochs, "training epochs")->capture_default_str();
  cmd->add_option("--lr0", f.lr0, "initial learning rate")->capture_default_str();
  cmd->add_option("--decay", f.decay,
                  "lr_e = lr0 / (1 + decay * (e - 1) / epochs)")
      ->capture_default_str();
  cmd->add_option("--momentum", f.momentum, "momentum in [0, 1)")
      ->capture_default_str();
  cmd->add_option("--hidden", f.hidden,
                  "hidden width; 0 = (inputs + outputs) / 2")
      ->capture_default_str();
  cmd->add_option("--seed", f.seed, "seed for init, shuffling and folds")
      ->capture_default_str();
}

int RunSynth(const SynthArgs& a) {
  atrisk_cohort_spec* raw = nullptr;
  atrisk_status st = a.spec == "default"
                         ? atrisk_cohort_spec_default(a.full_support, &raw)
                         : atrisk_cohort_spec_load(a.spec.c_str(), &raw);
  if (st != ATRISK_OK) return Report(st);
  SpecPtr spec(raw);
  if (a.beta && (st = atrisk_cohort_spec_set_beta(spec.get(), *a.beta)) != ATRISK_OK) {
    return Report(st);
  }
  atrisk_dataset* ds_raw = nullptr;
  if ((st = atrisk_dataset_generate(spec.get(), a.n, a.seed, &ds_raw)) != ATRISK_OK) {
    return Report(st);
  }
  DatasetPtr ds(ds_raw);
  if (!a.out.empty()) {
    if ((st = atrisk_dataset_write_csv(ds.get(), a.out.c_str())) != ATRISK_OK) {
      return Report(st);
    }
    std::size_t risk = 0, safe = 0;
    atrisk_dataset_label_counts(ds.get(), &risk, &safe, nullptr);
    std::fprintf(stderr, "wrote %zu records to %s (%zu at_risk, %zu not_at_risk)\n",
                 a.n, a.out.c_str(), risk, safe);
    return kExitOk;
  }
  std::size_t len = 0;
  if ((st = atrisk_dataset_csv(ds.get(), nullptr, 0, &len)) != ATRISK_OK) {
    return Report(st);
  }
  std::string text(len + 1, '\0');
  atrisk_dataset_csv(ds.get(), text.data(), text.size(), &len);
  std::fwrite(text.data(), 1, len, stdout);
  return kExitOk;
}

int RunLabel(const std::string& in, const std::string& out) {
  std::size_t rows = 0;
  const atrisk_status st = atrisk_label_csv(in.c_str(), out.c_str(), &rows);
  if (st != ATRISK_OK) return Report(st);
  std::fprintf(stderr, "labeled %zu rows\n", rows);
  return kExitOk;
}

int LoadDataset(const std::string& path, DatasetPtr& out) {
  atrisk_dataset* raw = nullptr;
  const atrisk_status st = atrisk_dataset_read_csv(path.c_str(), &raw);
  if (st != ATRISK_OK) return Report(st);
  out.reset(raw);
  return kExitOk;
}

int RunTrain(const std::string& in, const std::string& model_path,
             const TrainFlags& flags) {
  DatasetPtr ds;
  if (int rc = LoadDataset(in, ds)) return rc;
  const atrisk_training_config config = flags.ToConfig();
  atrisk_model* raw = nullptr;
  atrisk_status st = atrisk_model_train(ds.get(), &config, &raw);
  if (st != ATRISK_OK) return Report(st);
  ModelPtr model(raw);
  if ((st = atrisk_model_save(model.get(), model_path.c_str())) != ATRISK_OK) {
    return Report(st);
  }
  std::printf("inputs=%zu hidden=%zu outputs=2\n",
              atrisk_model_input_size(model.get()),
              atrisk_model_hidden_size(model.get()));
  std::printf("training_accuracy=%s\n",
              Shortest(atrisk_model_training_accuracy(model.get())).c_str());
  return kExitOk;
}

int RunCv(const std::string& in, std::size_t k, unsigned threads,
          const TrainFlags& flags) {
  DatasetPtr ds;
  if (int rc = LoadDataset(in, ds)) return rc;
  const atrisk_training_config config = flags.ToConfig();
  atrisk_eval_report r{};
  const auto start = std::chrono::steady_clock::now();
  const atrisk_status st = atrisk_cross_validate(ds.get(), k, &config, threads,
                                                 &r, PrintWarning, nullptr);
  if (st != ATRISK_OK) return Report(st);
  const double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  const std::size_t n = atrisk_dataset_size(ds.get());
  std::printf("%zu-fold cross-validation over %zu records (%.2f s)\n", k, n,
              seconds);
  std::printf("  accuracy     %.4f\n", r.accuracy);
  std::printf("  TP rate      %.4f%s\n", r.tp_rate,
              r.positive_class_empty ? "  (no at_risk records)" : "");
  std::printf("  TN rate      %.4f%s\n", r.tn_rate,
              r.negative_class_empty ? "  (no not_at_risk records)" : "");
  std::printf("  FP rate      %.4f\n", r.fp_rate);
  std::printf("  FN rate      %.4f\n", r.fn_rate);
  std::printf("  confusion    tp=%zu tn=%zu fp=%zu fn=%zu\n", r.tp, r.tn, r.fp,
              r.fn);
  if (r.abstained) std::printf("  abstained    %zu\n", r.abstained);
  std::printf("\n[report]\n");
  std::printf("k=%zu\nn=%zu\n", k, n);
  std::printf("tp=%zu\ntn=%zu\nfp=%zu\nfn=%zu\n", r.tp, r.tn, r.fp, r.fn);
  std::printf("accuracy=%s\n", Shortest(r.accuracy).c_str());
  std::printf("tp_rate=%s\n", Shortest(r.tp_rate).c_str());
  std::printf("tn_rate=%s\n", Shortest(r.tn_rate).c_str());
  std::printf("fp_rate=%s\n", Shortest(r.fp_rate).c_str());
  std::printf("fn_rate=%s\n", Shortest(r.fn_rate).c_str());
  std::printf("positive_class_empty=%d\nnegative_class_empty=%d\n",
              r.positive_class_empty, r.negative_class_empty);
  std::printf("abstained=%zu\n", r.abstained);
  return kExitOk;
}

int RunPredict(const std::string& model_path, const std::string& in,
               const std::string& out) {
  atrisk_model* raw = nullptr;
  atrisk_status st = atrisk_model_load(model_path.c_str(), &raw);
  if (st != ATRISK_OK) return Report(st);
  ModelPtr model(raw);
  atrisk_predict_summary s{};
  st = atrisk_model_predict_csv(model.get(), in.c_str(), out.c_str(), &s,
                                PrintWarning, nullptr);
  if (st != ATRISK_OK) return Report(st);
  std::printf("rows=%zu\nwarnings=%zu\n", s.rows, s.warnings);
  if (s.labeled > 0) {
    std::printf("labeled=%zu\naccuracy=%s\n", s.labeled,
                Shortest(static_cast<double>(s.correct) /
                         static_cast<double>(s.labeled))
                    .c_str());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flag survey respondents at risk of physical inactivity"};
  app.set_version_flag("--version", std::string(atrisk_version()));
  app.require_subcommand(1);

  SynthArgs synth;
  auto* synth_cmd = app.add_subcommand("synth", "generate a synthetic cohort CSV");
  synth_cmd->add_option("--n", synth.n, "number of records")->capture_default_str();
  synth_cmd->add_option("--seed", synth.seed, "generator seed")->capture_default_str();
  synth_cmd->add_option("--spec", synth.spec, "cohort spec JSON file or 'default'")
      ->capture_default_str();
  synth_cmd->add_option("--out", synth.out, "output CSV (stdout when omitted)");
  synth_cmd->add_option("--beta", synth.beta, "override the signal strength");
  synth_cmd->add_flag("--full-support", synth.full_support,
                      "give every category nonzero probability (default spec)");

  std::string label_in, label_out;
  auto* label_cmd = app.add_subcommand("label", "label rows from their activity log");
  label_cmd->add_option("--in", label_in, "input CSV")->required();
  label_cmd->add_option("--out", label_out, "output CSV")->required();

  std::string train_in, train_model;
  TrainFlags train_flags;
  auto* train_cmd = app.add_subcommand("train", "train a model on a labeled CSV");
  train_cmd->add_option("--in", train_in, "labeled CSV")->required();
  train_cmd->add_option("--model", train_model, "model file to write")->required();
  AddTrainFlags(train_cmd, train_flags);

  std::string cv_in;
  std::size_t cv_k = 5;
  unsigned cv_threads = 0;
  TrainFlags cv_flags;
  auto* cv_cmd = app.add_subcommand("cv", "stratified k-fold cross-validation");
  cv_cmd->add_option("--in", cv_in, "labeled CSV")->required();
  cv_cmd->add_option("--k", cv_k, "number of folds")->capture_default_str();
  cv_cmd->add_option("--threads", cv_threads, "fold workers; 0 = all cores")
      ->capture_default_str();
  AddTrainFlags(cv_cmd, cv_flags);

  std::string predict_model, predict_in, predict_out;
  auto* predict_cmd = app.add_subcommand("predict", "score a CSV with a trained model");
  predict_cmd->add_option("--model", predict_model, "model file")->required();
  predict_cmd->add_option("--in", predict_in, "input CSV")->required();
  predict_cmd->add_option("--out", predict_out, "output CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  if (*synth_cmd) return RunSynth(synth);
  if (*label_cmd) return RunLabel(label_in, label_out);
  if (*train_cmd) return RunTrain(train_in, train_model, train_flags);
  if (*cv_cmd) return RunCv(cv_in, cv_k, cv_threads, cv_flags);
  if (*predict_cmd) return RunPredict(predict_model, predict_in, predict_out);
  return kExitInput;
}
