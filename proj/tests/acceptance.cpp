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

// Acceptance gate. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <algorithm>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "atrisk/atrisk.h"
#include "atrisk/encoder.hpp"
#include "atrisk/evaluation.hpp"
#include "atrisk/neuralnet.hpp"
#include "atrisk/risk_oracle.hpp"
#include "atrisk/rng.hpp"
#include "atrisk/synth.hpp"
#include "grad_oracle.hpp"

namespace atrisk {
namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string Fmt(const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

double Majority(std::span<const SurveyResponse> data) {
  const auto risk = std::count_if(data.begin(), data.end(), [](const auto& r) {
    return r.label == RiskLabel::kAtRisk;
  });
  const double share = static_cast<double>(risk) / data.size();
  return std::max(share, 1.0 - share);
}

// Default cohort, n = 1000, 5-fold CV at the default training settings.
Outcome StrongSignal() {
  const auto data = GenerateCohort(DefaultSpec(), 1000, 1);
  TrainingConfig config;
  config.seed = 1;
  const auto start = std::chrono::steady_clock::now();
  // One worker, so the time is what a single core needs.
  const auto cv = CrossValidate(data, 5, config, CvOptions{1});
  const double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  const double acc = cv.report.accuracy;
  return {acc >= 0.75 && seconds <= 60.0,
          Fmt("accuracy=%.4f (need >= 0.75), %.1f s on one core (need <= 60), "
              "majority=%.4f",
              acc, seconds, Majority(data))};
}

// Same protocol with the feature signal switched off (n = 2000). The
// detail also reports a 50-epoch run and the full-data training accuracy;
// both are diagnostics and do not affect the verdict.
Outcome NoSignal() {
  auto spec = DefaultSpec();
  spec.beta = 0.0;
  const auto data = GenerateCohort(spec, 2000, 1);
  TrainingConfig config;
  config.seed = 1;
  const double acc = CrossValidate(data, 5, config).report.accuracy;
  const double majority = Majority(data);

  TrainingConfig brief = config;
  brief.epochs = 50;
  const double brief_acc = CrossValidate(data, 5, brief).report.accuracy;
  std::vector<LabeledFeatures> all;
  const auto schema = InferSchema(data);
  for (const auto& r : data) all.push_back({Encode(r, schema), *r.label});
  const Network net = Train(all, config);
  std::size_t fit = 0;
  for (const auto& d : all) fit += Predict(net, d.features).label == d.label;

  return {std::abs(acc - majority) <= 0.05,
          Fmt("beta=0 accuracy=%.4f, majority=%.4f (need within 0.05); "
              "diagnostics: 50-epoch accuracy=%.4f, 500-epoch training fit=%.4f",
              acc, majority, brief_acc, static_cast<double>(fit) / all.size())};
}

Outcome GradientOracle() {
  Rng rng(20260101);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const std::vector<std::size_t> sizes{1 + rng.Below(6), 1 + rng.Below(5),
                                         1 + rng.Below(2)};
    const auto net = Network::Init(sizes, rng.NextU64());
    std::vector<double> x(sizes[0]), t(sizes[2]);
    for (double& v : x) v = rng.Uniform(-1.0, 1.0);
    for (double& v : t) v = rng.Bernoulli(0.5) ? 1.0 : 0.0;
    worst = std::max(worst, testing::MaxRelativeError(
                                ComputeGradients(net, x, t),
                                testing::NumericGradients(net, x, t, 1e-5)));
  }
  return {worst < 1e-4, Fmt("20 topologies, max relative error %.3g (need < 1e-4)", worst)};
}

Outcome Xor() {
  std::vector<LabeledFeatures> data;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      data.push_back({FeatureVector{{static_cast<std::uint8_t>(a),
                                     static_cast<std::uint8_t>(b)}},
                      a != b ? RiskLabel::kAtRisk : RiskLabel::kNotAtRisk});
    }
  }
  int solved = 0;
  std::string per_seed;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    TrainingConfig config;
    config.epochs = 10000;
    config.lr0 = 0.5;
    config.decay = 0.0;
    config.hidden = 4;
    config.seed = seed;
    const Network net = Train(data, config);
    int correct = 0;
    for (const auto& d : data) correct += Predict(net, d.features).label == d.label;
    solved += correct == 4;
    per_seed += Fmt(" %d/4", correct);
  }
  return {solved >= 4, Fmt("%d of 5 seeds reach 4/4 (need >= 4):%s", solved,
                           per_seed.c_str())};
}

Outcome TruthTable() {
  struct Row {
    int md;
    double mm;
    int vd;
    double vm;
    RiskLabel want;
  };
  const Row rows[] = {
      {0, 0, 3, 20, RiskLabel::kNotAtRisk},
      {5, 30, 0, 0, RiskLabel::kNotAtRisk},
      {2, 50, 2, 30, RiskLabel::kNotAtRisk},
      {4, 30, 0, 0, RiskLabel::kAtRisk},
      {0, 0, 0, 0, RiskLabel::kAtRisk},
      {3, 50, 0, 0, RiskLabel::kNotAtRisk},
  };
  const double want_met[] = {480, 600, 880, 480, 0, 600};
  int ok = 0;
  for (std::size_t i = 0; i < std::size(rows); ++i) {
    const auto log = ActivityLog::Make(rows[i].md, rows[i].mm, rows[i].vd, rows[i].vm);
    ok += ClassifyActivity(log) == rows[i].want && WeeklyMet(log).value == want_met[i];
  }
  return {ok == static_cast<int>(std::size(rows)),
          Fmt("%d of %zu rows exact (incl. MET 880 and the MET 600 boundary)", ok,
              std::size(rows))};
}

Outcome HiddenSize() {
  const std::size_t h = DefaultHidden(36, 2);
  return {h == 19, Fmt("default_hidden(36, 2) = %zu (need 19)", h)};
}

Outcome EncodingCounts() {
  const auto schema = InferSchema(GenerateCohort(DefaultSpec(), 1000, 1));
  const std::size_t total = schema.total_nodes();
  const std::size_t physical = schema.entry(Variable::kPhysicalHealth).width;
  return {total == 36 && physical == 4,
          Fmt("input nodes = %zu (need 36), physical_health nodes = %zu (need 4)",
              total, physical)};
}

Outcome MetricIdentities() {
  Rng rng(7);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    ConfusionCounts c{1 + rng.Below(500), 1 + rng.Below(500), 1 + rng.Below(500),
                      1 + rng.Below(500)};
    const auto r = Rates(c);
    worst = std::max({worst, std::abs(r.tp_rate + r.fn_rate - 1.0),
                      std::abs(r.tn_rate + r.fp_rate - 1.0)});
  }
  std::size_t patterns = 0, mismatches = 0;
  for (std::size_t len = 1; len <= 8; ++len) {
    for (unsigned pm = 0; pm < (1u << len); ++pm) {
      for (unsigned tm = 0; tm < (1u << len); ++tm) {
        std::vector<RiskLabel> pred(len), truth(len);
        std::size_t tp = 0, tn = 0, fp = 0, fn = 0;
        for (std::size_t j = 0; j < len; ++j) {
          const bool p = pm >> j & 1u;  // 1 = AtRisk
          const bool t = tm >> j & 1u;
          pred[j] = p ? RiskLabel::kAtRisk : RiskLabel::kNotAtRisk;
          truth[j] = t ? RiskLabel::kAtRisk : RiskLabel::kNotAtRisk;
          tp += p && t;
          tn += !p && !t;
          fp += p && !t;
          fn += !p && t;
        }
        const auto r = Rates(Confusion(pred, truth));
        const bool same =
            r.counts == ConfusionCounts{tp, tn, fp, fn} &&
            r.accuracy == static_cast<double>(tp + tn) / len &&
            r.tp_rate == (tp + fn ? static_cast<double>(tp) / (tp + fn) : 0.0) &&
            r.fn_rate == (tp + fn ? static_cast<double>(fn) / (tp + fn) : 0.0) &&
            r.tn_rate == (tn + fp ? static_cast<double>(tn) / (tn + fp) : 0.0) &&
            r.fp_rate == (tn + fp ? static_cast<double>(fp) / (tn + fp) : 0.0) &&
            r.positive_class_empty == (tp + fn == 0) &&
            r.negative_class_empty == (tn + fp == 0);
        mismatches += !same;
        ++patterns;
      }
    }
  }
  return {worst <= 1e-12 && mismatches == 0,
          Fmt("identity error %.3g over 1000 quadruples (need <= 1e-12); "
              "%zu of %zu label patterns disagree with the tally",
              worst, mismatches, patterns)};
}

std::string Slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// Runs through the public C API, the same path the command-line tool uses.
Outcome Determinism() {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("atrisk_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const std::string a = (dir / "a.json").string();
  const std::string b = (dir / "b.json").string();

  atrisk_cohort_spec* spec = nullptr;
  atrisk_dataset* data = nullptr;
  atrisk_model* m1 = nullptr;
  atrisk_model* m2 = nullptr;
  atrisk_model* loaded = nullptr;
  atrisk_training_config config;
  atrisk_training_config_init(&config);
  config.seed = 8;
  bool ok = atrisk_cohort_spec_default(0, &spec) == ATRISK_OK &&
            atrisk_dataset_generate(spec, 146, 1, &data) == ATRISK_OK &&
            atrisk_model_train(data, &config, &m1) == ATRISK_OK &&
            atrisk_model_save(m1, a.c_str()) == ATRISK_OK &&
            atrisk_model_train(data, &config, &m2) == ATRISK_OK &&
            atrisk_model_save(m2, b.c_str()) == ATRISK_OK &&
            atrisk_model_load(a.c_str(), &loaded) == ATRISK_OK;
  const bool identical_files = ok && Slurp(a) == Slurp(b) && !Slurp(a).empty();

  int equal = 0;
  if (ok) {
    Rng rng(99);
    std::vector<double> x(atrisk_model_input_size(m1));
    for (int i = 0; i < 100; ++i) {
      for (double& v : x) v = rng.Uniform();
      atrisk_label la, lb;
      double sa[2], sb[2];
      ok = ok &&
           atrisk_model_predict_features(m1, x.data(), x.size(), &la, sa) == ATRISK_OK &&
           atrisk_model_predict_features(loaded, x.data(), x.size(), &lb, sb) ==
               ATRISK_OK;
      equal += ok && la == lb && sa[0] == sb[0] && sa[1] == sb[1];
    }
  }
  atrisk_model_free(loaded);
  atrisk_model_free(m2);
  atrisk_model_free(m1);
  atrisk_dataset_free(data);
  atrisk_cohort_spec_free(spec);
  std::filesystem::remove_all(dir);
  return {ok && identical_files && equal == 100,
          Fmt("model files byte-identical: %s; reloaded model bit-equal on %d of "
              "100 inputs",
              identical_files ? "yes" : "no", equal)};
}

Outcome Stratification() {
  std::vector<RiskLabel> labels(57, RiskLabel::kAtRisk);
  labels.insert(labels.end(), 89, RiskLabel::kNotAtRisk);
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    for (const auto& fold : StratifiedFolds(labels, 5, seed)) {
      const auto risk = std::count_if(fold.begin(), fold.end(), [&](std::size_t i) {
        return labels[i] == RiskLabel::kAtRisk;
      });
      const double safe = static_cast<double>(fold.size() - risk);
      worst = std::max({worst, std::abs(risk - 57.0 / 5.0), std::abs(safe - 89.0 / 5.0)});
    }
  }
  return {worst <= 1.0,
          Fmt("max per-fold class deviation %.2f from 57/5 and 89/5 over 20 seeds "
              "(need <= 1)",
              worst)};
}

}  // namespace
}  // namespace atrisk

int main() {
  using atrisk::Outcome;
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> check;
  };
  const Criterion criteria[] = {
      {1, "synthetic-cohort accuracy and no-signal sanity",
       [] {
         const Outcome strong = atrisk::StrongSignal();
         const Outcome flat = atrisk::NoSignal();
         return Outcome{strong.pass && flat.pass, strong.detail + "; " + flat.detail};
       }},
      {2, "gradient oracle", atrisk::GradientOracle},
      {3, "XOR learnability", atrisk::Xor},
      {4, "risk-oracle truth table", atrisk::TruthTable},
      {5, "hidden-size formula", atrisk::HiddenSize},
      {6, "encoding counts", atrisk::EncodingCounts},
      {7, "metric identities", atrisk::MetricIdentities},
      {8, "determinism", atrisk::Determinism},
      {9, "stratification", atrisk::Stratification},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s criterion %d (%s): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
