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

#include "atrisk/synth.hpp"

#include <algorithm>
#include <cmath>
#include "json.hpp"

#include "atrisk/error.hpp"
#include "atrisk/risk_oracle.hpp"
#include "atrisk/rng.hpp"

namespace atrisk {
namespace {

using nlohmann::json;

constexpr double kStudySize = 146.0;

// Study counts in canonical value order (lowest enumerator first).
const std::array<std::vector<double>, kAllVariables.size()>& StudyCounts() {
  static const std::array<std::vector<double>, kAllVariables.size()> counts =
      {{
          {90, 56},              // gender: female, male
          {26, 120},             // hispanic: no, yes
          {43, 103},             // major: not sport related, sport related
          {0, 16, 50, 59, 21},   // physical health: very poor .. excellent
          {0, 7, 30, 77, 32},    // psychological health
          {5, 23, 67, 43, 8},    // diet
          {1, 6, 29, 61, 49},    // self-efficacy: really low .. really high
          {1, 47, 58, 35, 5},    // importance
          {5, 17, 36, 48, 40},   // expectations
          {5, 22, 50, 44, 25},   // support
      }};
  return counts;
}

double Lerp(double lo, double hi, double t) { return lo + (hi - lo) * t; }

void CheckVolume(const ActivityVolume& v, const char* name) {
  auto bad = [&](const char* what) {
    throw Error(ErrorCode::kInvalidSpec, std::string(name) + ": " + what);
  };
  for (double p : {v.day_prob_low, v.day_prob_high}) {
    if (!(p >= 0.0 && p <= 1.0)) bad("day probabilities must be in [0, 1]");
  }
  for (double m : {v.min_mean_low, v.min_mean_high, v.min_floor,
                   v.min_ceiling}) {
    if (!(m >= 0.0) || !std::isfinite(m)) bad("minutes must be >= 0");
  }
  if (!(v.min_sd >= 0.0) || !std::isfinite(v.min_sd)) bad("min_sd must be >= 0");
  if (v.min_floor > v.min_ceiling) bad("min_floor exceeds min_ceiling");
}

double SampleMinutes(Rng& rng, const ActivityVolume& v, double p) {
  const double raw = rng.Normal(Lerp(v.min_mean_low, v.min_mean_high, p),
                                v.min_sd);
  return std::clamp(std::round(raw), v.min_floor, v.min_ceiling);
}

json VolumeToJson(const ActivityVolume& v) {
  return {{"day_prob_low", v.day_prob_low},   {"day_prob_high", v.day_prob_high},
          {"min_mean_low", v.min_mean_low},   {"min_mean_high", v.min_mean_high},
          {"min_sd", v.min_sd},               {"min_floor", v.min_floor},
          {"min_ceiling", v.min_ceiling}};
}

void VolumeFromJson(const json& j, ActivityVolume& v, const std::string& name) {
  if (!j.is_object()) throw Error(ErrorCode::kInvalidSpec, name + " must be an object");
  for (const auto& [key, value] : j.items()) {
    double* field = nullptr;
    if (key == "day_prob_low") field = &v.day_prob_low;
    else if (key == "day_prob_high") field = &v.day_prob_high;
    else if (key == "min_mean_low") field = &v.min_mean_low;
    else if (key == "min_mean_high") field = &v.min_mean_high;
    else if (key == "min_sd") field = &v.min_sd;
    else if (key == "min_floor") field = &v.min_floor;
    else if (key == "min_ceiling") field = &v.min_ceiling;
    else throw Error(ErrorCode::kInvalidSpec, "unknown key " + name + "." + key);
    if (!value.is_number()) {
      throw Error(ErrorCode::kInvalidSpec, name + "." + key + " must be a number");
    }
    *field = value.get<double>();
  }
}

double Number(const json& j, const std::string& key) {
  if (!j.is_number()) {
    throw Error(ErrorCode::kInvalidSpec, key + " must be a number");
  }
  return j.get<double>();
}

}  // namespace

void CohortSpec::Validate() const {
  for (Variable v : kAllVariables) {
    const auto& m = marginals[static_cast<std::size_t>(v)];
    const std::string name(VariableName(v));
    if (m.size() != Cardinality(v)) {
      throw Error(ErrorCode::kInvalidSpec,
                  "marginal for " + name + " needs " +
                      std::to_string(Cardinality(v)) + " cells");
    }
    double sum = 0.0;
    for (double p : m) {
      if (!(p >= 0.0) || !std::isfinite(p)) {
        throw Error(ErrorCode::kInvalidSpec, "negative cell in " + name);
      }
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
      throw Error(ErrorCode::kInvalidSpec,
                  "marginal for " + name + " sums to " + std::to_string(sum));
    }
    if (!std::isfinite(weights[static_cast<std::size_t>(v)])) {
      throw Error(ErrorCode::kInvalidSpec, "non-finite weight for " + name);
    }
  }
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw Error(ErrorCode::kInvalidSpec, "beta must be >= 0");
  }
  if (!std::isfinite(bias)) throw Error(ErrorCode::kInvalidSpec, "bad bias");
  if (!(noise_sd >= 0.0) || !std::isfinite(noise_sd)) {
    throw Error(ErrorCode::kInvalidSpec, "noise_sd must be >= 0");
  }
  CheckVolume(moderate, "moderate");
  CheckVolume(vigorous, "vigorous");
}

CohortSpec DefaultSpec(bool full_support) {
  CohortSpec spec;
  const auto& counts = StudyCounts();
  for (std::size_t v = 0; v < counts.size(); ++v) {
    std::vector<double> cells = counts[v];
    double total = kStudySize;
    if (full_support) {
      for (double& c : cells) {
        if (c == 0.0) {
          c = 1.0;
          total += 1.0;
        }
      }
    }
    for (double& c : cells) c /= total;
    spec.marginals[v] = std::move(cells);
  }
  // gender(male), hispanic(yes), major(sport), physical, psych, diet,
  // self-efficacy, importance, expectations, support.
  spec.weights = {0.2, -0.1, 0.8, 0.4, 0.2, 0.2, 1.0, 0.6, 0.3, 0.8};
  spec.beta = 1.5;
  spec.bias = 0.3;
  spec.noise_sd = 0.5;
  spec.moderate = {0.05, 0.80, 15.0, 45.0, 10.0, 5.0, 180.0};
  spec.vigorous = {0.00, 0.60, 10.0, 40.0, 10.0, 5.0, 180.0};
  return spec;
}

CohortSpec SpecFromJson(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kInvalidSpec, std::string("bad JSON: ") + e.what());
  }
  if (!root.is_object()) {
    throw Error(ErrorCode::kInvalidSpec, "spec must be a JSON object");
  }
  bool full_support = false;
  if (root.contains("full_support")) {
    if (!root["full_support"].is_boolean()) {
      throw Error(ErrorCode::kInvalidSpec, "full_support must be a boolean");
    }
    full_support = root["full_support"].get<bool>();
  }
  CohortSpec spec = DefaultSpec(full_support);
  for (const auto& [key, value] : root.items()) {
    if (key == "full_support") continue;
    if (key == "beta") spec.beta = Number(value, key);
    else if (key == "bias") spec.bias = Number(value, key);
    else if (key == "noise_sd") spec.noise_sd = Number(value, key);
    else if (key == "moderate") VolumeFromJson(value, spec.moderate, key);
    else if (key == "vigorous") VolumeFromJson(value, spec.vigorous, key);
    else if (key == "weights") {
      if (!value.is_object()) {
        throw Error(ErrorCode::kInvalidSpec, "weights must be an object");
      }
      for (const auto& [var, w] : value.items()) {
        const auto v = VariableFromName(var);
        if (!v) throw Error(ErrorCode::kInvalidSpec, "unknown variable " + var);
        spec.weights[static_cast<std::size_t>(*v)] = Number(w, "weights." + var);
      }
    } else if (key == "marginals") {
      if (!value.is_object()) {
        throw Error(ErrorCode::kInvalidSpec, "marginals must be an object");
      }
      // A listed variable replaces its whole distribution; unlisted
      // values get probability 0.
      for (const auto& [var, cells] : value.items()) {
        const auto v = VariableFromName(var);
        if (!v) throw Error(ErrorCode::kInvalidSpec, "unknown variable " + var);
        if (!cells.is_object()) {
          throw Error(ErrorCode::kInvalidSpec, "marginals." + var + " must be an object");
        }
        std::vector<double> probs(Cardinality(*v), 0.0);
        for (const auto& [token, p] : cells.items()) {
          const auto idx = ValueFromToken(*v, token);
          if (!idx) {
            throw Error(ErrorCode::kInvalidSpec,
                        "unknown value " + token + " for " + var);
          }
          probs[*idx] = Number(p, "marginals." + var + "." + token);
        }
        spec.marginals[static_cast<std::size_t>(*v)] = std::move(probs);
      }
    } else {
      throw Error(ErrorCode::kInvalidSpec, "unknown key " + key);
    }
  }
  spec.Validate();
  return spec;
}

std::string SpecToJson(const CohortSpec& spec) {
  json marginals = json::object();
  json weights = json::object();
  for (Variable v : kAllVariables) {
    const auto slot = static_cast<std::size_t>(v);
    json cells = json::object();
    for (std::size_t i = 0; i < spec.marginals[slot].size(); ++i) {
      cells[std::string(ValueToken(v, i))] = spec.marginals[slot][i];
    }
    marginals[std::string(VariableName(v))] = std::move(cells);
    weights[std::string(VariableName(v))] = spec.weights[slot];
  }
  json root = {{"marginals", marginals},
               {"beta", spec.beta},
               {"weights", weights},
               {"bias", spec.bias},
               {"noise_sd", spec.noise_sd},
               {"moderate", VolumeToJson(spec.moderate)},
               {"vigorous", VolumeToJson(spec.vigorous)}};
  return root.dump(2) + "\n";
}

std::vector<SurveyResponse> GenerateCohort(const CohortSpec& spec,
                                           std::size_t n, std::uint64_t seed) {
  spec.Validate();
  std::array<double, kAllVariables.size()> mean{};
  std::array<double, kAllVariables.size()> sd{};
  for (std::size_t v = 0; v < kAllVariables.size(); ++v) {
    const auto& m = spec.marginals[v];
    for (std::size_t i = 0; i < m.size(); ++i) mean[v] += m[i] * i;
    double var = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      var += m[i] * (i - mean[v]) * (i - mean[v]);
    }
    sd[v] = std::sqrt(var);
  }

  std::vector<SurveyResponse> out;
  out.reserve(n);
  for (std::size_t record = 0; record < n; ++record) {
    Rng rng(MixSeed(seed, record));
    SurveyResponse r;
    double signal = 0.0;
    for (Variable v : kAllVariables) {
      const auto slot = static_cast<std::size_t>(v);
      const std::size_t idx = rng.Categorical(spec.marginals[slot]);
      SetValueIndex(r, v, idx);
      if (sd[slot] > 0.0) {
        signal += spec.weights[slot] * (idx - mean[slot]) / sd[slot];
      }
    }
    const double noise = rng.Normal(0.0, spec.noise_sd);
    const double p = 1.0 / (1.0 + std::exp(-(spec.beta * signal + spec.bias + noise)));

    const int mod_days = rng.Binomial(
        7, Lerp(spec.moderate.day_prob_low, spec.moderate.day_prob_high, p));
    const double mod_min = mod_days > 0 ? SampleMinutes(rng, spec.moderate, p) : 0.0;
    const int vig_days = rng.Binomial(
        7, Lerp(spec.vigorous.day_prob_low, spec.vigorous.day_prob_high, p));
    const double vig_min = vig_days > 0 ? SampleMinutes(rng, spec.vigorous, p) : 0.0;
    r.activity = ActivityLog::Make(mod_days, mod_min, vig_days, vig_min);
    r.label = ClassifyActivity(r.activity);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace atrisk
