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

#ifndef ATRISK_NEURALNET_HPP_
#define ATRISK_NEURALNET_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "atrisk/encoder.hpp"
#include "atrisk/survey.hpp"

namespace atrisk {

// Fully connected layer. `weights` is row-major outputs x inputs.
struct Layer {
  std::size_t inputs = 0;
  std::size_t outputs = 0;
  std::vector<double> weights;
  std::vector<double> biases;

  double weight(std::size_t out, std::size_t in) const {
    return weights[out * inputs + in];
  }
  friend bool operator==(const Layer&, const Layer&) = default;
};

// Activations of every layer for one input; front() is the input itself and
// back() the network outputs.
using Activations = std::vector<std::vector<double>>;

double Sigmoid(double z);

// Sigmoid multilayer perceptron.
class Network {
 public:
  // Weights and biases i.i.d. uniform on [-0.5, 0.5]. Throws
  // kInvalidTopology for fewer than two layers or a zero-width layer.
  static Network Init(std::span<const std::size_t> layer_sizes,
                      std::uint64_t seed);

  // All parameters zero; every non-input activation is then 0.5.
  static Network Zeros(std::span<const std::size_t> layer_sizes);

  // Adopts explicit parameters (e.g. from a model file). Throws
  // kInvalidTopology on inconsistent shapes or non-finite values.
  static Network FromLayers(std::vector<Layer> layers);

  std::vector<std::size_t> layer_sizes() const;
  std::size_t input_size() const { return layers_.front().inputs; }
  std::size_t output_size() const { return layers_.back().outputs; }
  std::size_t parameter_count() const;

  const std::vector<Layer>& layers() const { return layers_; }
  std::vector<Layer>& mutable_layers() { return layers_; }

  // Throws kDimensionMismatch when x has the wrong length.
  Activations Forward(std::span<const double> x) const;
  std::vector<double> Outputs(std::span<const double> x) const;

  friend bool operator==(const Network&, const Network&) = default;

 private:
  explicit Network(std::vector<Layer> layers) : layers_(std::move(layers)) {}
  std::vector<Layer> layers_;
};

// Same shapes as the network's layers.
struct Gradients {
  std::vector<Layer> layers;
};

// Squared error 0.5 * sum_j (t_j - o_j)^2 for one example.
double SquaredError(const Network& net, std::span<const double> x,
                    std::span<const double> target);

// Analytic gradient of SquaredError by backpropagation.
Gradients ComputeGradients(const Network& net, std::span<const double> x,
                           std::span<const double> target);

struct TrainingConfig {
  int epochs = 500;
  double lr0 = 0.2;
  double decay = 1.0;
  double momentum = 0.0;
  std::uint64_t seed = 0;
  // Hidden width; unset means DefaultHidden(n_in, n_out).
  std::optional<std::size_t> hidden;
  // Start Train() from an all-zero network instead of the uniform init.
  bool zero_init = false;

  // Throws kInvalidArgument on a nonpositive lr0, negative epochs or decay,
  // momentum outside [0, 1), or a zero hidden width.
  void Validate() const;
};

// floor((n_in + n_out) / 2), at least 1.
std::size_t DefaultHidden(std::size_t n_in, std::size_t n_out);

// lr0 / (1 + decay * (epoch - 1) / epochs) for the 1-based epoch.
double LearningRate(const TrainingConfig& config, int epoch);

struct Sample {
  std::vector<double> input;
  std::vector<double> target;
};

// Online SGD over `samples` starting from `initial`. Each epoch visits the
// samples in an order shuffled by a generator seeded from config.seed.
Network TrainFrom(Network initial, std::span<const Sample> samples,
                  const TrainingConfig& config);

// Output targets: AtRisk -> (1, 0), NotAtRisk -> (0, 1).
std::vector<double> TargetFor(RiskLabel label);

struct LabeledFeatures {
  FeatureVector features;
  RiskLabel label;
};

// Builds [n_in, hidden, 2], initializes from config.seed and trains.
// Throws kEmptyDataset / kDimensionMismatch.
Network Train(std::span<const LabeledFeatures> data,
              const TrainingConfig& config);

struct Prediction {
  RiskLabel label;
  std::array<double, 2> scores;  // {risk, no risk}
};

// Two-output networks only. Ties go to AtRisk.
Prediction Predict(const Network& net, std::span<const double> x);
Prediction Predict(const Network& net, const FeatureVector& x);

}  // namespace atrisk

#endif  // ATRISK_NEURALNET_HPP_
