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

#include "atrisk/neuralnet.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "atrisk/error.hpp"
#include "atrisk/rng.hpp"

namespace atrisk {
namespace {

void CheckTopology(std::span<const std::size_t> sizes) {
  if (sizes.size() < 2) {
    throw Error(ErrorCode::kInvalidTopology, "need at least two layers");
  }
  for (std::size_t s : sizes) {
    if (s == 0) throw Error(ErrorCode::kInvalidTopology, "zero-width layer");
  }
}

std::vector<Layer> ShapedLayers(std::span<const std::size_t> sizes) {
  CheckTopology(sizes);
  std::vector<Layer> layers;
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    Layer l;
    l.inputs = sizes[i - 1];
    l.outputs = sizes[i];
    l.weights.assign(l.inputs * l.outputs, 0.0);
    l.biases.assign(l.outputs, 0.0);
    layers.push_back(std::move(l));
  }
  return layers;
}

void CheckLength(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::string(what) + " has length " + std::to_string(got) +
                    ", expected " + std::to_string(want));
  }
}

// Forward pass into preallocated buffers; acts[0] must already hold x.
void ForwardInto(const std::vector<Layer>& layers, Activations& acts) {
  for (std::size_t l = 0; l < layers.size(); ++l) {
    const Layer& layer = layers[l];
    const std::vector<double>& in = acts[l];
    std::vector<double>& out = acts[l + 1];
    for (std::size_t j = 0; j < layer.outputs; ++j) {
      const double* row = &layer.weights[j * layer.inputs];
      double z = layer.biases[j];
      for (std::size_t i = 0; i < layer.inputs; ++i) z += row[i] * in[i];
      out[j] = Sigmoid(z);
    }
  }
}

Activations AllocateActivations(const std::vector<Layer>& layers) {
  Activations acts;
  acts.emplace_back(layers.front().inputs, 0.0);
  for (const auto& l : layers) acts.emplace_back(l.outputs, 0.0);
  return acts;
}

// Backward pass: fills deltas[l] (dE/dz for layer l) from the activations.
void BackwardInto(const std::vector<Layer>& layers, const Activations& acts,
                  std::span<const double> target,
                  std::vector<std::vector<double>>& deltas) {
  const std::size_t last = layers.size() - 1;
  const auto& out = acts.back();
  for (std::size_t j = 0; j < out.size(); ++j) {
    deltas[last][j] = (out[j] - target[j]) * out[j] * (1.0 - out[j]);
  }
  for (std::size_t l = last; l-- > 0;) {
    const Layer& next = layers[l + 1];
    const auto& a = acts[l + 1];
    for (std::size_t i = 0; i < next.inputs; ++i) {
      double back = 0.0;
      for (std::size_t j = 0; j < next.outputs; ++j) {
        back += next.weights[j * next.inputs + i] * deltas[l + 1][j];
      }
      deltas[l][i] = back * a[i] * (1.0 - a[i]);
    }
  }
}

std::vector<std::vector<double>> AllocateDeltas(
    const std::vector<Layer>& layers) {
  std::vector<std::vector<double>> deltas;
  for (const auto& l : layers) deltas.emplace_back(l.outputs, 0.0);
  return deltas;
}

}  // namespace

double Sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

Network Network::Init(std::span<const std::size_t> layer_sizes,
                      std::uint64_t seed) {
  auto layers = ShapedLayers(layer_sizes);
  Rng rng(seed);
  for (auto& l : layers) {
    for (double& w : l.weights) w = rng.Uniform(-0.5, 0.5);
    for (double& b : l.biases) b = rng.Uniform(-0.5, 0.5);
  }
  return Network(std::move(layers));
}

Network Network::Zeros(std::span<const std::size_t> layer_sizes) {
  return Network(ShapedLayers(layer_sizes));
}

Network Network::FromLayers(std::vector<Layer> layers) {
  if (layers.empty()) {
    throw Error(ErrorCode::kInvalidTopology, "network has no layers");
  }
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const Layer& l = layers[i];
    if (l.inputs == 0 || l.outputs == 0 ||
        l.weights.size() != l.inputs * l.outputs ||
        l.biases.size() != l.outputs ||
        (i > 0 && l.inputs != layers[i - 1].outputs)) {
      throw Error(ErrorCode::kInvalidTopology,
                  "inconsistent shape in layer " + std::to_string(i));
    }
    for (double w : l.weights) {
      if (!std::isfinite(w))
        throw Error(ErrorCode::kInvalidTopology, "non-finite weight");
    }
    for (double b : l.biases) {
      if (!std::isfinite(b))
        throw Error(ErrorCode::kInvalidTopology, "non-finite bias");
    }
  }
  return Network(std::move(layers));
}

std::vector<std::size_t> Network::layer_sizes() const {
  std::vector<std::size_t> sizes{layers_.front().inputs};
  for (const auto& l : layers_) sizes.push_back(l.outputs);
  return sizes;
}

std::size_t Network::parameter_count() const {
  std::size_t n = 0;
  for (const auto& l : layers_) n += l.weights.size() + l.biases.size();
  return n;
}

Activations Network::Forward(std::span<const double> x) const {
  CheckLength(x.size(), input_size(), "input");
  Activations acts = AllocateActivations(layers_);
  std::copy(x.begin(), x.end(), acts[0].begin());
  ForwardInto(layers_, acts);
  return acts;
}

std::vector<double> Network::Outputs(std::span<const double> x) const {
  return Forward(x).back();
}

double SquaredError(const Network& net, std::span<const double> x,
                    std::span<const double> target) {
  CheckLength(target.size(), net.output_size(), "target");
  const auto out = net.Outputs(x);
  double e = 0.0;
  for (std::size_t j = 0; j < out.size(); ++j) {
    const double d = target[j] - out[j];
    e += d * d;
  }
  return 0.5 * e;
}

Gradients ComputeGradients(const Network& net, std::span<const double> x,
                           std::span<const double> target) {
  CheckLength(target.size(), net.output_size(), "target");
  const Activations acts = net.Forward(x);
  auto deltas = AllocateDeltas(net.layers());
  BackwardInto(net.layers(), acts, target, deltas);

  Gradients g{ShapedLayers(net.layer_sizes())};
  for (std::size_t l = 0; l < g.layers.size(); ++l) {
    Layer& gl = g.layers[l];
    for (std::size_t j = 0; j < gl.outputs; ++j) {
      gl.biases[j] = deltas[l][j];
      for (std::size_t i = 0; i < gl.inputs; ++i) {
        gl.weights[j * gl.inputs + i] = deltas[l][j] * acts[l][i];
      }
    }
  }
  return g;
}

void TrainingConfig::Validate() const {
  if (epochs < 0) throw Error(ErrorCode::kInvalidArgument, "epochs < 0");
  if (!(lr0 > 0.0) || !std::isfinite(lr0)) {
    throw Error(ErrorCode::kInvalidArgument, "lr0 must be positive");
  }
  if (!(decay >= 0.0) || !std::isfinite(decay)) {
    throw Error(ErrorCode::kInvalidArgument, "decay must be >= 0");
  }
  if (!(momentum >= 0.0 && momentum < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "momentum must be in [0, 1)");
  }
  if (hidden && *hidden == 0) {
    throw Error(ErrorCode::kInvalidArgument, "hidden width must be >= 1");
  }
}

std::size_t DefaultHidden(std::size_t n_in, std::size_t n_out) {
  return std::max<std::size_t>(1, (n_in + n_out) / 2);
}

double LearningRate(const TrainingConfig& config, int epoch) {
  if (config.epochs <= 0) return config.lr0;
  return config.lr0 / (1.0 + config.decay * static_cast<double>(epoch - 1) /
                                 static_cast<double>(config.epochs));
}

Network TrainFrom(Network net, std::span<const Sample> samples,
                  const TrainingConfig& config) {
  config.Validate();
  if (samples.empty()) {
    throw Error(ErrorCode::kEmptyDataset, "no training samples");
  }
  for (const auto& s : samples) {
    CheckLength(s.input.size(), net.input_size(), "input");
    CheckLength(s.target.size(), net.output_size(), "target");
  }

  auto& layers = net.mutable_layers();
  Activations acts = AllocateActivations(layers);
  auto deltas = AllocateDeltas(layers);
  std::vector<Layer> velocity;
  if (config.momentum > 0.0) velocity = ShapedLayers(net.layer_sizes());

  std::vector<std::size_t> order(samples.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(config.seed);

  for (int epoch = 1; epoch <= config.epochs; ++epoch) {
    const double lr = LearningRate(config, epoch);
    rng.Shuffle(std::span<std::size_t>(order));
    for (std::size_t idx : order) {
      const Sample& s = samples[idx];
      std::copy(s.input.begin(), s.input.end(), acts[0].begin());
      ForwardInto(layers, acts);
      BackwardInto(layers, acts, s.target, deltas);
      for (std::size_t l = 0; l < layers.size(); ++l) {
        Layer& layer = layers[l];
        const auto& in = acts[l];
        const auto& d = deltas[l];
        if (velocity.empty()) {
          for (std::size_t j = 0; j < layer.outputs; ++j) {
            const double step = lr * d[j];
            double* row = &layer.weights[j * layer.inputs];
            for (std::size_t i = 0; i < layer.inputs; ++i) row[i] -= step * in[i];
            layer.biases[j] -= step;
          }
          continue;
        }
        Layer& v = velocity[l];
        for (std::size_t j = 0; j < layer.outputs; ++j) {
          const double step = lr * d[j];
          double* row = &layer.weights[j * layer.inputs];
          double* vrow = &v.weights[j * layer.inputs];
          for (std::size_t i = 0; i < layer.inputs; ++i) {
            vrow[i] = config.momentum * vrow[i] - step * in[i];
            row[i] += vrow[i];
          }
          v.biases[j] = config.momentum * v.biases[j] - step;
          layer.biases[j] += v.biases[j];
        }
      }
    }
  }
  return net;
}

std::vector<double> TargetFor(RiskLabel label) {
  return label == RiskLabel::kAtRisk ? std::vector<double>{1.0, 0.0}
                                     : std::vector<double>{0.0, 1.0};
}

Network Train(std::span<const LabeledFeatures> data,
              const TrainingConfig& config) {
  config.Validate();
  if (data.empty()) throw Error(ErrorCode::kEmptyDataset, "no training data");
  const std::size_t n_in = data.front().features.bits.size();
  std::vector<Sample> samples;
  samples.reserve(data.size());
  for (const auto& d : data) {
    CheckLength(d.features.bits.size(), n_in, "feature vector");
    samples.push_back({d.features.AsInput(), TargetFor(d.label)});
  }
  const std::size_t hidden = config.hidden.value_or(DefaultHidden(n_in, 2));
  const std::array<std::size_t, 3> sizes{n_in, hidden, 2};
  Network net = config.zero_init ? Network::Zeros(sizes)
                                 : Network::Init(sizes, MixSeed(config.seed, 0));
  TrainingConfig shuffled = config;
  shuffled.seed = MixSeed(config.seed, 1);
  return TrainFrom(std::move(net), samples, shuffled);
}

Prediction Predict(const Network& net, std::span<const double> x) {
  if (net.output_size() != 2) {
    throw Error(ErrorCode::kDimensionMismatch,
                "prediction needs a two-output network");
  }
  const auto out = net.Outputs(x);
  Prediction p{out[0] >= out[1] ? RiskLabel::kAtRisk : RiskLabel::kNotAtRisk,
               {out[0], out[1]}};
  return p;
}

Prediction Predict(const Network& net, const FeatureVector& x) {
  const auto input = x.AsInput();
  return Predict(net, input);
}

}  // namespace atrisk
