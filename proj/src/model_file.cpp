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

#include "atrisk/model_file.hpp"

#include <fstream>
#include <sstream>

#include "atrisk/error.hpp"
#include "atrisk/version.hpp"
#include "json.hpp"

namespace atrisk {
namespace {

using nlohmann::json;

constexpr std::string_view kFormatName = "atrisk-model";

json SchemaToJson(const EncodingSchema& schema) {
  json out = json::array();
  for (const auto& e : schema.entries()) {
    json values = json::array();
    for (std::size_t v : e.values) values.push_back(ValueToken(e.variable, v));
    out.push_back({{"variable", VariableName(e.variable)},
                   {"values", values},
                   {"offset", e.offset},
                   {"width", e.width}});
  }
  return out;
}

EncodingSchema SchemaFromJson(const json& j) {
  std::vector<VariableEncoding> entries;
  for (const auto& item : j) {
    const auto name = item.at("variable").get<std::string>();
    const auto v = VariableFromName(name);
    if (!v) throw Error(ErrorCode::kParse, "unknown schema variable " + name);
    VariableEncoding e{*v, {}, item.at("offset").get<std::size_t>(),
                       item.at("width").get<std::size_t>()};
    for (const auto& token : item.at("values")) {
      const auto idx = ValueFromToken(*v, token.get<std::string>());
      if (!idx) {
        throw Error(ErrorCode::kParse, "unknown value " +
                                           token.get<std::string>() + " for " +
                                           name);
      }
      e.values.push_back(*idx);
    }
    entries.push_back(std::move(e));
  }
  try {
    return EncodingSchema(std::move(entries));
  } catch (const Error& err) {
    throw Error(ErrorCode::kParse, std::string("bad schema: ") + err.what());
  }
}

}  // namespace

std::string SaveModel(const ModelFile& model) {
  json layers = json::array();
  for (const auto& l : model.network.layers()) {
    layers.push_back({{"weights", l.weights}, {"biases", l.biases}});
  }
  const auto& c = model.config;
  json training = {{"epochs", c.epochs},
                   {"lr0", c.lr0},
                   {"decay", c.decay},
                   {"momentum", c.momentum},
                   {"seed", c.seed},
                   {"hidden", c.hidden ? json(*c.hidden) : json(nullptr)},
                   {"zero_init", c.zero_init}};
  json root = {
      {"format", kFormatName},
      {"format_version", kModelFormatVersion},
      {"schema", SchemaToJson(model.schema)},
      {"layer_sizes", model.network.layer_sizes()},
      {"layers", layers},
      {"training", training},
      {"metadata",
       {{"generator", std::string("atrisk ") + std::string(kVersion)},
        {"training_examples", model.training_examples},
        {"training_accuracy", model.training_accuracy}}},
  };
  return root.dump(1) + "\n";
}

ModelFile LoadModel(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("model is not JSON: ") + e.what());
  }
  try {
    if (!root.is_object() || root.value("format", "") != kFormatName) {
      throw Error(ErrorCode::kParse, "not an atrisk model file");
    }
    const int version = root.at("format_version").get<int>();
    if (version != kModelFormatVersion) {
      throw Error(ErrorCode::kUnsupportedFormat,
                  "unsupported model format_version " + std::to_string(version));
    }
    EncodingSchema schema = SchemaFromJson(root.at("schema"));
    const auto sizes = root.at("layer_sizes").get<std::vector<std::size_t>>();
    const auto& jl = root.at("layers");
    if (sizes.size() < 2 || jl.size() != sizes.size() - 1) {
      throw Error(ErrorCode::kParse, "layer_sizes and layers disagree");
    }
    std::vector<Layer> layers;
    for (std::size_t i = 0; i < jl.size(); ++i) {
      Layer l;
      l.inputs = sizes[i];
      l.outputs = sizes[i + 1];
      l.weights = jl[i].at("weights").get<std::vector<double>>();
      l.biases = jl[i].at("biases").get<std::vector<double>>();
      layers.push_back(std::move(l));
    }
    Network net = [&] {
      try {
        return Network::FromLayers(std::move(layers));
      } catch (const Error& e) {
        throw Error(ErrorCode::kParse, std::string("bad network: ") + e.what());
      }
    }();
    if (net.input_size() != schema.total_nodes() || net.output_size() != 2) {
      throw Error(ErrorCode::kParse,
                  "network shape does not match the encoding schema");
    }
    const auto& jt = root.at("training");
    TrainingConfig config;
    config.epochs = jt.at("epochs").get<int>();
    config.lr0 = jt.at("lr0").get<double>();
    config.decay = jt.at("decay").get<double>();
    config.momentum = jt.at("momentum").get<double>();
    config.seed = jt.at("seed").get<std::uint64_t>();
    if (!jt.at("hidden").is_null()) config.hidden = jt.at("hidden").get<std::size_t>();
    config.zero_init = jt.value("zero_init", false);
    const auto& meta = root.at("metadata");
    return ModelFile{std::move(schema), std::move(net), config,
                     meta.at("training_examples").get<std::size_t>(),
                     meta.at("training_accuracy").get<double>()};
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("malformed model file: ") + e.what());
  }
}

void SaveModelFile(const std::string& path, const ModelFile& model) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  out << SaveModel(model);
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path);
}

ModelFile LoadModelFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return LoadModel(buf.str());
}

}  // namespace atrisk
