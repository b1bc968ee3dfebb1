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

#ifndef ATRISK_MODEL_FILE_HPP_
#define ATRISK_MODEL_FILE_HPP_

#include <cstddef>
#include <string>
#include <string_view>

#include "atrisk/encoder.hpp"
#include "atrisk/neuralnet.hpp"

namespace atrisk {

inline constexpr int kModelFormatVersion = 1;

// A trained classifier together with the schema its inputs were encoded
// with. Serialized as JSON; every number is written in shortest round-trip
// form, so a reload reproduces the parameters bit for bit.
struct ModelFile {
  EncodingSchema schema;
  Network network;
  TrainingConfig config;  // as resolved at training time (hidden filled in)
  std::size_t training_examples = 0;
  double training_accuracy = 0.0;
};

std::string SaveModel(const ModelFile& model);

// Throws kUnsupportedFormat for an unknown format_version and kParse for
// malformed content (including a schema/network width mismatch).
ModelFile LoadModel(std::string_view text);

void SaveModelFile(const std::string& path, const ModelFile& model);
ModelFile LoadModelFile(const std::string& path);

}  // namespace atrisk

#endif  // ATRISK_MODEL_FILE_HPP_
