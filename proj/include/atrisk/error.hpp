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

#ifndef ATRISK_ERROR_HPP_
#define ATRISK_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace atrisk {

// Failure categories shared by every module. The C API maps these one-to-one
// onto atrisk_status values.
enum class ErrorCode {
  kEmptyScale = 1,
  kInvalidAnswer,
  kInvalidActivity,
  kEmptyDataset,
  kUnknownCategory,
  kInvalidTopology,
  kDimensionMismatch,
  kTooFewExamples,
  kMissingLabel,
  kEmptyEvaluation,
  kInvalidSpec,
  kParse,
  kMissingColumn,
  kIo,
  kUnsupportedFormat,
  kInvalidArgument,
  kInternal,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by Encode when a response carries a value the schema never saw.
class UnknownCategoryError : public Error {
 public:
  UnknownCategoryError(std::string variable, std::string value)
      : Error(ErrorCode::kUnknownCategory,
              "unknown category " + value + " for variable " + variable),
        variable_(std::move(variable)),
        value_(std::move(value)) {}

  const std::string& variable() const noexcept { return variable_; }
  const std::string& value() const noexcept { return value_; }

 private:
  std::string variable_;
  std::string value_;
};

}  // namespace atrisk

#endif  // ATRISK_ERROR_HPP_
