/*
 * Copyright 2026 The lsacluster Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lsacluster {

enum class ErrorKind {
  EmptyDocument,
  NonFiniteInput,
  DimensionMismatch,
  EmptyInput,
  DegenerateMatrix,
  IndexOutOfRange,
  EmptyCorpus,
  ZeroVector,
  DegenerateVariance,
  OutOfRange,
  TooFewDocuments,
  ZeroVocabulary,
  EmptyCluster,
  MissingRoot,
  UnreadableFile,
  ConfigError,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyDocument: return "EmptyDocument";
    case ErrorKind::NonFiniteInput: return "NonFiniteInput";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::DegenerateMatrix: return "DegenerateMatrix";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::EmptyCorpus: return "EmptyCorpus";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::DegenerateVariance: return "DegenerateVariance";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::TooFewDocuments: return "TooFewDocuments";
    case ErrorKind::ZeroVocabulary: return "ZeroVocabulary";
    case ErrorKind::EmptyCluster: return "EmptyCluster";
    case ErrorKind::MissingRoot: return "MissingRoot";
    case ErrorKind::UnreadableFile: return "UnreadableFile";
    case ErrorKind::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

/// Every recoverable failure in the library is reported as an Error carrying
/// its kind, so callers can branch on the kind rather than on message text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lsacluster
