// Copyright 2026 The Ofansiv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ofansiv {

enum class ErrorKind {
  kParse,
  kDuplicateKey,
  kKindMismatch,
  kMissingLexicon,
  kEmptyCorpus,
  kSingleClassData,
  kDimensionMismatch,
  kSchema,
  kLabel,
  kHierarchy,
  kLengthMismatch,
  kUnknownLabel,
  kEmptyMatrix,
  kIo,
  kInvalidArgument,
};

inline std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse: return "ParseError";
    case ErrorKind::kDuplicateKey: return "DuplicateKey";
    case ErrorKind::kKindMismatch: return "KindMismatch";
    case ErrorKind::kMissingLexicon: return "MissingLexicon";
    case ErrorKind::kEmptyCorpus: return "EmptyCorpus";
    case ErrorKind::kSingleClassData: return "SingleClassData";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kSchema: return "SchemaError";
    case ErrorKind::kLabel: return "LabelError";
    case ErrorKind::kHierarchy: return "HierarchyError";
    case ErrorKind::kLengthMismatch: return "LengthMismatch";
    case ErrorKind::kUnknownLabel: return "UnknownLabel";
    case ErrorKind::kEmptyMatrix: return "EmptyMatrix";
    case ErrorKind::kIo: return "IoError";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

// Every expected failure in the library is reported through this type. The
// CLI maps it to exit code 2; anything else escaping is a bug.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Error carrying a source location (file path and 1-based line).
class LocatedError : public Error {
 public:
  LocatedError(ErrorKind kind, const std::string& path, std::size_t line,
               const std::string& reason)
      : Error(kind, path + ":" + std::to_string(line) + ": " + reason),
        path_(path),
        line_(line) {}

  const std::string& path() const { return path_; }
  std::size_t line() const { return line_; }

 private:
  std::string path_;
  std::size_t line_;
};

}  // namespace ofansiv
