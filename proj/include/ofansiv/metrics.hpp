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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace ofansiv {

struct ConfusionMatrix {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;
  std::uint64_t tn = 0;

  std::uint64_t total() const { return tp + fp + fn + tn; }
  bool operator==(const ConfusionMatrix&) const = default;
};

enum class Averaging {
  kMacro,           // unweighted mean of the per-class scores
  kPositiveBinary,  // positive class only
};

std::string_view averaging_name(Averaging a);
std::optional<Averaging> parse_averaging(std::string_view name);

struct MetricReport {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double accuracy = 0.0;
  Averaging averaging = Averaging::kMacro;

  bool operator==(const MetricReport&) const = default;
};

// Every label other than `positive` counts as negative, but at most one such
// label may occur (UnknownLabel otherwise). Throws LengthMismatch and, on
// empty input, EmptyMatrix.
ConfusionMatrix confusion(std::span<const std::string> preds, std::span<const std::string> golds,
                          std::string_view positive);

// Ratios with a zero denominator are 0. In macro mode f1 is the mean of the
// two per-class F1 scores, not the harmonic mean of the averaged precision
// and recall. Throws EmptyMatrix when the matrix is all zeros.
MetricReport compute_metrics(const ConfusionMatrix& cm, Averaging averaging = Averaging::kMacro);

}  // namespace ofansiv
