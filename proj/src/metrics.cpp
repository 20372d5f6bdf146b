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

#include "ofansiv/metrics.hpp"

#include "ofansiv/error.hpp"

namespace ofansiv {
namespace {

double ratio(std::uint64_t num, std::uint64_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

double f_score(double p, double r) { return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r); }

}  // namespace

std::string_view averaging_name(Averaging a) {
  return a == Averaging::kMacro ? "macro" : "binary";
}

std::optional<Averaging> parse_averaging(std::string_view name) {
  if (name == "macro") return Averaging::kMacro;
  if (name == "binary" || name == "positive") return Averaging::kPositiveBinary;
  return std::nullopt;
}

ConfusionMatrix confusion(std::span<const std::string> preds, std::span<const std::string> golds,
                          std::string_view positive) {
  if (preds.size() != golds.size()) {
    throw Error(ErrorKind::kLengthMismatch, std::to_string(preds.size()) + " predictions vs " +
                                                std::to_string(golds.size()) + " gold labels");
  }
  if (preds.empty()) throw Error(ErrorKind::kEmptyMatrix, "nothing to score");

  std::optional<std::string_view> negative;
  auto is_positive = [&](std::string_view label) {
    if (label == positive) return true;
    if (!negative) {
      negative = label;
    } else if (*negative != label) {
      throw Error(ErrorKind::kUnknownLabel, "'" + std::string(label) + "' is neither '" +
                                                std::string(positive) + "' nor '" +
                                                std::string(*negative) + "'");
    }
    return false;
  };

  ConfusionMatrix cm;
  for (std::size_t i = 0; i < preds.size(); ++i) {
    bool p = is_positive(preds[i]);
    bool g = is_positive(golds[i]);
    if (p && g) {
      ++cm.tp;
    } else if (p) {
      ++cm.fp;
    } else if (g) {
      ++cm.fn;
    } else {
      ++cm.tn;
    }
  }
  return cm;
}

MetricReport compute_metrics(const ConfusionMatrix& cm, Averaging averaging) {
  if (cm.total() == 0) throw Error(ErrorKind::kEmptyMatrix, "confusion matrix is empty");
  MetricReport r;
  r.averaging = averaging;
  r.accuracy = ratio(cm.tp + cm.tn, cm.total());

  const double p_pos = ratio(cm.tp, cm.tp + cm.fp);
  const double r_pos = ratio(cm.tp, cm.tp + cm.fn);
  if (averaging == Averaging::kPositiveBinary) {
    r.precision = p_pos;
    r.recall = r_pos;
    r.f1 = f_score(p_pos, r_pos);
    return r;
  }
  const double p_neg = ratio(cm.tn, cm.tn + cm.fn);
  const double r_neg = ratio(cm.tn, cm.tn + cm.fp);
  r.precision = 0.5 * (p_pos + p_neg);
  r.recall = 0.5 * (r_pos + r_neg);
  r.f1 = 0.5 * (f_score(p_pos, r_pos) + f_score(p_neg, r_neg));
  return r;
}

}  // namespace ofansiv
