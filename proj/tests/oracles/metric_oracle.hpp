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

// Per-example scorer. Walks the label lists once per class and tallies with
// plain loops; no confusion matrix involved.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace oracle {

struct Scores {
  double precision = 0, recall = 0, f1 = 0, accuracy = 0;
};

inline double ratio(double a, double b) { return b == 0 ? 0.0 : a / b; }

inline Scores class_scores(const std::vector<std::string>& pred,
                           const std::vector<std::string>& gold, const std::string& cls) {
  double hit = 0, predicted = 0, actual = 0, correct = 0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    if (pred[i] == cls) predicted += 1;
    if (gold[i] == cls) actual += 1;
    if (pred[i] == cls && gold[i] == cls) hit += 1;
    if (pred[i] == gold[i]) correct += 1;
  }
  Scores s;
  s.precision = ratio(hit, predicted);
  s.recall = ratio(hit, actual);
  s.f1 = ratio(2 * s.precision * s.recall, s.precision + s.recall);
  s.accuracy = correct / static_cast<double>(pred.size());
  return s;
}

inline Scores binary_scores(const std::vector<std::string>& pred,
                            const std::vector<std::string>& gold, const std::string& pos) {
  return class_scores(pred, gold, pos);
}

inline Scores macro_scores(const std::vector<std::string>& pred,
                           const std::vector<std::string>& gold, const std::string& pos,
                           const std::string& neg) {
  Scores a = class_scores(pred, gold, pos);
  Scores b = class_scores(pred, gold, neg);
  return {(a.precision + b.precision) / 2, (a.recall + b.recall) / 2, (a.f1 + b.f1) / 2,
          a.accuracy};
}

}  // namespace oracle
