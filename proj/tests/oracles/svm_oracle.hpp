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

// Reference SVM solver: projected subgradient descent on the primal with a
// decaying step. Slow and simple on purpose; shares no code with the
// library trainer.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace oracle {

struct DenseProblem {
  std::vector<std::vector<double>> X;
  std::vector<int> y;  // +1 / -1
  double C = 1.0;
};

inline double svm_objective(const DenseProblem& p, const std::vector<double>& w, double b) {
  double reg = 0.0;
  for (double v : w) reg += v * v;
  double loss = 0.0;
  for (std::size_t i = 0; i < p.X.size(); ++i) {
    double m = b;
    for (std::size_t j = 0; j < w.size(); ++j) m += w[j] * p.X[i][j];
    loss += std::max(0.0, 1.0 - p.y[i] * m);
  }
  return 0.5 * reg + p.C * loss;
}

struct SubgradientResult {
  std::vector<double> w;
  double b = 0.0;
  double objective = 0.0;
};

// Step eta0 / sqrt(t + 1). w is projected onto the ball of radius
// sqrt(2 C N), which holds the optimum because J(0, b) <= C N for some b.
// Returns the best iterate seen.
inline SubgradientResult subgradient_svm(const DenseProblem& p, long iterations = 1000000,
                                         double eta0 = 1.0) {
  const std::size_t n = p.X.size();
  const std::size_t d = n ? p.X[0].size() : 0;
  const double radius = std::sqrt(2.0 * p.C * static_cast<double>(n));
  std::vector<double> w(d, 0.0), gw(d);
  double b = 0.0;
  SubgradientResult best{w, b, svm_objective(p, w, b)};

  for (long t = 0; t < iterations; ++t) {
    gw = w;
    double gb = 0.0;
    double reg = 0.0, loss = 0.0;
    for (double v : w) reg += v * v;
    for (std::size_t i = 0; i < n; ++i) {
      double m = b;
      for (std::size_t j = 0; j < d; ++j) m += w[j] * p.X[i][j];
      double slack = 1.0 - p.y[i] * m;
      if (slack > 0.0) {
        loss += slack;
        for (std::size_t j = 0; j < d; ++j) gw[j] -= p.C * p.y[i] * p.X[i][j];
        gb -= p.C * p.y[i];
      }
    }
    const double obj = 0.5 * reg + p.C * loss;
    if (obj < best.objective) best = {w, b, obj};

    const double eta = eta0 / std::sqrt(static_cast<double>(t) + 1.0);
    double norm = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      w[j] -= eta * gw[j];
      norm += w[j] * w[j];
    }
    b -= eta * gb;
    norm = std::sqrt(norm);
    if (norm > radius) {
      for (double& v : w) v *= radius / norm;
    }
  }
  const double last = svm_objective(p, w, b);
  if (last < best.objective) best = {w, b, last};
  return best;
}

}  // namespace oracle
