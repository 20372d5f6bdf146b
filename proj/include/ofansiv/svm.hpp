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

// Binary linear SVM with hinge loss and an unregularized intercept:
//
//   J(w, b) = 1/2 |w|^2 + C * sum_i max(0, 1 - y_i (w.x_i + b))
//
// Training runs dual coordinate descent at a fixed intercept and searches the
// intercept by bracketing the sign of sum_i alpha_i y_i, which is the
// (negated) derivative of the partially minimized objective in b. Two dual
// solutions on opposite sides of the bracket mix into a point that satisfies
// the equality constraint sum_i alpha_i y_i = 0, so every outer step has an
// exact duality-gap certificate. Training stops when that gap falls below
// tol * J.

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ofansiv/vectorize.hpp"

namespace ofansiv {

struct SvmHyperparams {
  double C = 1.0;
  double tol = 1e-4;
  int max_iter = 10000;  // total coordinate-descent epochs
  std::uint64_t seed = 42;

  bool operator==(const SvmHyperparams&) const = default;
};

struct TrainingSet {
  std::vector<SparseVector> X;
  std::vector<std::string> y;
  std::string positive_label;
  std::string negative_label;
};

struct SvmModel {
  std::vector<double> weights;
  double bias = 0.0;
  std::string positive_label;
  std::string negative_label;
  SvmHyperparams hyperparams;
  bool converged = false;

  // Training diagnostics; not serialized.
  double objective = 0.0;
  double duality_gap = 0.0;
  int epochs = 0;

  std::size_t dim() const { return weights.size(); }
};

// Throws SingleClassData, DimensionMismatch, UnknownLabel or InvalidArgument.
SvmModel train(const TrainingSet& data, const SvmHyperparams& hyper = {});

double decision_value(const SvmModel& model, const SparseVector& x);

// Positive label iff the decision value is > 0; ties go to the negative label.
const std::string& predict(const SvmModel& model, const SparseVector& x);

// J(w, b) for the model on the given data.
double primal_objective(const SvmModel& model, const TrainingSet& data, double C);

// Text format: header `linear-svm v1 dim=<D> pos=<L+> neg=<L-> C=<c> tol=<t>
// seed=<s> converged=<bool>`, then `bias <value>`, then `<index> <weight>` for
// every nonzero weight in ascending index order. Reals use 17 significant
// digits so the round trip is exact.
void write_model(const SvmModel& model, std::ostream& out);
void write_model(const SvmModel& model, const std::filesystem::path& path);
SvmModel read_model(std::istream& in, const std::string& source_name = "<stream>");
SvmModel read_model(const std::filesystem::path& path);

}  // namespace ofansiv
