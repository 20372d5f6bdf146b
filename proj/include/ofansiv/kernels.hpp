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

// Batch kernels over documents. `serial` is the reference; `parallel` splits
// the documents across OpenMP threads and must return identical results in
// the same order.

#pragma once

#include <span>
#include <string>
#include <vector>

#include "ofansiv/normalize.hpp"
#include "ofansiv/svm.hpp"
#include "ofansiv/vectorize.hpp"

namespace ofansiv::kernels {

namespace serial {

std::vector<NormalizedText> preprocess_batch(const Pipeline& pipeline,
                                             std::span<const std::string> raw);
std::vector<SparseVector> transform_batch(std::span<const NormalizedText> docs,
                                          const Vocabulary& vocab);
std::vector<double> decision_values(const SvmModel& model, std::span<const SparseVector> X);
std::vector<std::string> predict_batch(const SvmModel& model, std::span<const SparseVector> X);

}  // namespace serial

namespace parallel {

std::vector<NormalizedText> preprocess_batch(const Pipeline& pipeline,
                                             std::span<const std::string> raw);
std::vector<SparseVector> transform_batch(std::span<const NormalizedText> docs,
                                          const Vocabulary& vocab);
std::vector<double> decision_values(const SvmModel& model, std::span<const SparseVector> X);
std::vector<std::string> predict_batch(const SvmModel& model, std::span<const SparseVector> X);

}  // namespace parallel

int max_threads();

}  // namespace ofansiv::kernels
