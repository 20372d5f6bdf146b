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

#include "ofansiv/kernels.hpp"

#include <omp.h>

#include <exception>

namespace ofansiv::kernels {
namespace {

// Applies f(i) for i in [0, n) across threads. The first exception thrown by
// any iteration is rethrown on the calling thread.
template <class F>
void parallel_for(std::size_t n, F&& f) {
  std::exception_ptr failure;
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 32)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      f(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(ofansiv_kernel_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

int max_threads() { return omp_get_max_threads(); }

namespace serial {

std::vector<NormalizedText> preprocess_batch(const Pipeline& pipeline,
                                             std::span<const std::string> raw) {
  std::vector<NormalizedText> out;
  out.reserve(raw.size());
  for (const auto& t : raw) out.push_back(pipeline.run(t));
  return out;
}

std::vector<SparseVector> transform_batch(std::span<const NormalizedText> docs,
                                          const Vocabulary& vocab) {
  std::vector<SparseVector> out;
  out.reserve(docs.size());
  for (const auto& d : docs) out.push_back(transform(d.text, vocab));
  return out;
}

std::vector<double> decision_values(const SvmModel& model, std::span<const SparseVector> X) {
  std::vector<double> out;
  out.reserve(X.size());
  for (const auto& x : X) out.push_back(decision_value(model, x));
  return out;
}

std::vector<std::string> predict_batch(const SvmModel& model, std::span<const SparseVector> X) {
  std::vector<std::string> out;
  out.reserve(X.size());
  for (const auto& x : X) out.push_back(predict(model, x));
  return out;
}

}  // namespace serial

namespace parallel {

std::vector<NormalizedText> preprocess_batch(const Pipeline& pipeline,
                                             std::span<const std::string> raw) {
  std::vector<NormalizedText> out(raw.size());
  parallel_for(raw.size(), [&](std::size_t i) { out[i] = pipeline.run(raw[i]); });
  return out;
}

std::vector<SparseVector> transform_batch(std::span<const NormalizedText> docs,
                                          const Vocabulary& vocab) {
  std::vector<SparseVector> out(docs.size());
  parallel_for(docs.size(), [&](std::size_t i) { out[i] = transform(docs[i].text, vocab); });
  return out;
}

std::vector<double> decision_values(const SvmModel& model, std::span<const SparseVector> X) {
  std::vector<double> out(X.size());
  parallel_for(X.size(), [&](std::size_t i) { out[i] = decision_value(model, X[i]); });
  return out;
}

std::vector<std::string> predict_batch(const SvmModel& model, std::span<const SparseVector> X) {
  std::vector<std::string> out(X.size());
  parallel_for(X.size(), [&](std::size_t i) { out[i] = predict(model, X[i]); });
  return out;
}

}  // namespace parallel
}  // namespace ofansiv::kernels
