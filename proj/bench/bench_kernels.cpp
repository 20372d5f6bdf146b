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

// Serial vs OpenMP batch kernels on generated tweets. Thread count follows
// OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "ofansiv/kernels.hpp"
#include "random_tweets.hpp"

namespace {

using namespace ofansiv;

struct Fixture {
  Pipeline pipeline{PipelineConfig{StageSet::all(), testkit::shipped_lexicons()}};
  std::vector<std::string> raw;
  std::vector<NormalizedText> docs;
  Vocabulary vocab;
  std::vector<SparseVector> X;
  SvmModel model;

  Fixture() {
    testkit::TweetGenerator gen(*testkit::shipped_lexicons());
    Rng rng(7);
    for (int i = 0; i < 4000; ++i) raw.push_back(gen.tweet(rng));
    docs = kernels::serial::preprocess_batch(pipeline, raw);
    vocab = fit_vocabulary(std::span<const NormalizedText>(docs));
    X = kernels::serial::transform_batch(docs, vocab);
    model.positive_label = "OFF";
    model.negative_label = "NOT_OFF";
    for (std::size_t j = 0; j < vocab.size(); ++j) model.weights.push_back(rng.uniform() - 0.5);
  }
};

const Fixture& fixture() {
  static const Fixture f;
  return f;
}

void BM_PreprocessSerial(benchmark::State& s) {
  const auto& f = fixture();
  for (auto _ : s) benchmark::DoNotOptimize(kernels::serial::preprocess_batch(f.pipeline, f.raw));
  s.SetItemsProcessed(s.iterations() * static_cast<std::int64_t>(f.raw.size()));
}
void BM_PreprocessParallel(benchmark::State& s) {
  const auto& f = fixture();
  for (auto _ : s) benchmark::DoNotOptimize(kernels::parallel::preprocess_batch(f.pipeline, f.raw));
  s.SetItemsProcessed(s.iterations() * static_cast<std::int64_t>(f.raw.size()));
}
void BM_TransformSerial(benchmark::State& s) {
  const auto& f = fixture();
  for (auto _ : s) benchmark::DoNotOptimize(kernels::serial::transform_batch(f.docs, f.vocab));
  s.SetItemsProcessed(s.iterations() * static_cast<std::int64_t>(f.docs.size()));
}
void BM_TransformParallel(benchmark::State& s) {
  const auto& f = fixture();
  for (auto _ : s) benchmark::DoNotOptimize(kernels::parallel::transform_batch(f.docs, f.vocab));
  s.SetItemsProcessed(s.iterations() * static_cast<std::int64_t>(f.docs.size()));
}
void BM_DecisionSerial(benchmark::State& s) {
  const auto& f = fixture();
  for (auto _ : s) benchmark::DoNotOptimize(kernels::serial::decision_values(f.model, f.X));
  s.SetItemsProcessed(s.iterations() * static_cast<std::int64_t>(f.X.size()));
}
void BM_DecisionParallel(benchmark::State& s) {
  const auto& f = fixture();
  for (auto _ : s) benchmark::DoNotOptimize(kernels::parallel::decision_values(f.model, f.X));
  s.SetItemsProcessed(s.iterations() * static_cast<std::int64_t>(f.X.size()));
}

BENCHMARK(BM_PreprocessSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PreprocessParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TransformSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TransformParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DecisionSerial)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_DecisionParallel)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
