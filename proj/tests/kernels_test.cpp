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

// The OpenMP kernels against their serial references.

#include "ofansiv/kernels.hpp"

#include <gtest/gtest.h>

#include <omp.h>

#include "ofansiv/error.hpp"
#include "ofansiv/rng.hpp"
#include "random_tweets.hpp"

using namespace ofansiv;

namespace {

struct Fixture {
  std::vector<std::string> raw;
  Pipeline pipeline{{StageSet::all(), testkit::shipped_lexicons()}};
  Vocabulary vocab;
  SvmModel model;

  Fixture() {
    testkit::TweetGenerator gen(*testkit::shipped_lexicons());
    Rng rng(51);
    for (int i = 0; i < 3000; ++i) raw.push_back(gen.tweet(rng));
    const auto docs = kernels::serial::preprocess_batch(pipeline, raw);
    vocab = fit_vocabulary(std::span<const NormalizedText>(docs).first(500));
    model.weights.resize(vocab.size());
    for (auto& w : model.weights) w = rng.uniform() - 0.5;
    model.bias = 0.1;
    model.positive_label = "OFF";
    model.negative_label = "NOT_OFF";
  }
};

const Fixture& fixture() {
  static const Fixture f;
  return f;
}

class Kernels : public ::testing::TestWithParam<int> {
 protected:
  void SetUp() override { omp_set_num_threads(GetParam()); }
  void TearDown() override { omp_set_num_threads(kernels::max_threads()); }
};

}  // namespace

TEST_P(Kernels, PreprocessMatchesSerial) {
  const auto& f = fixture();
  EXPECT_EQ(kernels::parallel::preprocess_batch(f.pipeline, f.raw),
            kernels::serial::preprocess_batch(f.pipeline, f.raw));
}

TEST_P(Kernels, TransformMatchesSerial) {
  const auto& f = fixture();
  const auto docs = kernels::serial::preprocess_batch(f.pipeline, f.raw);
  EXPECT_EQ(kernels::parallel::transform_batch(docs, f.vocab),
            kernels::serial::transform_batch(docs, f.vocab));
}

TEST_P(Kernels, DecisionsAndPredictionsMatchSerial) {
  const auto& f = fixture();
  const auto docs = kernels::serial::preprocess_batch(f.pipeline, f.raw);
  const auto X = kernels::serial::transform_batch(docs, f.vocab);
  const auto dv = kernels::serial::decision_values(f.model, X);
  ASSERT_EQ(dv.size(), X.size());
  EXPECT_EQ(kernels::parallel::decision_values(f.model, X), dv);
  const auto labels = kernels::serial::predict_batch(f.model, X);
  EXPECT_EQ(kernels::parallel::predict_batch(f.model, X), labels);
  for (std::size_t i = 0; i < X.size(); ++i) EXPECT_EQ(labels[i], predict(f.model, X[i]));
}

TEST_P(Kernels, ErrorsPropagate) {
  const auto& f = fixture();
  std::vector<SparseVector> X(100, SparseVector{{}, f.vocab.size()});
  X[57].dim = f.vocab.size() + 1;
  EXPECT_THROW(kernels::parallel::decision_values(f.model, X), Error);
  EXPECT_THROW(kernels::serial::decision_values(f.model, X), Error);
}

TEST_P(Kernels, EmptyBatch) {
  const auto& f = fixture();
  EXPECT_TRUE(kernels::parallel::preprocess_batch(f.pipeline, {}).empty());
  EXPECT_TRUE(kernels::parallel::transform_batch({}, f.vocab).empty());
}

INSTANTIATE_TEST_SUITE_P(Threads, Kernels, ::testing::Values(1, 2, 4, 7));
