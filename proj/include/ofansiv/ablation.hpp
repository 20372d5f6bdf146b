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

// Train/evaluate composition and the per-technique ablation runner.

#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ofansiv/corpus.hpp"
#include "ofansiv/metrics.hpp"
#include "ofansiv/normalize.hpp"
#include "ofansiv/svm.hpp"
#include "ofansiv/vectorize.hpp"

namespace ofansiv {

struct TrainedClassifier {
  PipelineConfig pipeline;
  Vocabulary vocab;
  SvmModel model;
};

// preprocess -> (optional upsampling, seeded with hyper.seed) -> fit
// vocabulary -> train. Upsampling happens after preprocessing; it only
// duplicates records so the order does not change the result.
TrainedClassifier train_classifier(const Dataset& train, Task task, const PipelineConfig& pipeline,
                                   bool upsample, const SvmHyperparams& hyper);

std::vector<std::string> predict_labels(const TrainedClassifier& clf,
                                        std::span<const std::string> raw);

MetricReport evaluate_classifier(const TrainedClassifier& clf, const Dataset& eval, Task task,
                                 Averaging averaging);

enum class AblationMode { kIndividual, kCumulative };
std::optional<AblationMode> parse_ablation_mode(std::string_view name);

struct AblationConfig {
  std::string name;
  StageSet stages;
  bool upsample = false;
};

// Rows of the per-technique table: emoji+emoticon, dialect, categorize,
// letters, misc+hashtags, upsampling, optionally followed by "all".
std::vector<AblationConfig> technique_configs(bool include_all = true);

struct AblationOptions {
  Task task = Task::kA;
  AblationMode mode = AblationMode::kIndividual;
  Averaging averaging = Averaging::kMacro;
  SvmHyperparams hyper;
  std::shared_ptr<const LexiconSet> lexicons;
};

struct AblationRow {
  std::string config;
  StageSet stages;
  bool upsample = false;
  MetricReport report;
  TrainedClassifier classifier;
};

// One row per config, preceded by a "baseline" row with no preprocessing.
// In cumulative mode row k enables the union of configs[0..k].
std::vector<AblationRow> run_ablation(const Dataset& train, const Dataset& eval,
                                      const std::vector<AblationConfig>& configs,
                                      const AblationOptions& options);

// Aligned table with percentages to two decimals.
std::string render_table(const std::vector<AblationRow>& rows);

// `config<TAB>precision<TAB>recall<TAB>f1<TAB>accuracy`, full precision.
void write_report_tsv(const std::vector<AblationRow>& rows, std::ostream& out);

}  // namespace ofansiv
