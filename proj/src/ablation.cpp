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

#include "ofansiv/ablation.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "ofansiv/error.hpp"
#include "ofansiv/kernels.hpp"

namespace ofansiv {
namespace {

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string percent(double v) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%.2f%%", 100.0 * v);
  return buf;
}

}  // namespace

TrainedClassifier train_classifier(const Dataset& train, Task task, const PipelineConfig& pipeline,
                                   bool upsample, const SvmHyperparams& hyper) {
  if (train.records.empty()) throw Error(ErrorKind::kEmptyCorpus, "training set is empty");
  const Pipeline pipe(pipeline);

  Dataset data = train;
  std::vector<std::string> texts = data.texts();
  std::vector<NormalizedText> docs = kernels::parallel::preprocess_batch(pipe, texts);
  for (std::size_t i = 0; i < docs.size(); ++i) data.records[i].text = std::move(docs[i].text);
  if (upsample) data = upsample_minority(data, task, hyper.seed);

  TrainedClassifier clf;
  clf.pipeline = pipeline;
  texts = data.texts();
  clf.vocab = fit_vocabulary(std::span<const std::string>(texts));

  docs.assign(texts.size(), {});
  for (std::size_t i = 0; i < texts.size(); ++i) docs[i].text = std::move(texts[i]);

  TrainingSet ts;
  ts.X = kernels::parallel::transform_batch(docs, clf.vocab);
  ts.y = data.labels(task);
  ts.positive_label = std::string(positive_label(task));
  ts.negative_label = std::string(negative_label(task));
  clf.model = ofansiv::train(ts, hyper);
  return clf;
}

std::vector<std::string> predict_labels(const TrainedClassifier& clf,
                                        std::span<const std::string> raw) {
  const Pipeline pipe(clf.pipeline);
  std::vector<NormalizedText> docs = kernels::parallel::preprocess_batch(pipe, raw);
  std::vector<SparseVector> X = kernels::parallel::transform_batch(docs, clf.vocab);
  return kernels::parallel::predict_batch(clf.model, X);
}

MetricReport evaluate_classifier(const TrainedClassifier& clf, const Dataset& eval, Task task,
                                 Averaging averaging) {
  const std::vector<std::string> golds = eval.labels(task);
  const std::vector<std::string> texts = eval.texts();
  const std::vector<std::string> preds = predict_labels(clf, texts);
  return compute_metrics(confusion(preds, golds, positive_label(task)), averaging);
}

std::optional<AblationMode> parse_ablation_mode(std::string_view name) {
  if (name == "individual") return AblationMode::kIndividual;
  if (name == "cumulative") return AblationMode::kCumulative;
  return std::nullopt;
}

std::vector<AblationConfig> technique_configs(bool include_all) {
  using S = Stage;
  const StageSet none = StageSet::none();
  std::vector<AblationConfig> out = {
      {"emoji+emoticon", none.with(S::kEmojiConvert).with(S::kEmoticonConvert), false},
      {"dialect", none.with(S::kDialectNormalize), false},
      {"categorize", none.with(S::kWordCategorize), false},
      {"letters", none.with(S::kLetterNormalize).with(S::kRepeatReduce), false},
      {"misc+hashtags",
       none.with(S::kMiscClean).with(S::kHashtagSegment).with(S::kStopwordRemove), false},
      {"upsampling", none, true},
  };
  if (include_all) out.push_back({"all", StageSet::all(), false});
  return out;
}

std::vector<AblationRow> run_ablation(const Dataset& train, const Dataset& eval,
                                      const std::vector<AblationConfig>& configs,
                                      const AblationOptions& options) {
  std::vector<AblationConfig> plan;
  plan.push_back({"baseline", StageSet::none(), false});
  StageSet acc = StageSet::none();
  bool acc_upsample = false;
  for (const auto& c : configs) {
    if (options.mode == AblationMode::kCumulative) {
      acc = acc | c.stages;
      acc_upsample = acc_upsample || c.upsample;
      plan.push_back({c.name, acc, acc_upsample});
    } else {
      plan.push_back(c);
    }
  }

  std::vector<AblationRow> rows;
  rows.reserve(plan.size());
  for (const auto& c : plan) {
    AblationRow row;
    row.config = c.name;
    row.stages = c.stages;
    row.upsample = c.upsample;
    PipelineConfig pc{c.stages, options.lexicons};
    row.classifier = train_classifier(train, options.task, pc, c.upsample, options.hyper);
    row.report = evaluate_classifier(row.classifier, eval, options.task, options.averaging);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string render_table(const std::vector<AblationRow>& rows) {
  std::size_t width = 6;
  for (const auto& r : rows) width = std::max(width, r.config.size());
  std::ostringstream out;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-*s  %9s  %9s  %9s  %9s\n", static_cast<int>(width), "config",
                "precision", "recall", "f1", "accuracy");
  out << buf;
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%-*s  %9s  %9s  %9s  %9s\n", static_cast<int>(width),
                  r.config.c_str(), percent(r.report.precision).c_str(),
                  percent(r.report.recall).c_str(), percent(r.report.f1).c_str(),
                  percent(r.report.accuracy).c_str());
    out << buf;
  }
  return out.str();
}

void write_report_tsv(const std::vector<AblationRow>& rows, std::ostream& out) {
  out << "config\tprecision\trecall\tf1\taccuracy\n";
  for (const auto& r : rows) {
    out << r.config << '\t' << format_real(r.report.precision) << '\t'
        << format_real(r.report.recall) << '\t' << format_real(r.report.f1) << '\t'
        << format_real(r.report.accuracy) << '\n';
  }
}

}  // namespace ofansiv
