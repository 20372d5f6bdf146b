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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "ofansiv/ablation.hpp"
#include "ofansiv/corpus.hpp"
#include "ofansiv/error.hpp"
#include "ofansiv/kernels.hpp"
#include "ofansiv/lexicon.hpp"
#include "ofansiv/metrics.hpp"
#include "ofansiv/normalize.hpp"
#include "ofansiv/svm.hpp"
#include "ofansiv/vectorize.hpp"

namespace ofansiv {
namespace {

namespace fs = std::filesystem;

struct StageFlags {
  bool all = false;
  bool none = false;
  bool no_emoji = false;
  bool no_emoticon = false;
  bool no_hashtag = false;
  bool no_letters = false;
  bool no_repeat = false;
  bool no_misc = false;
  bool no_dialect = false;
  bool no_category = false;
  bool no_stopwords = false;

  void attach(CLI::App* app) {
    auto* a = app->add_flag("--all-stages", all, "Enable every stage (default)");
    auto* n = app->add_flag("--no-stages", none, "Disable every stage");
    a->excludes(n);
    app->add_flag("--no-emoji", no_emoji, "Disable EmojiConvert");
    app->add_flag("--no-emoticon", no_emoticon, "Disable EmoticonConvert");
    app->add_flag("--no-hashtag", no_hashtag, "Disable HashtagSegment");
    app->add_flag("--no-letters", no_letters, "Disable LetterNormalize");
    app->add_flag("--no-repeat", no_repeat, "Disable RepeatReduce");
    app->add_flag("--no-misc", no_misc, "Disable MiscClean");
    app->add_flag("--no-dialect", no_dialect, "Disable DialectNormalize");
    app->add_flag("--no-category", no_category, "Disable WordCategorize");
    app->add_flag("--no-stopwords", no_stopwords, "Disable StopwordRemove");
  }

  StageSet stages() const {
    StageSet s = none ? StageSet::none() : StageSet::all();
    const std::pair<bool, Stage> off[] = {
        {no_emoji, Stage::kEmojiConvert},         {no_emoticon, Stage::kEmoticonConvert},
        {no_hashtag, Stage::kHashtagSegment},     {no_letters, Stage::kLetterNormalize},
        {no_repeat, Stage::kRepeatReduce},        {no_misc, Stage::kMiscClean},
        {no_dialect, Stage::kDialectNormalize},   {no_category, Stage::kWordCategorize},
        {no_stopwords, Stage::kStopwordRemove}};
    for (const auto& [flag, stage] : off) {
      if (flag) s = s.without(stage);
    }
    return s;
  }
};

struct Common {
  std::string lexicon_dir = OFANSIV_DEFAULT_LEXICON_DIR;
  StageFlags stages;

  void attach(CLI::App* app) {
    app->add_option("--lexicon-dir", lexicon_dir, "Directory holding the lexicon tables")
        ->envname("OFANSIV_LEXICON_DIR")
        ->capture_default_str();
    stages.attach(app);
  }

  PipelineConfig pipeline() const {
    if (!fs::is_directory(lexicon_dir)) {
      throw Error(ErrorKind::kIo, "lexicon directory " + lexicon_dir + " does not exist");
    }
    auto lex = std::make_shared<const LexiconSet>(LexiconSet::load_dir(lexicon_dir));
    return PipelineConfig{stages.stages(), std::move(lex)};
  }
};

struct Hyper {
  SvmHyperparams values;
  void attach(CLI::App* app) {
    app->add_option("-C,--C", values.C, "SVM regularization constant")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app->add_option("--tol", values.tol, "Relative duality-gap tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app->add_option("--max-iter", values.max_iter, "Maximum coordinate-descent epochs")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app->add_option("--seed", values.seed, "Random seed")->capture_default_str();
  }
};

Task to_task(const std::string& s) { return *parse_task(s); }

void add_task(CLI::App* app, std::string& task) {
  app->add_option("--task", task, "Sub-task: A (OFF/NOT_OFF) or B (HS/NOT_HS)")
      ->check(CLI::IsMember({"A", "B", "a", "b"}))
      ->capture_default_str();
}

void add_averaging(CLI::App* app, std::string& averaging) {
  app->add_option("--averaging", averaging, "macro or binary")
      ->check(CLI::IsMember({"macro", "binary"}))
      ->capture_default_str();
}

// Picks the schema from the first line: 3 columns is both tasks, 2 columns
// is task A or B depending on the label.
Dataset read_labelled(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open dataset " + path.string());
  std::string first;
  std::getline(in, first);
  if (!first.empty() && first.back() == '\r') first.pop_back();
  const auto tabs = std::count(first.begin(), first.end(), '\t');
  Schema schema = Schema::kBoth;
  if (tabs == 1) {
    std::string label = first.substr(first.find('\t') + 1);
    schema = (label == kHs || label == kNotHs) ? Schema::kTaskB : Schema::kTaskA;
  } else if (tabs != 2) {
    throw LocatedError(ErrorKind::kSchema, path.string(), 1,
                       "expected text<TAB>label[<TAB>label]");
  }
  return read_tsv(path, schema);
}

// One tweet per line; a line with tabs contributes its first column.
std::vector<std::string> read_lines(const fs::path& path, std::vector<std::string>* rest = nullptr) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path.string());
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto tab = line.find('\t');
    out.push_back(line.substr(0, tab));
    if (rest) rest->push_back(tab == std::string::npos ? "" : line.substr(tab));
  }
  return out;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) throw Error(ErrorKind::kIo, "cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void print_report(const MetricReport& r, std::ostream& out) {
  char buf[200];
  std::snprintf(buf, sizeof buf, "precision\t%.17g\nrecall\t%.17g\nf1\t%.17g\naccuracy\t%.17g\n",
                r.precision, r.recall, r.f1, r.accuracy);
  out << "averaging\t" << averaging_name(r.averaging) << '\n' << buf;
}

TrainedClassifier load_classifier(const Common& common, const std::string& vocab_path,
                                  const std::string& model_path) {
  TrainedClassifier clf;
  clf.pipeline = common.pipeline();
  clf.vocab = read_vocabulary(fs::path(vocab_path));
  clf.model = read_model(fs::path(model_path));
  if (clf.model.dim() != clf.vocab.size()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "model dim " + std::to_string(clf.model.dim()) + " vs vocabulary size " +
                    std::to_string(clf.vocab.size()));
  }
  return clf;
}

void check_task(const SvmModel& model, Task task) {
  if (model.positive_label != positive_label(task) ||
      model.negative_label != negative_label(task)) {
    throw Error(ErrorKind::kUnknownLabel, "model labels " + model.positive_label + "/" +
                                              model.negative_label + " do not match the task");
  }
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"Arabic offensive-language and hate-speech classifier"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  // preprocess
  Common pre_common;
  std::string pre_in, pre_out = "-";
  auto* pre = app.add_subcommand("preprocess", "Normalize raw tweets, one per line");
  pre->add_option("--in", pre_in, "Input file (first TAB column is the tweet)")->required();
  pre->add_option("--out", pre_out, "Output file, '-' for stdout")->capture_default_str();
  pre_common.attach(pre);

  // train
  Common tr_common;
  Hyper tr_hyper;
  std::string tr_data, tr_vocab, tr_model, tr_task = "A";
  bool tr_upsample = false;
  auto* tr = app.add_subcommand("train", "Fit vocabulary and SVM on a labelled TSV");
  tr->add_option("--data", tr_data, "Training TSV")->required();
  tr->add_option("--vocab", tr_vocab, "Vocabulary output path")->required();
  tr->add_option("--model", tr_model, "Model output path")->required();
  tr->add_flag("--upsample", tr_upsample, "Upsample the minority class");
  add_task(tr, tr_task);
  tr_hyper.attach(tr);
  tr_common.attach(tr);

  // predict
  Common pr_common;
  std::string pr_in, pr_out = "-", pr_vocab, pr_model, pr_task = "A";
  auto* pr = app.add_subcommand("predict", "Write one label per input line");
  pr->add_option("--in", pr_in, "Input file (first TAB column is the tweet)")->required();
  pr->add_option("--out", pr_out, "Output file, '-' for stdout")->capture_default_str();
  pr->add_option("--vocab", pr_vocab, "Vocabulary file")->required();
  pr->add_option("--model", pr_model, "Model file")->required();
  add_task(pr, pr_task);
  pr_common.attach(pr);

  // evaluate
  Common ev_common;
  std::string ev_data, ev_vocab, ev_model, ev_task = "A", ev_avg = "macro", ev_out = "-";
  auto* ev = app.add_subcommand("evaluate", "Score a model on a labelled TSV");
  ev->add_option("--data", ev_data, "Evaluation TSV")->required();
  ev->add_option("--vocab", ev_vocab, "Vocabulary file")->required();
  ev->add_option("--model", ev_model, "Model file")->required();
  ev->add_option("--out", ev_out, "Report file, '-' for stdout")->capture_default_str();
  add_task(ev, ev_task);
  add_averaging(ev, ev_avg);
  ev_common.attach(ev);

  // ablate
  Common ab_common;
  Hyper ab_hyper;
  std::string ab_train, ab_eval, ab_out_dir, ab_task = "A", ab_avg = "macro",
                                             ab_mode = "individual";
  bool ab_no_all = false;
  auto* ab = app.add_subcommand("ablate", "Per-technique evaluation table");
  ab->add_option("--train", ab_train, "Training TSV")->required();
  ab->add_option("--eval", ab_eval, "Evaluation TSV")->required();
  ab->add_option("--out-dir", ab_out_dir, "Directory for report, vocabularies and models")
      ->required();
  ab->add_option("--mode", ab_mode, "individual or cumulative")
      ->check(CLI::IsMember({"individual", "cumulative"}))
      ->capture_default_str();
  ab->add_flag("--no-all", ab_no_all, "Skip the all-stages row");
  add_task(ab, ab_task);
  add_averaging(ab, ab_avg);
  ab_hyper.attach(ab);
  ab->add_option("--lexicon-dir", ab_common.lexicon_dir, "Directory holding the lexicon tables")
      ->envname("OFANSIV_LEXICON_DIR")
      ->capture_default_str();

  // gen-corpus
  std::uint64_t gc_seed = 42;
  std::string gc_out_dir;
  auto* gc = app.add_subcommand("gen-corpus", "Write the synthetic train/test corpus");
  gc->add_option("--out-dir", gc_out_dir, "Output directory")->required();
  gc->add_option("--seed", gc_seed, "Random seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return 1;
  }

  try {
    if (*pre) {
      const Pipeline pipe(pre_common.pipeline());
      std::vector<std::string> rest;
      const std::vector<std::string> raw = read_lines(pre_in, &rest);
      const auto docs = kernels::parallel::preprocess_batch(pipe, raw);
      Output out(pre_out);
      for (std::size_t i = 0; i < docs.size(); ++i) out.stream() << docs[i].text << rest[i] << '\n';
    } else if (*tr) {
      const Task task = to_task(tr_task);
      const Dataset data = read_labelled(tr_data);
      const TrainedClassifier clf =
          train_classifier(data, task, tr_common.pipeline(), tr_upsample, tr_hyper.values);
      write_vocabulary(clf.vocab, fs::path(tr_vocab));
      write_model(clf.model, fs::path(tr_model));
      if (!clf.model.converged) {
        std::cerr << "warning: training stopped at max-iter before reaching tol\n";
      }
    } else if (*pr) {
      const TrainedClassifier clf = load_classifier(pr_common, pr_vocab, pr_model);
      check_task(clf.model, to_task(pr_task));
      const std::vector<std::string> raw = read_lines(pr_in);
      const std::vector<std::string> labels = predict_labels(clf, raw);
      Output out(pr_out);
      for (const auto& l : labels) out.stream() << l << '\n';
    } else if (*ev) {
      const Task task = to_task(ev_task);
      const TrainedClassifier clf = load_classifier(ev_common, ev_vocab, ev_model);
      check_task(clf.model, task);
      const Dataset data = read_labelled(ev_data);
      const MetricReport r = evaluate_classifier(clf, data, task, *parse_averaging(ev_avg));
      Output out(ev_out);
      print_report(r, out.stream());
    } else if (*ab) {
      AblationOptions opt;
      opt.task = to_task(ab_task);
      opt.mode = *parse_ablation_mode(ab_mode);
      opt.averaging = *parse_averaging(ab_avg);
      opt.hyper = ab_hyper.values;
      opt.lexicons = ab_common.pipeline().lexicons;
      const Dataset train = read_labelled(ab_train);
      const Dataset eval = read_labelled(ab_eval);
      const auto rows = run_ablation(train, eval, technique_configs(!ab_no_all), opt);

      fs::create_directories(ab_out_dir);
      for (const auto& row : rows) {
        write_vocabulary(row.classifier.vocab, fs::path(ab_out_dir) / (row.config + ".vocab"));
        write_model(row.classifier.model, fs::path(ab_out_dir) / (row.config + ".model"));
      }
      std::ofstream report(fs::path(ab_out_dir) / "report.tsv", std::ios::binary);
      if (!report) throw Error(ErrorKind::kIo, "cannot write report in " + ab_out_dir);
      write_report_tsv(rows, report);
      std::cout << render_table(rows);
    } else if (*gc) {
      const SplitCorpus c = micro_corpus(gc_seed);
      fs::create_directories(gc_out_dir);
      write_tsv(c.train, fs::path(gc_out_dir) / "train.tsv");
      write_tsv(c.test, fs::path(gc_out_dir) / "test.tsv");
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace ofansiv
