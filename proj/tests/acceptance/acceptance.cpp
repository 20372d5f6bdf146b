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

// Acceptance checks. One PASS/FAIL line per criterion; the exit status is
// non-zero if any criterion fails or runs past its time limit.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "micro_instances.hpp"
#include "ofansiv/ablation.hpp"
#include "ofansiv/corpus.hpp"
#include "ofansiv/metrics.hpp"
#include "ofansiv/normalize.hpp"
#include "ofansiv/svm.hpp"
#include "ofansiv/unicode.hpp"
#include "ofansiv/vectorize.hpp"
#include "oracles/metric_oracle.hpp"
#include "oracles/svm_oracle.hpp"
#include "oracles/text_oracles.hpp"
#include "random_tweets.hpp"

namespace fs = std::filesystem;
using namespace ofansiv;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failed checks; the first few are reported.
struct Checker {
  Outcome out;
  int failures = 0;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    out.pass = false;
    if (++failures <= 3) out.detail += (out.detail.empty() ? "" : "; ") + what;
  }
  Outcome done(const std::string& summary) {
    if (failures > 3) out.detail += "; " + std::to_string(failures - 3) + " more";
    if (out.pass) out.detail = summary;
    return out;
  }
};

std::shared_ptr<const LexiconSet> lexicons() {
  static const auto set = [] {
    const char* env = std::getenv("OFANSIV_LEXICON_DIR");
    return std::make_shared<const LexiconSet>(
        LexiconSet::load_dir(env && *env ? env : OFANSIV_DEFAULT_LEXICON_DIR));
  }();
  return set;
}

const Lexicon& lex(LexiconKind kind) { return *lexicons()->get(kind); }

// --- 1 ------------------------------------------------------------------------------

Outcome golden_examples() {
  Checker c;
  auto eq = [&](const std::string& got, const std::string& want, const std::string& name) {
    c.expect(got == want, name + ": got '" + got + "'");
  };
  eq(convert_emoji("🤨 text", lex(LexiconKind::kEmoji)), " وجه يعجز مع لسان  text", "emoji");
  eq(convert_emoticons(":-X", lex(LexiconKind::kEmoticon)), "معقود اللسان", "emoticon");
  eq(segment_hashtags("#الهلال_التعاون"), "الهلال التعاون", "hashtag");
  eq(segment_hashtags("#a_b_c"), "a b c", "hashtag2");
  eq(normalize_letters("أإآ"), "ااا", "alif");
  eq(normalize_letters("مدرسة"), "مدرسه", "ta marbuta");
  eq(normalize_letters("على"), "علي", "alif maqsura");
  eq(normalize_dialect("زلمة", lex(LexiconKind::kDialectNoun)), "ولد", "boy 1");
  eq(normalize_dialect("زول", lex(LexiconKind::kDialectNoun)), "ولد", "boy 2");
  eq(normalize_dialect("زلمةة", lex(LexiconKind::kDialectNoun)), "زلمةة", "boy exact");
  eq(categorize_words("كلب", lex(LexiconKind::kAnimalCategory)), "حيوان", "dog");
  eq(categorize_words("قطط", lex(LexiconKind::kAnimalCategory)), "حيوان", "cats");
  eq(categorize_words("كتاب", lex(LexiconKind::kAnimalCategory)), "كتاب", "book");
  eq(reduce_repeats("ههههه"), "هه", "repeat");
  eq(clean_misc("@USER hello URL"), "hello", "placeholders");
  eq(clean_misc("كلمـــة"), "كلمة", "tatweel");
  const Pipeline full({StageSet::all(), lexicons()});
  eq(full.run("زلمة").text, "ولد", "pipeline boy");
  eq(full.run("كلب").text, "حيوان", "pipeline dog");
  return c.done("18 examples");
}

// --- 2 ------------------------------------------------------------------------------

Outcome idempotence() {
  constexpr int kTweets = 10000;
  constexpr unsigned kRotating = 16;
  Checker c;
  std::vector<Pipeline> pipelines;
  for (std::uint32_t bits = 0; bits < 512; ++bits) {
    pipelines.emplace_back(PipelineConfig{StageSet::from_bits(bits), lexicons()});
  }
  testkit::TweetGenerator gen(*lexicons());
  Rng rng(20261016);
  std::vector<unsigned> uses(512, 0);
  std::size_t checks = 0;
  for (int i = 0; i < kTweets; ++i) {
    const std::string t = gen.tweet(rng);
    std::vector<std::uint32_t> subsets = {0, 511};
    for (unsigned k = 0; k < kRotating; ++k) {
      subsets.push_back((static_cast<unsigned>(i) * kRotating + k) % 512);
    }
    for (std::uint32_t bits : subsets) {
      const Pipeline& p = pipelines[bits];
      const NormalizedText once = p.run(t);
      c.expect(p.run(once.text) == once, "stages " + std::to_string(bits) + " on '" + t + "'");
      ++uses[bits];
      ++checks;
    }
  }
  unsigned min_use = *std::min_element(uses.begin(), uses.end());
  c.expect(min_use > 0, "a stage subset was never exercised");
  return c.done(std::to_string(kTweets) + " tweets, " + std::to_string(checks) +
                " checks, all 512 subsets (>= " + std::to_string(min_use) + " tweets each)");
}

// --- 3 ------------------------------------------------------------------------------

Outcome vectorizer_oracle() {
  Checker c;
  static const char32_t alphabet[] = {U'a', U'b', U' ', U'ك', U'ل', U'ب', U'ا', U'😂', U'é', U'ه'};
  Rng rng(3);
  std::vector<std::string> texts;
  for (int i = 0; i < 1000; ++i) {
    std::u32string s;
    for (std::size_t k = 0, n = rng.below(21); k < n; ++k) {
      s.push_back(alphabet[rng.below(std::size(alphabet))]);
    }
    texts.push_back(oracle::u32_to_utf8(s));
  }
  const Vocabulary full = fit_vocabulary(texts);
  const Vocabulary half = fit_vocabulary(std::span<const std::string>(texts).first(500));
  for (const auto& t : texts) {
    const auto windows = oracle::window_counts(t, 2, 5);
    for (const Vocabulary* v : {&full, &half}) {
      std::map<std::string, unsigned> expected, got;
      for (const auto& [g, n] : windows) {
        if (v->index_of(g)) expected[g] = n;
      }
      for (const auto& e : transform(t, *v).entries) got[v->ngram(e.index)] = e.count;
      c.expect(got == expected, "'" + t + "'");
    }
  }
  return c.done("1000 strings, two vocabularies");
}

// --- 4 ------------------------------------------------------------------------------

Outcome svm_oracle() {
  Checker c;
  double worst = -1.0;
  for (const auto& m : testkit::micro_instances()) {
    oracle::DenseProblem p;
    for (const auto& row : m.X) p.X.emplace_back(row.begin(), row.end());
    p.y = m.y;
    p.C = m.C;
    double ref = oracle::subgradient_svm(p, 1000000, 1.0).objective;
    ref = std::min(ref, oracle::subgradient_svm(p, 1000000, 0.1).objective);
    const TrainingSet ts = testkit::to_training_set(m);
    const SvmModel model = train(ts, {m.C, 1e-4, 10000, 42});
    const double rel = (primal_objective(model, ts, m.C) - ref) / ref;
    worst = std::max(worst, rel);
    c.expect(rel <= 1e-3, m.name + " rel " + std::to_string(rel));
  }
  // (1,0)+ / (-1,0)- moved to (2,0)+ / (0,0)- so counts stay non-negative;
  // the intercept in the original frame is b + w . (1, 0).
  const auto pair = testkit::micro_instances().front();
  const SvmModel m = train(testkit::to_training_set(pair), {pair.C, 1e-4, 10000, 42});
  const double w0 = m.weights[0], w1 = m.weights[1], b = m.bias + w0;
  c.expect(std::abs(w0 - 1) <= 1e-2 && std::abs(w1) <= 1e-2 && std::abs(b) <= 1e-2,
           "pair w=(" + std::to_string(w0) + "," + std::to_string(w1) + ") b=" +
               std::to_string(b));
  char buf[160];
  std::snprintf(buf, sizeof buf, "20 instances, worst rel %.2e; pair w=(%.4f,%.4f) b=%.4f", worst,
                w0, w1, b);
  return c.done(buf);
}

// --- 5 ------------------------------------------------------------------------------

Outcome metrics_oracle() {
  Checker c;
  Rng rng(5);
  auto close = [](double a, double b) { return std::abs(a - b) <= 1e-12; };
  for (int k = 0; k < 100; ++k) {
    std::vector<std::string> pred, gold;
    const double p = rng.uniform();
    for (int i = 0; i < 1000; ++i) {
      gold.push_back(rng.uniform() < p ? "OFF" : "NOT_OFF");
      pred.push_back(rng.uniform() < 0.6 ? gold.back() : (rng.below(2) ? "OFF" : "NOT_OFF"));
    }
    const ConfusionMatrix cm = confusion(pred, gold, "OFF");
    const MetricReport mr = compute_metrics(cm, Averaging::kMacro);
    const MetricReport br = compute_metrics(cm, Averaging::kPositiveBinary);
    const auto mo = oracle::macro_scores(pred, gold, "OFF", "NOT_OFF");
    const auto bo = oracle::binary_scores(pred, gold, "OFF");
    c.expect(close(mr.precision, mo.precision) && close(mr.recall, mo.recall) &&
                 close(mr.f1, mo.f1) && close(mr.accuracy, mo.accuracy),
             "macro set " + std::to_string(k));
    c.expect(close(br.precision, bo.precision) && close(br.recall, bo.recall) &&
                 close(br.f1, bo.f1) && close(br.accuracy, bo.accuracy),
             "binary set " + std::to_string(k));
  }
  const MetricReport none_pred = compute_metrics({0, 0, 5, 5}, Averaging::kPositiveBinary);
  c.expect(none_pred.precision == 0 && none_pred.recall == 0 && none_pred.f1 == 0 &&
               none_pred.accuracy == 0.5,
           "0/0 with no positive predictions");
  const MetricReport no_pos = compute_metrics({0, 3, 0, 7}, Averaging::kPositiveBinary);
  c.expect(no_pos.recall == 0 && no_pos.f1 == 0, "0/0 with no positive gold");
  const MetricReport all_neg = compute_metrics({0, 0, 0, 10}, Averaging::kMacro);
  c.expect(all_neg.precision == 0.5 && all_neg.f1 == 0.5, "macro with one empty class");
  return c.done("100 label sets of 1000, degenerate cases");
}

// --- 6 ------------------------------------------------------------------------------

Outcome directional_effect() {
  Checker c;
  const SplitCorpus corpus = micro_corpus(42);
  AblationOptions o;
  o.averaging = Averaging::kPositiveBinary;
  o.lexicons = lexicons();
  const std::vector<AblationConfig> configs = {technique_configs().back()};
  const auto rows = run_ablation(corpus.train, corpus.test, configs, o);
  const double base = rows.at(0).report.f1, all = rows.at(1).report.f1;
  c.expect(all - base >= 0.10, "gain " + std::to_string(all - base));
  c.expect(all >= 0.90, "full-pipeline F1 " + std::to_string(all));
  const auto again = run_ablation(corpus.train, corpus.test, configs, o);
  c.expect(again[0].report == rows[0].report && again[1].report == rows[1].report,
           "second run differs");
  char buf[120];
  std::snprintf(buf, sizeof buf, "positive-class F1 baseline %.4f, full pipeline %.4f", base, all);
  return c.done(buf);
}

// --- 7 ------------------------------------------------------------------------------

int cli(std::vector<std::string> args) {
  std::vector<char*> argv;
  static char name[] = "ofansiv";
  argv.push_back(name);
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream sink;
  auto* old = std::cout.rdbuf(sink.rdbuf());
  const int code = run_cli(static_cast<int>(argv.size()), argv.data());
  std::cout.rdbuf(old);
  return code;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome determinism() {
  Checker c;
  const fs::path root = fs::temp_directory_path() / "ofansiv_acceptance_determinism";
  fs::remove_all(root);
  c.expect(cli({"gen-corpus", "--out-dir", root.string()}) == 0, "gen-corpus failed");
  const std::string train = (root / "train.tsv").string(), test = (root / "test.tsv").string();
  for (const char* run : {"a", "b"}) {
    c.expect(cli({"ablate", "--train", train, "--eval", test, "--out-dir", (root / run).string(),
                  "--seed", "42"}) == 0,
             std::string("ablate run ") + run + " failed");
  }
  std::size_t files = 0;
  if (fs::exists(root / "a")) {
    for (const auto& e : fs::directory_iterator(root / "a")) {
      c.expect(slurp(e.path()) == slurp(root / "b" / e.path().filename()),
               e.path().filename().string() + " differs");
      ++files;
    }
  }
  c.expect(files == 17, std::to_string(files) + " files");
  fs::remove_all(root);
  return c.done(std::to_string(files) + " files identical (report, vocabularies, models)");
}

// --- 8 ------------------------------------------------------------------------------

Outcome upsampling_contract() {
  Checker c;
  Dataset dev;
  dev.split_name = "dev";
  for (int i = 0; i < 821; ++i) dev.records.push_back({"n" + std::to_string(i), "NOT_OFF", {}});
  for (int i = 0; i < 179; ++i) dev.records.push_back({"p" + std::to_string(i), "OFF", {}});
  const Dataset up = upsample_minority(dev, Task::kA, 42);
  std::map<std::string, std::size_t> labels, before, after;
  for (const auto& r : dev.records) ++before[r.text + *r.label_a];
  for (const auto& r : up.records) {
    ++labels[*r.label_a];
    ++after[r.text + *r.label_a];
  }
  c.expect(labels["NOT_OFF"] == 821 && labels["OFF"] == 821,
           std::to_string(labels["NOT_OFF"]) + "/" + std::to_string(labels["OFF"]));
  for (const auto& [k, n] : before) c.expect(after[k] >= n, "lost " + k);
  for (const auto& [k, n] : after) {
    c.expect(before.count(k) == 1, "invented " + k);
    if (k[0] == 'n') c.expect(n == 1, "duplicated majority " + k);
  }
  return c.done("821/179 -> 821/821, originals kept");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "golden examples", 1, golden_examples},
      {2, "idempotence", 30, idempotence},
      {3, "vectorizer oracle", 10, vectorizer_oracle},
      {4, "svm oracle", 60, svm_oracle},
      {5, "metrics oracle", 5, metrics_oracle},
      {6, "directional preprocessing effect", 60, directional_effect},
      {7, "ablate determinism", 60, determinism},
      {8, "upsampling contract", 1, upsampling_contract},
  };

  // Lexicon loading is shared setup, not part of any criterion's budget.
  lexicons();

  bool all = true;
  for (const auto& cr : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > cr.limit_s) {
      o.pass = false;
      o.detail += " [over the " + std::to_string(static_cast<int>(cr.limit_s)) + " s limit]";
    }
    all = all && o.pass;
    std::printf("criterion %d %-34s %s  %.2fs  %s\n", cr.id, cr.name, o.pass ? "PASS" : "FAIL", secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
