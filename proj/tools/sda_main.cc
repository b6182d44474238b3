//
// Copyright 2026 The sentaug Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

// sda: augment, stats, train, eval and gradcheck over CoNLL-U corpora.
//
// Exit codes: 0 success, 1 usage error, 2 data error, 3 check failure.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "sentaug/augmenter.h"
#include "sentaug/contrastive.h"
#include "sentaug/errors.h"
#include "sentaug/eval.h"
#include "sentaug/io.h"
#include "sentaug/synthetic.h"

namespace {

using namespace sentaug;

constexpr int kUsageError = 1;
constexpr int kDataError = 2;
constexpr int kCheckFailure = 3;

// Thrown for data problems; carries the full "path[:line]: message" text.
class CliDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AugmentFlags {
  std::string method;
  std::string in;
  std::string out;
  uint64_t seed = 0;
  double rate = 0.1;
  std::string strategy = "cascade";
  std::string aux_lexicon;
  std::string neg_lexicon;
  std::string syn_lexicon;
};

std::vector<ParsedSentence> LoadCorpus(const std::string& path) {
  const std::string text = ReadFile(path);
  try {
    return ParseConllu(text);
  } catch (const ParseError& e) {
    throw CliDataError(path + ":" + std::to_string(e.line()) + ": " +
                       e.message());
  } catch (const StructureError& e) {
    throw CliDataError(path + ": " + e.what());
  }
}

int ThreadsFromEnvironment() {
  const char* value = std::getenv("SDA_THREADS");
  if (value == nullptr || *value == '\0') return 0;
  try {
    const int n = std::stoi(value);
    if (n > 0) return n;
  } catch (const std::exception&) {
  }
  throw ConfigError(std::string("SDA_THREADS must be a positive integer, got '") +
                    value + "'");
}

AugmentConfig MakeAugmentConfig(const AugmentFlags& f) {
  AugmentConfig config;
  config.strategy = ParseRuleStrategy(f.strategy);
  if (!f.aux_lexicon.empty()) config.aux = AuxLexicon::FromFile(f.aux_lexicon);
  if (!f.neg_lexicon.empty()) config.neg = NegLexicon::FromFile(f.neg_lexicon);
  if (!f.syn_lexicon.empty()) {
    config.baseline.lexicon =
        std::make_shared<SynonymLexicon>(SynonymLexicon::FromFile(f.syn_lexicon));
  }
  config.baseline.rate = f.rate;
  config.threads = ThreadsFromEnvironment();
  return config;
}

void AddAugmentOptions(CLI::App* cmd, AugmentFlags& f) {
  cmd->add_option("--method", f.method,
                  "pi|aa|dn|crop|del|syn|mask|rep|randpunct")
      ->required();
  cmd->add_option("--in", f.in, "input CoNLL-U file")->required();
  cmd->add_option("--seed", f.seed, "random seed")->capture_default_str();
  cmd->add_option("--rate", f.rate, "rate for crop, del and mask")
      ->capture_default_str();
  cmd->add_option("--strategy", f.strategy, "cascade|random")
      ->capture_default_str();
  cmd->add_option("--aux-lexicon", f.aux_lexicon,
                  "affirmative auxiliaries, base<TAB>third-singular per line");
  cmd->add_option("--neg-lexicon", f.neg_lexicon, "negative words, one per line");
  cmd->add_option("--syn-lexicon", f.syn_lexicon,
                  "synonyms, word<TAB>syn1,syn2 per line");
}

int RunAugment(const AugmentFlags& f) {
  std::cerr << "seed: " << f.seed << "\n";
  const Method method = ParseMethod(f.method);
  const AugmentConfig config = MakeAugmentConfig(f);
  const std::vector<ParsedSentence> corpus = LoadCorpus(f.in);
  const std::vector<AugmentedPair> pairs =
      AugmentCorpus(corpus, method, f.seed, config);
  WriteFileAtomic(f.out, ToJsonLines(pairs));
  size_t changed = 0;
  for (const AugmentedPair& p : pairs) changed += p.changed ? 1 : 0;
  std::cerr << "augmented " << pairs.size() << " sentences, " << changed
            << " changed\n";
  return 0;
}

int RunStats(const AugmentFlags& f) {
  std::cerr << "seed: " << f.seed << "\n";
  const Method method = ParseMethod(f.method);
  const AugmentConfig config = MakeAugmentConfig(f);
  const std::vector<ParsedSentence> corpus = LoadCorpus(f.in);
  if (corpus.empty()) throw CliDataError(f.in + ": corpus is empty");
  std::cout << CoverageStats(corpus, method, f.seed, config).ToJson() << "\n";
  return 0;
}

int RunTrain(const std::string& config_path, const std::string& corpus_path,
             const std::string& out, const std::string& trace) {
  const TrainConfig config = LoadTrainConfig(config_path);
  std::cerr << "seed: " << config.seed << "\n";
  const std::vector<ParsedSentence> corpus = LoadCorpus(corpus_path);
  if (corpus.empty()) throw CliDataError(corpus_path + ": corpus is empty");
  AugmentConfig augment;
  augment.threads = ThreadsFromEnvironment();
  const TrainResult result = Train(corpus, config, augment);
  WriteFileAtomic(out, result.encoder.Serialize());
  WriteFileAtomic(trace, LossTraceCsv(result.loss_trace));
  std::cerr << "steps: " << result.loss_trace.size();
  if (!result.loss_trace.empty()) {
    std::cerr << ", final loss: " << result.loss_trace.back();
  }
  std::cerr << "\n";
  return 0;
}

int RunEval(const std::string& ckpt, const std::string& sts) {
  std::cerr << "seed: 0 (evaluation is deterministic)\n";
  ToyEncoder encoder = [&] {
    const std::string text = ReadFile(ckpt);
    try {
      return ToyEncoder::Deserialize(text);
    } catch (const ParseError& e) {
      throw CliDataError(ckpt + ":" + std::to_string(e.line()) + ": " +
                         e.message());
    } catch (const ContractError& e) {
      throw CliDataError(ckpt + ": " + e.what());
    }
  }();
  const std::vector<StsExample> examples = LoadSts(sts);
  if (examples.empty()) throw CliDataError(sts + ": no examples");
  double rs = 0.0;
  try {
    rs = EvaluateSts(encoder, examples);
  } catch (const UndefinedValueError& e) {
    throw CliDataError(sts + ": " + e.what());
  }
  std::printf("%.4f\n", rs);
  return 0;
}

int RunGradcheck(const std::string& config_path) {
  const TrainConfig config = LoadTrainConfig(config_path);
  std::cerr << "seed: " << config.seed << "\n";
  const std::vector<ParsedSentence> corpus = SyntheticCorpus(
      static_cast<size_t>(config.batch_size), DeriveSeed(config.seed, {10}));
  AugmentConfig augment;
  augment.baseline.rate = config.baseline_rate;
  augment.strategy = config.strategy;
  const std::vector<AugmentedPair> pairs =
      AugmentCorpus(corpus, config.method, DeriveSeed(config.seed, {11}), augment);
  const ToyEncoder encoder(BuildVocabulary(pairs), config.dim, 0.0,
                           DeriveSeed(config.seed, {12}), config.init_anisotropy);
  std::vector<size_t> members(pairs.size());
  for (size_t i = 0; i < members.size(); ++i) members[i] = i;
  const std::vector<TrainingPair> batch = BuildBatch(
      pairs, config.proportion, DeriveSeed(config.seed, {13}), members);
  GradientCheckOptions options;
  options.tolerance = config.gradcheck_tolerance;
  options.samples = config.gradcheck_samples;
  options.seed = DeriveSeed(config.seed, {14});
  const GradientCheckReport report =
      CheckGradients(encoder, batch, config.temperature, options);
  std::cout << report.Describe() << "\n";
  return report.passed ? 0 : kCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rule-based sentence augmentation for contrastive learning"};
  app.require_subcommand(1);

  AugmentFlags augment_flags;
  CLI::App* augment = app.add_subcommand("augment", "write augmented pairs as JSON lines");
  AddAugmentOptions(augment, augment_flags);
  augment->add_option("--out", augment_flags.out, "output JSON-lines file")->required();

  AugmentFlags stats_flags;
  CLI::App* stats = app.add_subcommand("stats", "print augmentation coverage as JSON");
  AddAugmentOptions(stats, stats_flags);

  std::string train_config, train_corpus, train_out, train_trace;
  CLI::App* train = app.add_subcommand("train", "train the toy encoder contrastively");
  train->add_option("--config", train_config, "key=value training config")->required();
  train->add_option("--corpus", train_corpus, "CoNLL-U training corpus")->required();
  train->add_option("--out", train_out, "encoder checkpoint to write")->required();
  train->add_option("--trace", train_trace, "loss trace CSV to write")->required();

  std::string eval_ckpt, eval_sts;
  CLI::App* eval = app.add_subcommand("eval", "Spearman correlation on an STS file");
  eval->add_option("--ckpt", eval_ckpt, "encoder checkpoint")->required();
  eval->add_option("--sts", eval_sts, "TSV: sentence1, sentence2, gold")->required();

  std::string gradcheck_config;
  CLI::App* gradcheck = app.add_subcommand("gradcheck", "finite-difference gradient check");
  gradcheck->add_option("--config", gradcheck_config, "key=value config")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    if (argc <= 1) std::cerr << app.help();
    return kUsageError;
  }

  try {
    if (*augment) return RunAugment(augment_flags);
    if (*stats) return RunStats(stats_flags);
    if (*train) return RunTrain(train_config, train_corpus, train_out, train_trace);
    if (*eval) return RunEval(eval_ckpt, eval_sts);
    if (*gradcheck) return RunGradcheck(gradcheck_config);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return kUsageError;
  } catch (const CliDataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDataError;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDataError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDataError;
  }
  return kUsageError;
}
