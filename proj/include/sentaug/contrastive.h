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

// InfoNCE over in-batch negatives, its gradient through the toy encoder,
// batch construction with an augmentation proportion, and the training
// loop.

#ifndef SENTAUG_CONTRASTIVE_H_
#define SENTAUG_CONTRASTIVE_H_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sentaug/augmenter.h"
#include "sentaug/encoder.h"

namespace sentaug {

struct InfoNceResult {
  double mean = 0.0;
  std::vector<double> per_example;
};

// l_i = -log softmax_i over row i of sim / temperature, where sim[i][j] is
// the similarity of anchor i and positive j. Throws ConfigError when
// temperature <= 0.
InfoNceResult InfoNceFromSimilarities(
    const std::vector<std::vector<double>>& similarities, double temperature);

// Same loss with cosine similarities of (h_i, h_i+) pairs.
InfoNceResult InfoNceLoss(std::span<const std::pair<Vector, Vector>> pairs,
                          double temperature);

struct TrainingPair {
  std::vector<std::string> anchor;
  std::vector<std::string> positive;
};

// Member i of `indices` takes its augmented positive with probability
// `proportion`, drawn from a stream derived from (seed, i); otherwise it is
// paired with itself.
std::vector<TrainingPair> BuildBatch(std::span<const AugmentedPair> corpus,
                                     double proportion, uint64_t seed,
                                     std::span<const size_t> indices);

// One dropout mask per anchor and per positive.
struct BatchMasks {
  std::vector<DropoutMask> anchor;
  std::vector<DropoutMask> positive;

  static BatchMasks Identity(size_t n, int dim);
};

// Mean InfoNCE loss of `batch` under train-mode encoding. When `gradient`
// is non-null it receives dLoss/dparameter in ToyEncoder::parameters()
// layout.
double BatchLoss(const ToyEncoder& encoder, std::span<const TrainingPair> batch,
                 const BatchMasks& masks, double temperature,
                 std::vector<double>* gradient);

enum class Optimizer { kSgd, kAdam };

struct TrainConfig {
  double temperature = 0.05;
  int batch_size = 32;
  double dropout = 0.1;
  double proportion = 1.0;
  double learning_rate = 0.05;
  int epochs = 1;
  uint64_t seed = 0;
  Method method = Method::kPunctuationInsertion;
  RuleStrategy strategy = RuleStrategy::kCascade;
  double baseline_rate = 0.1;
  int dim = 64;
  Optimizer optimizer = Optimizer::kSgd;
  // Weight of the shared embedding direction at initialization; see
  // ToyEncoder.
  double init_anisotropy = 1.0;
  double gradcheck_tolerance = 1e-4;
  int gradcheck_samples = 20;

  // Throws ConfigError.
  void Validate() const;
};

// Flat "key = value" lines; '#' starts a comment. Unknown keys and bad
// values throw ParseError with the offending line (0 for constraints that
// span keys).
TrainConfig ParseTrainConfig(const std::string& text);
TrainConfig LoadTrainConfig(const std::string& path);

struct TrainResult {
  ToyEncoder encoder;
  ToyEncoder initial;
  std::vector<double> loss_trace;
  std::vector<AugmentedPair> pairs;
};

// Augments `corpus` with config.method, builds the vocabulary, and runs
// config.epochs passes of shuffled mini-batches. A trailing batch with
// fewer than two members is skipped. Reproducible from config.seed.
TrainResult Train(const std::vector<ParsedSentence>& corpus,
                  const TrainConfig& config,
                  const AugmentConfig& augment = AugmentConfig());

// "step,loss" header followed by one row per step.
std::string LossTraceCsv(std::span<const double> trace);

// Vocabulary over every anchor and positive token of `pairs`.
Vocabulary BuildVocabulary(std::span<const AugmentedPair> pairs);

using GradientFn = std::function<std::vector<double>(
    const ToyEncoder&, std::span<const TrainingPair>, double temperature)>;

// Backpropagated gradient with identity dropout masks.
std::vector<double> AnalyticGradient(const ToyEncoder& encoder,
                                     std::span<const TrainingPair> batch,
                                     double temperature);

struct GradientCheckOptions {
  double tolerance = 1e-4;
  double step = 1e-5;
  int samples = 20;
  uint64_t seed = 0;
};

struct GradientCheckEntry {
  size_t parameter = 0;
  double analytic = 0.0;
  double numeric = 0.0;
  double relative_error = 0.0;
};

struct GradientCheckReport {
  bool passed = true;
  double max_relative_error = 0.0;
  size_t worst_parameter = 0;
  std::vector<GradientCheckEntry> entries;

  std::string Describe() const;
};

// Compares `gradient` against central differences on `samples` distinct
// parameters drawn from those the batch touches (embedding rows of its
// tokens, projector, bias). Relative error is |a - n| / max(|a|, |n|, 1e-6).
// Dropout is disabled during the check.
GradientCheckReport CheckGradients(const ToyEncoder& encoder,
                                   std::span<const TrainingPair> batch,
                                   double temperature,
                                   const GradientCheckOptions& options = {},
                                   const GradientFn& gradient = AnalyticGradient);

}  // namespace sentaug

#endif  // SENTAUG_CONTRASTIVE_H_
