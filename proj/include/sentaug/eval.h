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

// Semantic textual similarity evaluation and augmentation coverage.

#ifndef SENTAUG_EVAL_H_
#define SENTAUG_EVAL_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sentaug/augmenter.h"
#include "sentaug/encoder.h"

namespace sentaug {

struct StsExample {
  std::vector<std::string> sentence1;
  std::vector<std::string> sentence2;
  double gold = 0.0;
};

// Ranks starting at 1; tied values share the mean of their positions.
std::vector<double> AverageRanks(std::span<const double> values);

// Pearson correlation. Throws ContractError on length mismatch or n < 2,
// UndefinedValueError if either input is constant.
double Pearson(std::span<const double> xs, std::span<const double> ys);

// Pearson correlation of the average ranks.
double Spearman(std::span<const double> xs, std::span<const double> ys);

// Splits on whitespace and peels leading/trailing ASCII punctuation into
// separate tokens ("world!" -> "world", "!").
std::vector<std::string> Tokenize(const std::string& text);

// Three tab-separated columns: sentence1, sentence2, gold score. Throws
// ParseError with the line number on malformed rows.
std::vector<StsExample> ParseSts(const std::string& text);
std::vector<StsExample> LoadSts(const std::string& path);

// Cosine of eval-mode embeddings against gold scores, as a Spearman
// correlation.
double EvaluateSts(const ToyEncoder& encoder,
                   std::span<const StsExample> examples);

struct CoverageReport {
  Method method = Method::kPunctuationInsertion;
  size_t total = 0;
  size_t changed = 0;
  double percent = 0.0;

  std::string ToJson() const;
};

// Fraction of sentences an augmenter changes. Throws ContractError on an
// empty corpus.
CoverageReport CoverageStats(const std::vector<ParsedSentence>& sentences,
                             Method method, uint64_t seed,
                             const AugmentConfig& config);

}  // namespace sentaug

#endif  // SENTAUG_EVAL_H_
