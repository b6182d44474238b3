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

// Comparison augmenters: cropping, word deletion, synonym replacement,
// masking, word repetition and random punctuation insertion.

#ifndef SENTAUG_BASELINES_H_
#define SENTAUG_BASELINES_H_

#include <memory>
#include <optional>
#include <string>

#include "sentaug/augmented_pair.h"
#include "sentaug/conllu.h"
#include "sentaug/lexicon.h"
#include "sentaug/random.h"

namespace sentaug {

enum class BaselineKind {
  kCrop,
  kWordDeletion,
  kSynonymReplacement,
  kMask,
  kWordRepetition,
  kRandomPunctInsertion,
};

Method BaselineMethod(BaselineKind kind);
// Throws ConfigError if `method` is not a baseline.
BaselineKind BaselineKindOf(Method method);

struct BaselineSpec {
  BaselineKind kind = BaselineKind::kWordRepetition;
  double rate = 0.1;
  std::shared_ptr<const SynonymLexicon> lexicon;

  // Throws ConfigError: rate must lie in (0,1] for crop and mask and in
  // [0,1] for word deletion; synonym replacement needs a lexicon.
  void Validate() const;
};

// The pool random punctuation insertion draws from: every ASCII
// punctuation character.
const std::vector<std::string>& PunctuationPool();

AugmentedPair ApplyBaseline(const ParsedSentence& sentence,
                            const BaselineSpec& spec, Rng& rng);

// Deterministic building blocks.

// Drops the last ceil(rate * n) of the n non-terminal tokens together with
// the terminal punctuation. At least one token is kept.
ParsedSentence CropSuffix(const ParsedSentence& sentence, double rate);

// Inserts a copy of the token at `offset` right after it.
ParsedSentence RepeatWord(const ParsedSentence& sentence, size_t offset);

// Inserts `mark` before offset `pos` (pos == size() appends).
ParsedSentence InsertPunctuation(const ParsedSentence& sentence, size_t pos,
                                 const std::string& mark);

}  // namespace sentaug

#endif  // SENTAUG_BASELINES_H_
