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

// Rule-based positive generation: punctuation insertion, affirmative
// auxiliary and double negation. Each operates on a dependency parse and
// falls back to the unchanged sentence when no rule matches.

#ifndef SENTAUG_AUGMENTER_H_
#define SENTAUG_AUGMENTER_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "sentaug/augmented_pair.h"
#include "sentaug/baselines.h"
#include "sentaug/conllu.h"
#include "sentaug/lexicon.h"
#include "sentaug/random.h"

namespace sentaug {

// How punctuation insertion picks among applicable rules: the first in
// rule order, or one uniformly at random.
enum class RuleStrategy { kCascade, kUniformRandom };

RuleStrategy ParseRuleStrategy(std::string_view name);  // cascade|random

enum class PiRule {
  kSubordinateClause,     // ',' at the clause boundary
  kNounSubject,           // ',' after, or quotes around, a noun subject
  kInteriorPunctuation,   // duplicate a non-final punctuation mark
  kTerminal,              // end the sentence with '!'
};

enum class SubjectMark { kComma, kQuotes };

inline constexpr PiRule kPiRules[] = {
    PiRule::kSubordinateClause, PiRule::kNounSubject,
    PiRule::kInteriorPunctuation, PiRule::kTerminal};

bool PiRuleApplies(const ParsedSentence& sentence, PiRule rule);

// Applies one rule; nullopt if it does not apply. `mark` only matters for
// kNounSubject.
std::optional<ParsedSentence> ApplyPiRule(const ParsedSentence& sentence,
                                          PiRule rule,
                                          SubjectMark mark = SubjectMark::kComma);

AugmentedPair PunctuationInsertion(const ParsedSentence& sentence, Rng& rng,
                                   RuleStrategy strategy);

// Replaces the first be-verb, or the root verb, with `phrase` + "be" or
// `phrase` + lemma, removing a modal that governs the same predicate.
// nullopt when the sentence has neither.
std::optional<ParsedSentence> ApplyAffirmativeAuxiliary(
    const ParsedSentence& sentence, const AuxPhrase& phrase);

AugmentedPair AffirmativeAuxiliary(const ParsedSentence& sentence, Rng& rng,
                                   const AuxLexicon& lexicon);

struct NegationOutcome {
  ParsedSentence sentence;  // original when edits < 2
  int edits = 0;            // negation edits attempted before the guard
  int deletions = 0;
  int insertions = 0;
};

NegationOutcome ApplyDoubleNegation(const ParsedSentence& sentence,
                                    const NegLexicon& lexicon);

AugmentedPair DoubleNegation(const ParsedSentence& sentence,
                             const NegLexicon& lexicon);

struct AugmentConfig {
  RuleStrategy strategy = RuleStrategy::kCascade;
  AuxLexicon aux = AuxLexicon::Default();
  NegLexicon neg = NegLexicon::Default();
  // Used when the method is one of the baselines; `kind` is overwritten
  // from the method.
  BaselineSpec baseline;
  // Worker threads; 0 means one per hardware thread.
  int threads = 0;
};

// Augments one sentence with randomness drawn from `rng`.
AugmentedPair AugmentSentence(const ParsedSentence& sentence, Method method,
                              Rng& rng, const AugmentConfig& config);

// One pair per sentence, in order. Sentence i draws from a stream derived
// from (seed, i), so the output does not depend on the thread count.
std::vector<AugmentedPair> AugmentCorpus(
    const std::vector<ParsedSentence>& sentences, Method method, uint64_t seed,
    const AugmentConfig& config);

}  // namespace sentaug

#endif  // SENTAUG_AUGMENTER_H_
