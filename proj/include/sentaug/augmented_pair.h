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

#ifndef SENTAUG_AUGMENTED_PAIR_H_
#define SENTAUG_AUGMENTED_PAIR_H_

#include <string>
#include <string_view>
#include <vector>

#include "sentaug/conllu.h"

namespace sentaug {

enum class Method {
  kPunctuationInsertion,
  kAffirmativeAuxiliary,
  kDoubleNegation,
  kIdentity,
  kCrop,
  kWordDeletion,
  kSynonymReplacement,
  kMask,
  kWordRepetition,
  kRandomPunctInsertion,
};

// Short names used on the command line and in JSON: pi, aa, dn, identity,
// crop, del, syn, mask, rep, randpunct.
std::string_view MethodName(Method method);

// Throws ConfigError for unknown names. "identity" is not accepted.
Method ParseMethod(std::string_view name);

bool IsBaseline(Method method);

// An anchor sentence and its positive. When no edit applied, `method` is
// kIdentity, `changed` is false and positive == anchor.
struct AugmentedPair {
  std::string anchor;
  std::string positive;
  Method method = Method::kIdentity;
  bool changed = false;
  // Token forms of both sides, consumed by the trainer. Not part of the
  // JSON-lines record.
  std::vector<std::string> anchor_tokens;
  std::vector<std::string> positive_tokens;
};

// Builds a pair from the original sentence and the edited one. A null
// `edited`, or one that realizes to the same string, yields an identity pair.
AugmentedPair MakePair(const ParsedSentence& original,
                       const ParsedSentence* edited, Method method);

// {"anchor":...,"positive":...,"method":...,"changed":...} without a
// trailing newline.
std::string ToJsonLine(const AugmentedPair& pair);

std::string ToJsonLines(const std::vector<AugmentedPair>& pairs);

}  // namespace sentaug

#endif  // SENTAUG_AUGMENTED_PAIR_H_
