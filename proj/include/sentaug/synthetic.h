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

// Seeded generator of small English sentences with Universal Dependencies
// parses. Used to build desk-scale training corpora and test fixtures.

#ifndef SENTAUG_SYNTHETIC_H_
#define SENTAUG_SYNTHETIC_H_

#include <cstdint>
#include <vector>

#include "sentaug/conllu.h"

namespace sentaug {

struct SyntheticOptions {
  // Every sentence ends with '.'.
  bool period_only = false;
  // No negative words, auxiliaries, copulas or verbless fragments: every
  // sentence has exactly one double-negation site (its root verb).
  bool single_negation_site = false;
};

std::vector<ParsedSentence> SyntheticCorpus(size_t count, uint64_t seed,
                                            const SyntheticOptions& options = {});

}  // namespace sentaug

#endif  // SENTAUG_SYNTHETIC_H_
