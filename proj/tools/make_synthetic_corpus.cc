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

// Writes a seeded synthetic CoNLL-U corpus to standard output.
//
//   make_synthetic_corpus --count 200 --seed 7 [--period-only]
//       [--single-site] > corpus.conllu

#include <iostream>

#include "CLI11.hpp"
#include "sentaug/synthetic.h"

int main(int argc, char** argv) {
  CLI::App app{"Generate a synthetic parsed corpus"};
  size_t count = 200;
  uint64_t seed = 0;
  sentaug::SyntheticOptions options;
  app.add_option("--count", count, "number of sentences")->capture_default_str();
  app.add_option("--seed", seed, "random seed")->capture_default_str();
  app.add_flag("--period-only", options.period_only, "end every sentence with '.'");
  app.add_flag("--single-site", options.single_negation_site,
               "one double-negation site per sentence");
  CLI11_PARSE(app, argc, argv);
  std::cout << sentaug::SerializeConllu(sentaug::SyntheticCorpus(count, seed, options));
  return 0;
}
