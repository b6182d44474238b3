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

#include "sentaug/baselines.h"

#include <algorithm>
#include <cmath>

#include "sentaug/errors.h"

namespace sentaug {
namespace {

std::vector<size_t> ContentOffsets(const ParsedSentence& s) {
  std::vector<size_t> out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (!IsPunctuation(s.tokens[i])) out.push_back(i);
  }
  return out;
}

void EraseOffsets(ParsedSentence& s, std::vector<size_t> offsets) {
  std::sort(offsets.rbegin(), offsets.rend());
  for (size_t i : offsets) EraseToken(s, i);
}

}  // namespace

Method BaselineMethod(BaselineKind kind) {
  switch (kind) {
    case BaselineKind::kCrop:
      return Method::kCrop;
    case BaselineKind::kWordDeletion:
      return Method::kWordDeletion;
    case BaselineKind::kSynonymReplacement:
      return Method::kSynonymReplacement;
    case BaselineKind::kMask:
      return Method::kMask;
    case BaselineKind::kWordRepetition:
      return Method::kWordRepetition;
    case BaselineKind::kRandomPunctInsertion:
      return Method::kRandomPunctInsertion;
  }
  return Method::kIdentity;
}

BaselineKind BaselineKindOf(Method method) {
  switch (method) {
    case Method::kCrop:
      return BaselineKind::kCrop;
    case Method::kWordDeletion:
      return BaselineKind::kWordDeletion;
    case Method::kSynonymReplacement:
      return BaselineKind::kSynonymReplacement;
    case Method::kMask:
      return BaselineKind::kMask;
    case Method::kWordRepetition:
      return BaselineKind::kWordRepetition;
    case Method::kRandomPunctInsertion:
      return BaselineKind::kRandomPunctInsertion;
    default:
      throw ConfigError("'" + std::string(MethodName(method)) +
                        "' is not a baseline method");
  }
}

void BaselineSpec::Validate() const {
  switch (kind) {
    case BaselineKind::kCrop:
    case BaselineKind::kMask:
      if (!(rate > 0.0 && rate <= 1.0)) {
        throw ConfigError("rate must lie in (0, 1] for " +
                          std::string(MethodName(BaselineMethod(kind))));
      }
      break;
    case BaselineKind::kWordDeletion:
      if (!(rate >= 0.0 && rate <= 1.0)) {
        throw ConfigError("rate must lie in [0, 1] for del");
      }
      break;
    case BaselineKind::kSynonymReplacement:
      if (!lexicon) throw ConfigError("syn requires a synonym lexicon");
      break;
    case BaselineKind::kWordRepetition:
    case BaselineKind::kRandomPunctInsertion:
      break;
  }
}

const std::vector<std::string>& PunctuationPool() {
  static const std::vector<std::string> kPool = [] {
    std::vector<std::string> pool;
    for (int c = 0x21; c < 0x7f; ++c) {
      if (std::ispunct(c)) pool.emplace_back(1, static_cast<char>(c));
    }
    return pool;
  }();
  return kPool;
}

ParsedSentence CropSuffix(const ParsedSentence& sentence, double rate) {
  size_t n = sentence.size();
  if (n > 0 && IsPunctuation(sentence.tokens.back())) --n;
  const auto removed =
      static_cast<size_t>(std::ceil(rate * static_cast<double>(n) - 1e-9));
  const size_t keep = std::max<size_t>(1, n - std::min(n, removed));
  ParsedSentence out = sentence;
  while (out.size() > keep) EraseToken(out, out.size() - 1);
  return out;
}

ParsedSentence RepeatWord(const ParsedSentence& sentence, size_t offset) {
  ParsedSentence out = sentence;
  Token copy = sentence.tokens[offset];
  copy.head = copy.index;
  copy.dep_rel = "reparandum";
  InsertToken(out, offset + 1, std::move(copy));
  return out;
}

ParsedSentence InsertPunctuation(const ParsedSentence& sentence, size_t pos,
                                 const std::string& mark) {
  ParsedSentence out = sentence;
  const int root = static_cast<int>(RootOffset(sentence)) + 1;
  InsertToken(out, pos, MakeToken(mark, "PUNCT", "punct", root));
  return out;
}

AugmentedPair ApplyBaseline(const ParsedSentence& sentence,
                            const BaselineSpec& spec, Rng& rng) {
  spec.Validate();
  const Method method = BaselineMethod(spec.kind);
  switch (spec.kind) {
    case BaselineKind::kCrop: {
      const ParsedSentence out = CropSuffix(sentence, spec.rate);
      return MakePair(sentence, &out, method);
    }
    case BaselineKind::kWordDeletion: {
      const std::vector<size_t> content = ContentOffsets(sentence);
      std::vector<size_t> doomed;
      for (size_t i : content) {
        if (Bernoulli(rng, spec.rate)) doomed.push_back(i);
      }
      if (!doomed.empty() && doomed.size() == content.size()) {
        doomed.erase(doomed.begin() +
                     static_cast<long>(UniformIndex(rng, doomed.size())));
      }
      ParsedSentence out = sentence;
      EraseOffsets(out, doomed);
      return MakePair(sentence, &out, method);
    }
    case BaselineKind::kSynonymReplacement: {
      std::vector<size_t> candidates;
      for (size_t i = 0; i < sentence.size(); ++i) {
        if (spec.lexicon->Find(sentence.tokens[i].form)) candidates.push_back(i);
      }
      if (candidates.empty()) return MakePair(sentence, nullptr, method);
      const size_t i = candidates[UniformIndex(rng, candidates.size())];
      const std::vector<std::string>& syns =
          *spec.lexicon->Find(sentence.tokens[i].form);
      ParsedSentence out = sentence;
      out.tokens[i].form = syns[UniformIndex(rng, syns.size())];
      out.tokens[i].lemma = out.tokens[i].form;
      return MakePair(sentence, &out, method);
    }
    case BaselineKind::kMask: {
      ParsedSentence out = sentence;
      for (size_t i : ContentOffsets(sentence)) {
        if (Bernoulli(rng, spec.rate)) {
          out.tokens[i].form = "[MASK]";
          out.tokens[i].lemma = "[MASK]";
        }
      }
      return MakePair(sentence, &out, method);
    }
    case BaselineKind::kWordRepetition: {
      const std::vector<size_t> content = ContentOffsets(sentence);
      if (content.empty()) return MakePair(sentence, nullptr, method);
      const ParsedSentence out =
          RepeatWord(sentence, content[UniformIndex(rng, content.size())]);
      return MakePair(sentence, &out, method);
    }
    case BaselineKind::kRandomPunctInsertion: {
      const std::vector<std::string>& pool = PunctuationPool();
      const std::string& mark = pool[UniformIndex(rng, pool.size())];
      const size_t pos = UniformIndex(rng, sentence.size() + 1);
      const ParsedSentence out = InsertPunctuation(sentence, pos, mark);
      return MakePair(sentence, &out, method);
    }
  }
  return MakePair(sentence, nullptr, method);
}

}  // namespace sentaug
