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

#include "sentaug/augmented_pair.h"

#include <array>
#include <utility>

#include "json.hpp"
#include "sentaug/errors.h"

namespace sentaug {
namespace {

constexpr std::array<std::pair<Method, std::string_view>, 10> kNames = {{
    {Method::kPunctuationInsertion, "pi"},
    {Method::kAffirmativeAuxiliary, "aa"},
    {Method::kDoubleNegation, "dn"},
    {Method::kIdentity, "identity"},
    {Method::kCrop, "crop"},
    {Method::kWordDeletion, "del"},
    {Method::kSynonymReplacement, "syn"},
    {Method::kMask, "mask"},
    {Method::kWordRepetition, "rep"},
    {Method::kRandomPunctInsertion, "randpunct"},
}};

}  // namespace

std::string_view MethodName(Method method) {
  for (const auto& [m, name] : kNames) {
    if (m == method) return name;
  }
  return "?";
}

Method ParseMethod(std::string_view name) {
  for (const auto& [m, n] : kNames) {
    if (n == name && m != Method::kIdentity) return m;
  }
  throw ConfigError("unknown augmentation method '" + std::string(name) +
                    "' (expected pi|aa|dn|crop|del|syn|mask|rep|randpunct)");
}

bool IsBaseline(Method method) {
  switch (method) {
    case Method::kPunctuationInsertion:
    case Method::kAffirmativeAuxiliary:
    case Method::kDoubleNegation:
    case Method::kIdentity:
      return false;
    default:
      return true;
  }
}

AugmentedPair MakePair(const ParsedSentence& original,
                       const ParsedSentence* edited, Method method) {
  AugmentedPair pair;
  pair.anchor = Detokenize(original);
  pair.anchor_tokens = Forms(original);
  if (edited != nullptr) {
    pair.positive = Detokenize(*edited);
    pair.positive_tokens = Forms(*edited);
  }
  if (edited == nullptr || pair.positive == pair.anchor) {
    pair.positive = pair.anchor;
    pair.positive_tokens = pair.anchor_tokens;
    pair.method = Method::kIdentity;
    pair.changed = false;
  } else {
    pair.method = method;
    pair.changed = true;
  }
  return pair;
}

std::string ToJsonLine(const AugmentedPair& pair) {
  nlohmann::ordered_json j;
  j["anchor"] = pair.anchor;
  j["positive"] = pair.positive;
  j["method"] = std::string(MethodName(pair.method));
  j["changed"] = pair.changed;
  return j.dump();
}

std::string ToJsonLines(const std::vector<AugmentedPair>& pairs) {
  std::string out;
  for (const AugmentedPair& p : pairs) {
    out += ToJsonLine(p);
    out += '\n';
  }
  return out;
}

}  // namespace sentaug
