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

#include "sentaug/eval.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numeric>

#include "json.hpp"
#include "sentaug/errors.h"
#include "sentaug/io.h"

namespace sentaug {

std::vector<double> AverageRanks(std::span<const double> values) {
  const size_t n = values.size();
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n);
  for (size_t i = 0; i < n;) {
    size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    // Positions i..j (0-based) share rank mean(i+1..j+1).
    const double rank = (static_cast<double>(i + j) + 2.0) / 2.0;
    for (size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

double Pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw ContractError("lists differ in length");
  const size_t n = xs.size();
  if (n < 2) throw ContractError("correlation needs at least two values");
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw UndefinedValueError("correlation of a constant list is undefined");
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double Spearman(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw ContractError("lists differ in length");
  if (xs.size() < 2) throw ContractError("correlation needs at least two values");
  const std::vector<double> rx = AverageRanks(xs);
  const std::vector<double> ry = AverageRanks(ys);
  return Pearson(rx, ry);
}

std::vector<std::string> Tokenize(const std::string& text) {
  std::vector<std::string> tokens;
  auto is_punct = [](char c) {
    const auto u = static_cast<unsigned char>(c);
    return u < 0x80 && std::ispunct(u);
  };
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j == i) break;
    std::string word = text.substr(i, j - i);
    i = j;
    size_t b = 0;
    size_t e = word.size();
    while (b < e && is_punct(word[b])) tokens.emplace_back(1, word[b++]);
    std::vector<std::string> tail;
    while (e > b && is_punct(word[e - 1])) tail.emplace_back(1, word[--e]);
    if (e > b) tokens.push_back(word.substr(b, e - b));
    tokens.insert(tokens.end(), tail.rbegin(), tail.rend());
  }
  return tokens;
}

std::vector<StsExample> ParseSts(const std::string& text) {
  std::vector<StsExample> out;
  const std::vector<std::string> lines = SplitLines(text);
  for (size_t li = 0; li < lines.size(); ++li) {
    const int line_no = static_cast<int>(li) + 1;
    if (Trim(lines[li]).empty()) continue;
    const std::vector<std::string> cols = Split(lines[li], '\t');
    if (cols.size() != 3) {
      throw ParseError(line_no, "expected 3 tab-separated columns, found " +
                                    std::to_string(cols.size()));
    }
    StsExample ex;
    ex.sentence1 = Tokenize(cols[0]);
    ex.sentence2 = Tokenize(cols[1]);
    if (ex.sentence1.empty() || ex.sentence2.empty()) {
      throw ParseError(line_no, "empty sentence");
    }
    const std::string score = Trim(cols[2]);
    const char* end = score.data() + score.size();
    auto [ptr, ec] = std::from_chars(score.data(), end, ex.gold);
    if (ec != std::errc() || ptr != end || !std::isfinite(ex.gold)) {
      throw ParseError(line_no, "bad gold score '" + score + "'");
    }
    out.push_back(std::move(ex));
  }
  return out;
}

std::vector<StsExample> LoadSts(const std::string& path) {
  const std::string text = ReadFile(path);
  try {
    return ParseSts(text);
  } catch (const ParseError& e) {
    throw DataError(path + ":" + std::to_string(e.line()) + ": " + e.message());
  }
}

double EvaluateSts(const ToyEncoder& encoder,
                   std::span<const StsExample> examples) {
  if (examples.empty()) throw ContractError("no STS examples");
  std::vector<double> predicted, gold;
  predicted.reserve(examples.size());
  gold.reserve(examples.size());
  for (const StsExample& ex : examples) {
    predicted.push_back(CosineSimilarity(encoder.EncodeEval(ex.sentence1),
                                         encoder.EncodeEval(ex.sentence2)));
    gold.push_back(ex.gold);
  }
  return Spearman(predicted, gold);
}

std::string CoverageReport::ToJson() const {
  nlohmann::ordered_json j;
  j["method"] = std::string(MethodName(method));
  j["total"] = total;
  j["changed"] = changed;
  j["percent"] = percent;
  return j.dump();
}

CoverageReport CoverageStats(const std::vector<ParsedSentence>& sentences,
                             Method method, uint64_t seed,
                             const AugmentConfig& config) {
  if (sentences.empty()) throw ContractError("coverage of an empty corpus");
  const std::vector<AugmentedPair> pairs =
      AugmentCorpus(sentences, method, seed, config);
  CoverageReport report;
  report.method = method;
  report.total = pairs.size();
  report.changed = static_cast<size_t>(std::count_if(
      pairs.begin(), pairs.end(), [](const AugmentedPair& p) { return p.changed; }));
  report.percent = 100.0 * static_cast<double>(report.changed) /
                   static_cast<double>(report.total);
  return report;
}

}  // namespace sentaug
