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

#include "sentaug/lexicon.h"

#include <utility>

#include "sentaug/errors.h"
#include "sentaug/io.h"

namespace sentaug {
namespace {

// Calls fn(line_no, trimmed_line) for every non-blank, non-comment line.
template <typename Fn>
void ForEachEntry(const std::string& text, Fn fn) {
  const std::vector<std::string> lines = SplitLines(text);
  for (size_t i = 0; i < lines.size(); ++i) {
    const std::string line = Trim(lines[i]);
    if (line.empty() || line[0] == '#') continue;
    fn(static_cast<int>(i) + 1, line);
  }
}

template <typename Lexicon>
Lexicon LoadFile(const std::string& path) {
  const std::string text = ReadFile(path);
  try {
    return Lexicon::FromText(text);
  } catch (const ParseError& e) {
    throw DataError(path + ":" + std::to_string(e.line()) + ": " + e.message());
  } catch (const ConfigError& e) {
    throw DataError(path + ": " + e.what());
  }
}

}  // namespace

AuxLexicon::AuxLexicon(std::vector<AuxPhrase> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) throw ConfigError("auxiliary lexicon is empty");
  for (const AuxPhrase& e : entries_) {
    if (Trim(e.base).empty() || Trim(e.third_singular).empty()) {
      throw ConfigError("auxiliary lexicon entry lacks a form");
    }
  }
}

AuxLexicon AuxLexicon::Default() {
  return AuxLexicon({{"have to", "has to"},
                     {"can't but", "can't but"},
                     {"can't help to", "can't help to"}});
}

AuxLexicon AuxLexicon::FromText(const std::string& text) {
  std::vector<AuxPhrase> entries;
  ForEachEntry(text, [&](int line_no, const std::string& line) {
    const std::vector<std::string> cols = Split(line, '\t');
    if (cols.size() != 2 || Trim(cols[0]).empty() || Trim(cols[1]).empty()) {
      throw ParseError(line_no, "expected 'base<TAB>third-person-singular'");
    }
    entries.push_back({Trim(cols[0]), Trim(cols[1])});
  });
  return AuxLexicon(std::move(entries));
}

AuxLexicon AuxLexicon::FromFile(const std::string& path) {
  return LoadFile<AuxLexicon>(path);
}

NegLexicon::NegLexicon(std::set<std::string> entries) {
  for (const std::string& e : entries) entries_.insert(ToLower(e));
  if (entries_.empty()) throw ConfigError("negation lexicon is empty");
}

NegLexicon NegLexicon::Default() {
  return NegLexicon({"not", "n't", "no", "never"});
}

NegLexicon NegLexicon::FromText(const std::string& text) {
  std::set<std::string> entries;
  ForEachEntry(text,
               [&](int, const std::string& line) { entries.insert(line); });
  return NegLexicon(std::move(entries));
}

NegLexicon NegLexicon::FromFile(const std::string& path) {
  return LoadFile<NegLexicon>(path);
}

bool NegLexicon::Contains(const std::string& form) const {
  return entries_.count(ToLower(form)) > 0;
}

SynonymLexicon::SynonymLexicon(
    std::map<std::string, std::vector<std::string>> entries) {
  for (auto& [word, syns] : entries) {
    if (!syns.empty()) entries_[ToLower(word)] = std::move(syns);
  }
}

SynonymLexicon SynonymLexicon::FromText(const std::string& text) {
  std::map<std::string, std::vector<std::string>> entries;
  ForEachEntry(text, [&](int line_no, const std::string& line) {
    const std::vector<std::string> cols = Split(line, '\t');
    if (cols.size() != 2 || Trim(cols[0]).empty()) {
      throw ParseError(line_no, "expected 'word<TAB>syn1,syn2,...'");
    }
    std::vector<std::string>& syns = entries[ToLower(Trim(cols[0]))];
    for (const std::string& s : Split(cols[1], ',')) {
      if (!Trim(s).empty()) syns.push_back(Trim(s));
    }
    if (syns.empty()) throw ParseError(line_no, "entry has no synonyms");
  });
  return SynonymLexicon(std::move(entries));
}

SynonymLexicon SynonymLexicon::FromFile(const std::string& path) {
  return LoadFile<SynonymLexicon>(path);
}

const std::vector<std::string>* SynonymLexicon::Find(
    const std::string& word) const {
  auto it = entries_.find(ToLower(word));
  return it == entries_.end() ? nullptr : &it->second;
}

}  // namespace sentaug
