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

// Word lists consulted by the augmenters. All three load from small UTF-8
// text files, one entry per line; blank lines and lines starting with '#'
// are ignored.

#ifndef SENTAUG_LEXICON_H_
#define SENTAUG_LEXICON_H_

#include <map>
#include <set>
#include <string>
#include <vector>

namespace sentaug {

struct AuxPhrase {
  std::string base;           // "have to"
  std::string third_singular;  // "has to"

  bool operator==(const AuxPhrase&) const = default;
};

// Affirmative auxiliary phrases. Lines are "base<TAB>third-person-singular".
class AuxLexicon {
 public:
  explicit AuxLexicon(std::vector<AuxPhrase> entries);

  static AuxLexicon Default();
  static AuxLexicon FromText(const std::string& text);
  static AuxLexicon FromFile(const std::string& path);

  const std::vector<AuxPhrase>& entries() const { return entries_; }

 private:
  std::vector<AuxPhrase> entries_;
};

// Negative word forms, compared lower-cased.
class NegLexicon {
 public:
  explicit NegLexicon(std::set<std::string> entries);

  static NegLexicon Default();
  static NegLexicon FromText(const std::string& text);
  static NegLexicon FromFile(const std::string& path);

  bool Contains(const std::string& form) const;
  const std::set<std::string>& entries() const { return entries_; }

 private:
  std::set<std::string> entries_;
};

// Lines are "word<TAB>syn1,syn2,...". Lookup is lower-cased.
class SynonymLexicon {
 public:
  SynonymLexicon() = default;
  explicit SynonymLexicon(std::map<std::string, std::vector<std::string>> entries);

  static SynonymLexicon FromText(const std::string& text);
  static SynonymLexicon FromFile(const std::string& path);

  // nullptr when the word has no entry.
  const std::vector<std::string>* Find(const std::string& word) const;
  bool empty() const { return entries_.empty(); }

 private:
  std::map<std::string, std::vector<std::string>> entries_;
};

}  // namespace sentaug

#endif  // SENTAUG_LEXICON_H_
