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

// Dependency-annotated sentences: CoNLL-U reading and writing, surface
// realization, subtree extents and the token-level edits the augmenters
// are built from.

#ifndef SENTAUG_CONLLU_H_
#define SENTAUG_CONLLU_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sentaug {

// One syntactic word. `index` is 1-based; `head` refers to another token's
// index, 0 for the root.
struct Token {
  int index = 0;
  std::string form;
  std::string lemma;
  std::string upos;
  std::string xpos = "_";
  std::string feats = "_";
  int head = 0;
  std::string dep_rel;
  std::string deps = "_";
  // MISC column with any SpaceAfter=No item removed; that item is carried
  // by `space_after` instead.
  std::string misc = "_";
  bool space_after = true;

  bool operator==(const Token&) const = default;
};

struct ParsedSentence {
  std::vector<Token> tokens;
  std::optional<std::string> sent_id;
  std::optional<std::string> raw_text;

  size_t size() const { return tokens.size(); }
  bool operator==(const ParsedSentence&) const = default;
};

// Half-open range of 0-based token offsets.
struct Span {
  size_t start = 0;
  size_t end = 0;

  size_t width() const { return end - start; }
  bool operator==(const Span&) const = default;
};

// Parses CoNLL-U text. Multiword-token ranges and empty nodes are skipped.
// Throws ParseError for malformed lines and StructureError for sentences
// that are not a single rooted tree.
std::vector<ParsedSentence> ParseConllu(std::string_view text);

// Inverse of ParseConllu: blocks separated by one blank line, each
// terminated by a newline.
std::string SerializeConllu(const std::vector<ParsedSentence>& sentences);

// Checks the tree invariants; throws StructureError naming the sentence.
void ValidateSentence(const ParsedSentence& sentence);

// Joins token forms into a surface string with English punctuation spacing.
std::string Detokenize(const ParsedSentence& sentence);

// Convex hull of the token at `offset` and all of its transitive dependents.
Span SubtreeSpan(const ParsedSentence& sentence, size_t offset);

// Universal part of a relation label: "nsubj:pass" -> "nsubj".
std::string_view BaseRelation(std::string_view dep_rel);

bool IsRootRelation(std::string_view dep_rel);

// True if every byte of `form` is ASCII punctuation or `form` is one of the
// typographic quotes and dashes.
bool IsPunctuationForm(std::string_view form);

bool IsPunctuation(const Token& token);

// 0-based offset of the root token.
size_t RootOffset(const ParsedSentence& sentence);

// 0-based offsets of the direct dependents of the token at `offset`.
std::vector<size_t> Children(const ParsedSentence& sentence, size_t offset);

std::vector<std::string> Forms(const ParsedSentence& sentence);

// A token for insertion; lemma equals the lower-cased form.
Token MakeToken(std::string form, std::string upos, std::string dep_rel,
                int head);

// Inserts `token` before offset `pos` (pos == size() appends), renumbering
// indices and heads. `token.head` is given as a 1-based index into the
// sentence *before* insertion (0 for root). The new token inherits the
// space_after of the token it follows.
void InsertToken(ParsedSentence& sentence, size_t pos, Token token);

// Removes the token at `offset`. Its dependents are reattached to its head;
// if it was the root, its first dependent becomes the new root. The
// preceding token inherits its space_after.
void EraseToken(ParsedSentence& sentence, size_t offset);

}  // namespace sentaug

#endif  // SENTAUG_CONLLU_H_
