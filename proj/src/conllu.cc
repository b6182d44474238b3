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

#include "sentaug/conllu.h"

#include <algorithm>
#include <charconv>
#include <string>

#include "sentaug/errors.h"
#include "sentaug/io.h"

namespace sentaug {
namespace {

constexpr int kColumns = 10;
constexpr std::string_view kSpaceAfterNo = "SpaceAfter=No";

bool ParseInt(std::string_view s, int* value) {
  if (s.empty()) return false;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, *value);
  return ec == std::errc() && ptr == end;
}

// Removes SpaceAfter=No from a MISC value. Returns true if it was present.
bool StripSpaceAfter(std::string* misc) {
  if (*misc == "_") return false;
  bool found = false;
  std::string kept;
  for (const std::string& item : Split(*misc, '|')) {
    if (item == kSpaceAfterNo) {
      found = true;
      continue;
    }
    if (!kept.empty()) kept += '|';
    kept += item;
  }
  *misc = kept.empty() ? "_" : kept;
  return found;
}

std::string ComposeMisc(const Token& token) {
  if (token.space_after) return token.misc;
  if (token.misc == "_" || token.misc.empty()) return std::string(kSpaceAfterNo);
  return token.misc + "|" + std::string(kSpaceAfterNo);
}

std::string DescribeSentence(const ParsedSentence& sentence, int ordinal) {
  if (sentence.sent_id) return *sentence.sent_id;
  return "#" + std::to_string(ordinal);
}

void Validate(const ParsedSentence& sentence, const std::string& name) {
  const int n = static_cast<int>(sentence.tokens.size());
  if (n == 0) throw StructureError(name, "sentence has no tokens");
  int roots = 0;
  for (int i = 0; i < n; ++i) {
    const Token& t = sentence.tokens[i];
    if (t.index != i + 1) {
      throw StructureError(name, "token " + std::to_string(i + 1) +
                                     " has index " + std::to_string(t.index));
    }
    if (t.head < 0 || t.head > n) {
      throw StructureError(name, "token " + std::to_string(t.index) +
                                     " has head " + std::to_string(t.head) +
                                     " outside the sentence");
    }
    if (t.head == t.index) {
      throw StructureError(name,
                           "token " + std::to_string(t.index) + " heads itself");
    }
    const bool root_label = IsRootRelation(t.dep_rel);
    if (t.head == 0) {
      ++roots;
      if (!root_label) {
        throw StructureError(name, "token " + std::to_string(t.index) +
                                       " has head 0 but relation '" +
                                       t.dep_rel + "'");
      }
    } else if (root_label) {
      throw StructureError(name, "token " + std::to_string(t.index) +
                                     " is labelled root but has head " +
                                     std::to_string(t.head));
    }
  }
  if (roots != 1) {
    throw StructureError(name, "expected exactly one root, found " +
                                   std::to_string(roots));
  }
  // With one root and every head in range, the graph is a tree iff every
  // token reaches the root within n steps.
  for (int i = 0; i < n; ++i) {
    int cur = i + 1;
    int steps = 0;
    while (cur != 0) {
      cur = sentence.tokens[cur - 1].head;
      if (++steps > n) {
        throw StructureError(name, "cycle through token " +
                                       std::to_string(i + 1));
      }
    }
  }
}

bool NoSpaceBefore(std::string_view form) {
  static constexpr std::string_view kForms[] = {",", ".", "!", "?", ";", ":",
                                                "”", ")", "]", "}"};
  return std::find(std::begin(kForms), std::end(kForms), form) !=
         std::end(kForms);
}

bool NoSpaceAfter(std::string_view form) {
  static constexpr std::string_view kForms[] = {"“", "(", "[", "{"};
  return std::find(std::begin(kForms), std::end(kForms), form) !=
         std::end(kForms);
}

}  // namespace

std::string_view BaseRelation(std::string_view dep_rel) {
  const size_t colon = dep_rel.find(':');
  return colon == std::string_view::npos ? dep_rel : dep_rel.substr(0, colon);
}

bool IsRootRelation(std::string_view dep_rel) {
  return dep_rel.size() == 4 && ToLower(std::string(dep_rel)) == "root";
}

bool IsPunctuationForm(std::string_view form) {
  static constexpr std::string_view kTypographic[] = {
      "“", "”", "‘", "’", "–", "—", "…"};
  if (form.empty()) return false;
  if (std::find(std::begin(kTypographic), std::end(kTypographic), form) !=
      std::end(kTypographic)) {
    return true;
  }
  return std::all_of(form.begin(), form.end(), [](char c) {
    const auto u = static_cast<unsigned char>(c);
    return u < 0x80 && std::ispunct(u);
  });
}

bool IsPunctuation(const Token& token) {
  return token.upos == "PUNCT" || IsPunctuationForm(token.form);
}

void ValidateSentence(const ParsedSentence& sentence) {
  Validate(sentence, DescribeSentence(sentence, 1));
}

std::vector<ParsedSentence> ParseConllu(std::string_view text) {
  std::vector<ParsedSentence> out;
  ParsedSentence current;
  bool open = false;
  int block_start_line = 0;
  // Tokens that belong to a multiword range other than its last member are
  // written without a following space.
  int mwt_last = 0;
  bool mwt_space_after = true;

  auto finish = [&]() {
    if (!open) return;
    if (!current.tokens.empty()) {
      std::string name = current.sent_id
                             ? *current.sent_id
                             : "#" + std::to_string(out.size() + 1) +
                                   " (line " + std::to_string(block_start_line) +
                                   ")";
      Validate(current, name);
      out.push_back(std::move(current));
    }
    current = ParsedSentence();
    open = false;
    mwt_last = 0;
  };

  const std::vector<std::string> lines = SplitLines(std::string(text));
  for (size_t li = 0; li < lines.size(); ++li) {
    const int line_no = static_cast<int>(li) + 1;
    const std::string& line = lines[li];
    if (Trim(line).empty()) {
      finish();
      continue;
    }
    if (!open) {
      open = true;
      block_start_line = line_no;
    }
    if (line[0] == '#') {
      const std::string body = Trim(line.substr(1));
      auto value_of = [&](std::string_view key) -> std::optional<std::string> {
        if (body.rfind(key, 0) != 0) return std::nullopt;
        std::string rest = Trim(body.substr(key.size()));
        if (rest.empty() || rest[0] != '=') return std::nullopt;
        return Trim(rest.substr(1));
      };
      if (auto id = value_of("sent_id")) current.sent_id = *id;
      if (auto raw = value_of("text")) current.raw_text = *raw;
      continue;
    }
    std::vector<std::string> cols = Split(line, '\t');
    if (static_cast<int>(cols.size()) != kColumns) {
      throw ParseError(line_no, "expected 10 tab-separated columns, found " +
                                    std::to_string(cols.size()));
    }
    const std::string& id = cols[0];
    if (id.find('.') != std::string::npos) continue;  // empty node
    if (const size_t dash = id.find('-'); dash != std::string::npos) {
      int first = 0;
      int last = 0;
      if (!ParseInt(std::string_view(id).substr(0, dash), &first) ||
          !ParseInt(std::string_view(id).substr(dash + 1), &last) ||
          last < first) {
        throw ParseError(line_no, "bad multiword range '" + id + "'");
      }
      std::string misc = cols[9];
      mwt_space_after = !StripSpaceAfter(&misc);
      mwt_last = last;
      continue;
    }
    Token token;
    if (!ParseInt(id, &token.index)) {
      throw ParseError(line_no, "non-integer token id '" + id + "'");
    }
    if (!ParseInt(cols[6], &token.head)) {
      throw ParseError(line_no, "non-integer head '" + cols[6] + "'");
    }
    token.form = cols[1];
    token.lemma = cols[2];
    token.upos = cols[3];
    token.xpos = cols[4];
    token.feats = cols[5];
    token.dep_rel = cols[7];
    token.deps = cols[8];
    token.misc = cols[9];
    token.space_after = !StripSpaceAfter(&token.misc);
    if (token.index < mwt_last) {
      token.space_after = false;
    } else if (token.index == mwt_last) {
      token.space_after = token.space_after && mwt_space_after;
      mwt_last = 0;
    }
    if (token.index != static_cast<int>(current.tokens.size()) + 1) {
      throw ParseError(line_no, "token id " + std::to_string(token.index) +
                                    " out of sequence");
    }
    current.tokens.push_back(std::move(token));
  }
  finish();
  return out;
}

std::string SerializeConllu(const std::vector<ParsedSentence>& sentences) {
  std::string out;
  for (size_t s = 0; s < sentences.size(); ++s) {
    if (s > 0) out += '\n';
    const ParsedSentence& sentence = sentences[s];
    if (sentence.sent_id) out += "# sent_id = " + *sentence.sent_id + "\n";
    if (sentence.raw_text) out += "# text = " + *sentence.raw_text + "\n";
    for (const Token& t : sentence.tokens) {
      out += std::to_string(t.index);
      for (const std::string* field :
           {&t.form, &t.lemma, &t.upos, &t.xpos, &t.feats}) {
        out += '\t';
        out += *field;
      }
      out += '\t' + std::to_string(t.head);
      out += '\t' + t.dep_rel;
      out += '\t' + t.deps;
      out += '\t' + ComposeMisc(t);
      out += '\n';
    }
  }
  return out;
}

std::string Detokenize(const ParsedSentence& sentence) {
  std::string out;
  // Straight double quotes alternate between opening and closing.
  bool straight_quote_open = false;
  bool glue_next = true;
  for (const Token& t : sentence.tokens) {
    bool no_space_before = NoSpaceBefore(t.form);
    bool no_space_after = NoSpaceAfter(t.form);
    if (t.form == "\"") {
      if (straight_quote_open) {
        no_space_before = true;
      } else {
        no_space_after = true;
      }
      straight_quote_open = !straight_quote_open;
    }
    if (!out.empty() && !glue_next && !no_space_before) out += ' ';
    out += t.form;
    glue_next = no_space_after || !t.space_after;
  }
  return out;
}

Span SubtreeSpan(const ParsedSentence& sentence, size_t offset) {
  const int target = static_cast<int>(offset) + 1;
  const int n = static_cast<int>(sentence.tokens.size());
  Span span{offset, offset + 1};
  for (int i = 0; i < n; ++i) {
    int cur = i + 1;
    for (int steps = 0; cur != 0 && cur != target && steps <= n; ++steps) {
      cur = sentence.tokens[cur - 1].head;
    }
    if (cur == target) {
      span.start = std::min(span.start, static_cast<size_t>(i));
      span.end = std::max(span.end, static_cast<size_t>(i) + 1);
    }
  }
  return span;
}

size_t RootOffset(const ParsedSentence& sentence) {
  for (size_t i = 0; i < sentence.tokens.size(); ++i) {
    if (sentence.tokens[i].head == 0) return i;
  }
  throw StructureError(sentence.sent_id.value_or("?"), "no root token");
}

std::vector<size_t> Children(const ParsedSentence& sentence, size_t offset) {
  std::vector<size_t> out;
  const int index = static_cast<int>(offset) + 1;
  for (size_t i = 0; i < sentence.tokens.size(); ++i) {
    if (sentence.tokens[i].head == index) out.push_back(i);
  }
  return out;
}

std::vector<std::string> Forms(const ParsedSentence& sentence) {
  std::vector<std::string> forms;
  forms.reserve(sentence.tokens.size());
  for (const Token& t : sentence.tokens) forms.push_back(t.form);
  return forms;
}

Token MakeToken(std::string form, std::string upos, std::string dep_rel,
                int head) {
  Token t;
  t.lemma = ToLower(form);
  t.form = std::move(form);
  t.upos = std::move(upos);
  t.dep_rel = std::move(dep_rel);
  t.head = head;
  return t;
}

void InsertToken(ParsedSentence& sentence, size_t pos, Token token) {
  const int p = static_cast<int>(pos);
  auto shift = [p](int i) { return i > p ? i + 1 : i; };
  for (Token& t : sentence.tokens) {
    t.index = shift(t.index);
    t.head = shift(t.head);
  }
  token.head = shift(token.head);
  token.index = p + 1;
  if (pos > 0) {
    Token& prev = sentence.tokens[pos - 1];
    token.space_after = prev.space_after;
    prev.space_after = true;
  }
  sentence.tokens.insert(sentence.tokens.begin() + static_cast<long>(pos),
                         std::move(token));
}

void EraseToken(ParsedSentence& sentence, size_t offset) {
  const Token erased = sentence.tokens[offset];
  const int index = erased.index;
  int new_head = erased.head;
  if (erased.head == 0) {
    const std::vector<size_t> kids = Children(sentence, offset);
    if (!kids.empty()) {
      Token& promoted = sentence.tokens[kids.front()];
      promoted.head = 0;
      promoted.dep_rel = erased.dep_rel;
      new_head = promoted.index;
    }
  }
  for (Token& t : sentence.tokens) {
    if (t.head == index) t.head = new_head;
  }
  if (offset > 0) sentence.tokens[offset - 1].space_after = erased.space_after;
  sentence.tokens.erase(sentence.tokens.begin() + static_cast<long>(offset));
  for (Token& t : sentence.tokens) {
    if (t.index > index) --t.index;
    if (t.head > index) --t.head;
  }
}

}  // namespace sentaug
