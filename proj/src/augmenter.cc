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

#include "sentaug/augmenter.h"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <set>
#include <thread>

#include "sentaug/errors.h"
#include "sentaug/io.h"

namespace sentaug {
namespace {

bool IsClauseRelation(std::string_view dep_rel) {
  const std::string_view base = BaseRelation(dep_rel);
  return base == "advcl" || base == "ccomp" || base == "acl" ||
         base == "csubj";
}

bool IsSubjectRelation(std::string_view dep_rel) {
  return BaseRelation(dep_rel) == "nsubj";
}

bool IsAuxRelation(std::string_view dep_rel) {
  return BaseRelation(dep_rel) == "aux";
}

bool IsModal(const Token& t) {
  static const std::set<std::string> kModals = {
      "may", "might", "can", "could", "must", "shall", "should", "will",
      "would"};
  return IsAuxRelation(t.dep_rel) && kModals.count(ToLower(t.lemma)) > 0;
}

bool IsBeVerb(const Token& t) {
  return ToLower(t.lemma) == "be" && (t.upos == "AUX" || t.upos == "VERB");
}

bool StartsUpper(const std::string& s) {
  return !s.empty() && std::isupper(static_cast<unsigned char>(s[0]));
}

void Capitalize(std::string& s) {
  if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
}

void Uncapitalize(std::string& s) {
  if (!s.empty()) s[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(s[0])));
}

// The lemma to realize in place of an inflected verb.
std::string BareForm(const Token& t) {
  if (t.lemma.empty() || t.lemma == "_") return ToLower(t.form);
  return t.lemma;
}

std::optional<size_t> FirstChild(const ParsedSentence& s, size_t offset,
                                 bool (*pred)(const Token&)) {
  for (size_t c : Children(s, offset)) {
    if (pred(s.tokens[c])) return c;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Punctuation insertion.

// Where a subordinate clause comma goes, if anywhere.
std::optional<std::pair<size_t, size_t>> ClauseCommaSite(
    const ParsedSentence& s) {
  const size_t n = s.size();
  for (size_t i = 0; i < n; ++i) {
    if (!IsClauseRelation(s.tokens[i].dep_rel)) continue;
    const Span span = SubtreeSpan(s, i);
    // The span may already own a comma inserted by an earlier pass.
    if (span.start > 0) {
      if (s.tokens[span.start - 1].form == "," ||
          s.tokens[span.start].form == ",") {
        continue;
      }
      return std::make_pair(span.start, i);
    }
    // A fronted clause is closed off at its right edge instead.
    if (span.end < n && !IsPunctuation(s.tokens[span.end]) &&
        s.tokens[span.end - 1].form != ",") {
      return std::make_pair(span.end, i);
    }
  }
  return std::nullopt;
}

std::optional<size_t> NounSubject(const ParsedSentence& s) {
  for (size_t i = 0; i < s.size(); ++i) {
    const Token& t = s.tokens[i];
    if (IsSubjectRelation(t.dep_rel) && (t.upos == "NOUN" || t.upos == "PROPN")) {
      return i;
    }
  }
  return std::nullopt;
}

std::optional<size_t> InteriorPunctuation(const ParsedSentence& s) {
  for (size_t i = 0; i + 1 < s.size(); ++i) {
    if (s.tokens[i].upos == "PUNCT") return i;
  }
  return std::nullopt;
}

Token PunctToken(const std::string& mark, int head) {
  Token t = MakeToken(mark, "PUNCT", "punct", head);
  t.xpos = mark == "“" ? "``" : mark == "”" ? "''" : mark == "," ? "," : ".";
  return t;
}

// ---------------------------------------------------------------------------
// Affirmative auxiliary.

bool IsThirdSingularSubject(const ParsedSentence& s, size_t subject) {
  const Token& t = s.tokens[subject];
  if (t.upos == "PRON") {
    const std::string lower = ToLower(t.form);
    return lower == "he" || lower == "she" || lower == "it";
  }
  if (t.upos != "NOUN" && t.upos != "PROPN") return false;
  for (size_t c : Children(s, subject)) {
    if (BaseRelation(s.tokens[c].dep_rel) == "conj") return false;
  }
  if (t.xpos == "NN" || t.xpos == "NNP") return true;
  if (t.xpos == "NNS" || t.xpos == "NNPS") return false;
  if (t.feats.find("Number=Sing") != std::string::npos) return true;
  if (t.feats.find("Number=Plur") != std::string::npos) return false;
  const std::string lower = ToLower(t.form);
  return lower.size() < 2 || lower.back() != 's' || lower.ends_with("ss");
}

bool IsSubjectToken(const Token& t) { return IsSubjectRelation(t.dep_rel); }

Token AuxWordToken(const std::string& word, int head) {
  if (ToLower(word) == "to") {
    Token t = MakeToken(word, "PART", "mark", head);
    t.xpos = "TO";
    return t;
  }
  return MakeToken(word, "AUX", "aux", head);
}

// ---------------------------------------------------------------------------
// Double negation.

// "did" for past-tense verbs, "does" under a third-person-singular subject,
// "do" otherwise.
std::string DoSupport(const ParsedSentence& s, size_t verb) {
  const Token& t = s.tokens[verb];
  if (t.xpos == "VBD" || t.feats.find("Tense=Past") != std::string::npos) {
    return "did";
  }
  const std::optional<size_t> subject = FirstChild(s, verb, &IsSubjectToken);
  if (subject && IsThirdSingularSubject(s, *subject)) return "does";
  return "do";
}

Token NotToken(const std::string& form, int head) {
  Token t = MakeToken(form, "PART", "advmod", head);
  t.lemma = "not";
  t.xpos = "RB";
  t.feats = "Polarity=Neg";
  return t;
}

}  // namespace

RuleStrategy ParseRuleStrategy(std::string_view name) {
  if (name == "cascade") return RuleStrategy::kCascade;
  if (name == "random") return RuleStrategy::kUniformRandom;
  throw ConfigError("unknown rule strategy '" + std::string(name) +
                    "' (expected cascade|random)");
}

bool PiRuleApplies(const ParsedSentence& sentence, PiRule rule) {
  switch (rule) {
    case PiRule::kSubordinateClause:
      return ClauseCommaSite(sentence).has_value();
    case PiRule::kNounSubject:
      return NounSubject(sentence).has_value();
    case PiRule::kInteriorPunctuation:
      return InteriorPunctuation(sentence).has_value();
    case PiRule::kTerminal:
      return !sentence.tokens.empty();
  }
  return false;
}

std::optional<ParsedSentence> ApplyPiRule(const ParsedSentence& sentence,
                                          PiRule rule, SubjectMark mark) {
  ParsedSentence out = sentence;
  switch (rule) {
    case PiRule::kSubordinateClause: {
      const auto site = ClauseCommaSite(sentence);
      if (!site) return std::nullopt;
      const auto [pos, clause] = *site;
      InsertToken(out, pos, PunctToken(",", static_cast<int>(clause) + 1));
      return out;
    }
    case PiRule::kNounSubject: {
      const auto subject = NounSubject(sentence);
      if (!subject) return std::nullopt;
      const Span span = SubtreeSpan(sentence, *subject);
      const int head = static_cast<int>(*subject) + 1;
      if (mark == SubjectMark::kComma) {
        InsertToken(out, span.end, PunctToken(",", head));
      } else {
        InsertToken(out, span.end, PunctToken("”", head));
        InsertToken(out, span.start, PunctToken("“", head));
      }
      return out;
    }
    case PiRule::kInteriorPunctuation: {
      const auto punct = InteriorPunctuation(sentence);
      if (!punct) return std::nullopt;
      Token copy = sentence.tokens[*punct];
      InsertToken(out, *punct + 1, std::move(copy));
      return out;
    }
    case PiRule::kTerminal: {
      if (out.tokens.empty()) return std::nullopt;
      Token& last = out.tokens.back();
      const int root = static_cast<int>(RootOffset(out)) + 1;
      if (last.form == "!") {
        InsertToken(out, out.size(), PunctToken("!", root));
      } else if (last.upos == "PUNCT") {
        last.form = "!";
        last.lemma = "!";
        last.xpos = ".";
      } else {
        InsertToken(out, out.size(), PunctToken("!", root));
      }
      return out;
    }
  }
  return std::nullopt;
}

AugmentedPair PunctuationInsertion(const ParsedSentence& sentence, Rng& rng,
                                   RuleStrategy strategy) {
  std::vector<PiRule> applicable;
  for (PiRule rule : kPiRules) {
    if (PiRuleApplies(sentence, rule)) applicable.push_back(rule);
  }
  if (applicable.empty()) {
    return MakePair(sentence, nullptr, Method::kPunctuationInsertion);
  }
  const PiRule rule = strategy == RuleStrategy::kCascade
                          ? applicable.front()
                          : applicable[UniformIndex(rng, applicable.size())];
  SubjectMark mark = SubjectMark::kComma;
  if (rule == PiRule::kNounSubject && UniformIndex(rng, 2) == 1) {
    mark = SubjectMark::kQuotes;
  }
  const std::optional<ParsedSentence> edited = ApplyPiRule(sentence, rule, mark);
  return MakePair(sentence, edited ? &*edited : nullptr,
                  Method::kPunctuationInsertion);
}

std::optional<ParsedSentence> ApplyAffirmativeAuxiliary(
    const ParsedSentence& sentence, const AuxPhrase& phrase) {
  std::optional<size_t> target;
  size_t predicate = 0;
  std::string final_word;
  for (size_t i = 0; i < sentence.size(); ++i) {
    const Token& t = sentence.tokens[i];
    if (IsBeVerb(t)) {
      const std::string_view rel = BaseRelation(t.dep_rel);
      const bool governed = t.head != 0 && (rel == "cop" || rel == "aux");
      predicate = governed ? static_cast<size_t>(t.head - 1) : i;
      final_word = "be";
      target = i;
      break;
    }
    if (IsRootRelation(t.dep_rel) && t.upos == "VERB") {
      predicate = i;
      final_word = BareForm(t);
      target = i;
      break;
    }
  }
  if (!target) return std::nullopt;

  const std::optional<size_t> subject =
      FirstChild(sentence, predicate, &IsSubjectToken);
  const bool third_singular =
      subject && IsThirdSingularSubject(sentence, *subject);
  std::vector<std::string> words =
      Split(third_singular ? phrase.third_singular : phrase.base, ' ');
  std::erase_if(words, [](const std::string& w) { return w.empty(); });

  std::optional<size_t> modal;
  for (size_t c : Children(sentence, predicate)) {
    if (c != *target && c < *target && IsModal(sentence.tokens[c])) {
      modal = c;
      break;
    }
  }

  ParsedSentence out = sentence;
  const bool capitalized = StartsUpper(sentence.tokens.front().form);
  size_t pos = *target;
  bool first_changed = pos == 0;
  if (modal) {
    first_changed = first_changed || *modal == 0;
    EraseToken(out, *modal);
    if (*modal < pos) --pos;
  }
  Token& replaced = out.tokens[pos];
  replaced.form = final_word;
  const int head = replaced.index;
  for (size_t w = 0; w < words.size(); ++w) {
    InsertToken(out, pos + w, AuxWordToken(words[w], head));
  }
  if (first_changed && capitalized) Capitalize(out.tokens.front().form);
  return out;
}

AugmentedPair AffirmativeAuxiliary(const ParsedSentence& sentence, Rng& rng,
                                   const AuxLexicon& lexicon) {
  const AuxPhrase& phrase =
      lexicon.entries()[UniformIndex(rng, lexicon.entries().size())];
  const std::optional<ParsedSentence> edited =
      ApplyAffirmativeAuxiliary(sentence, phrase);
  return MakePair(sentence, edited ? &*edited : nullptr,
                  Method::kAffirmativeAuxiliary);
}

NegationOutcome ApplyDoubleNegation(const ParsedSentence& sentence,
                                    const NegLexicon& lexicon) {
  NegationOutcome outcome;
  ParsedSentence s = sentence;
  const bool capitalized = StartsUpper(s.tokens.front().form);
  bool carried_capital = false;

  for (size_t i = 0; i < s.size(); ++i) {
    if (!lexicon.Contains(s.tokens[i].form)) continue;
    const size_t content = std::count_if(
        s.tokens.begin(), s.tokens.end(),
        [](const Token& t) { return !IsPunctuation(t); });
    // Deleting the only content word would leave nothing to negate.
    if (content > 1 || IsPunctuation(s.tokens[i])) {
      EraseToken(s, i);
      if (i == 0 && capitalized && !StartsUpper(s.tokens.front().form)) {
        Capitalize(s.tokens.front().form);
        carried_capital = true;
      }
      ++outcome.deletions;
    }
    break;
  }

  enum class Kind { kNotAfterAux, kDoNot, kNotAtStart };
  struct Edit {
    Kind kind;
    size_t offset;
  };
  std::vector<Edit> plan;
  int count = outcome.deletions;
  int aux_edits = 0;
  for (size_t j = 0; j < s.size() && count < 2; ++j) {
    const Token& t = s.tokens[j];
    if (IsAuxRelation(t.dep_rel)) {
      plan.push_back({Kind::kNotAfterAux, j});
      ++aux_edits;
      ++count;
    } else if (IsRootRelation(t.dep_rel)) {
      if (t.upos == "VERB" && aux_edits == 0) {
        plan.push_back({Kind::kDoNot, j});
      } else {
        plan.push_back({Kind::kNotAtStart, 0});
      }
      ++count;
    }
  }
  outcome.insertions = static_cast<int>(plan.size());
  outcome.edits = count;
  if (count < 2) {
    outcome.sentence = sentence;
    return outcome;
  }

  // Apply right to left so planned offsets stay valid; the sentence-initial
  // "Not" goes in last.
  std::stable_sort(plan.begin(), plan.end(), [](const Edit& a, const Edit& b) {
    if ((a.kind == Kind::kNotAtStart) != (b.kind == Kind::kNotAtStart)) {
      return b.kind == Kind::kNotAtStart;
    }
    return a.offset > b.offset;
  });
  for (const Edit& e : plan) {
    switch (e.kind) {
      case Kind::kNotAfterAux:
        InsertToken(s, e.offset + 1, NotToken("not", s.tokens[e.offset].head));
        break;
      case Kind::kDoNot: {
        Token& verb = s.tokens[e.offset];
        const bool was_first_upper = e.offset == 0 && StartsUpper(verb.form);
        const std::string support = DoSupport(s, e.offset);
        verb.form = BareForm(verb);
        const int head = verb.index;
        Token aux = MakeToken(support, "AUX", "aux", head);
        if (was_first_upper) Capitalize(aux.form);
        aux.lemma = "do";
        aux.xpos = support == "did" ? "VBD" : support == "does" ? "VBZ" : "VBP";
        InsertToken(s, e.offset, std::move(aux));
        InsertToken(s, e.offset + 1, NotToken("not", head + 1));
        break;
      }
      case Kind::kNotAtStart: {
        if (carried_capital) Uncapitalize(s.tokens.front().form);
        const int root = static_cast<int>(RootOffset(s)) + 1;
        InsertToken(s, 0, NotToken("Not", root));
        break;
      }
    }
  }
  outcome.sentence = std::move(s);
  return outcome;
}

AugmentedPair DoubleNegation(const ParsedSentence& sentence,
                             const NegLexicon& lexicon) {
  const NegationOutcome outcome = ApplyDoubleNegation(sentence, lexicon);
  return MakePair(sentence, outcome.edits >= 2 ? &outcome.sentence : nullptr,
                  Method::kDoubleNegation);
}

AugmentedPair AugmentSentence(const ParsedSentence& sentence, Method method,
                              Rng& rng, const AugmentConfig& config) {
  switch (method) {
    case Method::kPunctuationInsertion:
      return PunctuationInsertion(sentence, rng, config.strategy);
    case Method::kAffirmativeAuxiliary:
      return AffirmativeAuxiliary(sentence, rng, config.aux);
    case Method::kDoubleNegation:
      return DoubleNegation(sentence, config.neg);
    case Method::kIdentity:
      return MakePair(sentence, nullptr, Method::kIdentity);
    default: {
      BaselineSpec spec = config.baseline;
      spec.kind = BaselineKindOf(method);
      return ApplyBaseline(sentence, spec, rng);
    }
  }
}

std::vector<AugmentedPair> AugmentCorpus(
    const std::vector<ParsedSentence>& sentences, Method method, uint64_t seed,
    const AugmentConfig& config) {
  if (IsBaseline(method)) {
    BaselineSpec spec = config.baseline;
    spec.kind = BaselineKindOf(method);
    spec.Validate();
  }
  std::vector<AugmentedPair> out(sentences.size());
  auto work = [&](size_t i) {
    Rng rng = MakeRng(seed, {static_cast<uint64_t>(i)});
    out[i] = AugmentSentence(sentences[i], method, rng, config);
  };

  size_t threads = config.threads > 0
                       ? static_cast<size_t>(config.threads)
                       : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, sentences.size());
  if (threads <= 1) {
    for (size_t i = 0; i < sentences.size(); ++i) work(i);
    return out;
  }
  std::atomic<size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (size_t i = next++; i < sentences.size(); i = next++) work(i);
      });
    }
  }
  return out;
}

}  // namespace sentaug
