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

#include "sentaug/synthetic.h"

#include <array>
#include <cctype>
#include <string>
#include <utility>

#include "sentaug/random.h"

namespace sentaug {
namespace {

struct Noun {
  const char* singular;
  const char* plural;
};

struct Verb {
  const char* base;
  const char* third;
  const char* past;
  const char* participle;
  bool transitive;
};

constexpr Noun kNouns[] = {
    {"dog", "dogs"},           {"cat", "cats"},
    {"teacher", "teachers"},   {"student", "students"},
    {"company", "companies"},  {"shareholder", "shareholders"},
    {"child", "children"},     {"doctor", "doctors"},
    {"bird", "birds"},         {"farmer", "farmers"},
    {"engineer", "engineers"}, {"driver", "drivers"},
    {"neighbor", "neighbors"}, {"manager", "managers"},
    {"artist", "artists"},     {"pilot", "pilots"},
};

constexpr Noun kObjects[] = {
    {"book", "books"},     {"letter", "letters"}, {"report", "reports"},
    {"car", "cars"},       {"house", "houses"},   {"apple", "apples"},
    {"song", "songs"},     {"bridge", "bridges"}, {"share", "shares"},
    {"ticket", "tickets"}, {"garden", "gardens"}, {"picture", "pictures"},
    {"contract", "contracts"}, {"window", "windows"},
};

constexpr const char* kProper[] = {"Alice", "Bob",   "Maria", "John",
                                   "Emma",  "Oscar", "Lena",  "Tom"};

constexpr Verb kVerbs[] = {
    {"read", "reads", "read", "read", true},
    {"write", "writes", "wrote", "written", true},
    {"see", "sees", "saw", "seen", true},
    {"build", "builds", "built", "built", true},
    {"find", "finds", "found", "found", true},
    {"like", "likes", "liked", "liked", true},
    {"sell", "sells", "sold", "sold", true},
    {"open", "opens", "opened", "opened", true},
    {"visit", "visits", "visited", "visited", true},
    {"paint", "paints", "painted", "painted", true},
    {"transfer", "transfers", "transferred", "transferred", true},
    {"sleep", "sleeps", "slept", "slept", false},
    {"run", "runs", "ran", "run", false},
    {"arrive", "arrives", "arrived", "arrived", false},
    {"work", "works", "worked", "worked", false},
    {"smile", "smiles", "smiled", "smiled", false},
    {"wait", "waits", "waited", "waited", false},
};

constexpr const char* kAdjectives[] = {
    "happy", "tired", "ready", "busy",    "quiet", "late",
    "early", "calm",  "proud", "careful", "angry", "hungry"};

constexpr const char* kAdverbs[] = {"today", "often", "quickly", "again",
                                    "slowly", "yesterday"};

constexpr const char* kModals[] = {"may", "can", "will", "must", "should",
                                   "could", "might", "would"};

constexpr const char* kMarks[] = {"because", "when", "if", "although",
                                  "while"};

constexpr const char* kSpeech[][3] = {{"say", "says", "said"},
                                      {"think", "thinks", "thought"},
                                      {"know", "knows", "knew"}};

template <typename T, size_t N>
const T& Pick(Rng& rng, const T (&items)[N]) {
  return items[UniformIndex(rng, N)];
}

class Builder {
 public:
  int Add(std::string form, std::string lemma, std::string upos,
          std::string xpos, std::string feats = "_") {
    Token t;
    t.index = static_cast<int>(s_.tokens.size()) + 1;
    t.form = std::move(form);
    t.lemma = std::move(lemma);
    t.upos = std::move(upos);
    t.xpos = std::move(xpos);
    t.feats = std::move(feats);
    s_.tokens.push_back(std::move(t));
    return s_.tokens.back().index;
  }

  void Attach(int dep, int head, std::string rel) {
    Token& t = s_.tokens[dep - 1];
    t.head = head;
    t.dep_rel = std::move(rel);
  }

  void NoSpaceAfter(int index) { s_.tokens[index - 1].space_after = false; }
  int size() const { return static_cast<int>(s_.tokens.size()); }
  ParsedSentence& sentence() { return s_; }

 private:
  ParsedSentence s_;
};

struct Phrase {
  int head;
  bool third_singular;
  bool first_singular = false;
};

class Generator {
 public:
  Generator(Rng& rng, const SyntheticOptions& options)
      : rng_(rng), options_(options) {}

  ParsedSentence Sentence() {
    const int kinds = options_.single_negation_site ? 5 : 6;
    int root = 0;
    switch (UniformIndex(rng_, static_cast<size_t>(kinds))) {
      case 0:
      case 1:
        root = Clause(true);
        break;
      case 2: {
        root = Clause(true);
        int comma = 0;
        if (Bernoulli(rng_, 0.5)) comma = b_.Add(",", ",", "PUNCT", ",");
        const int mark = b_.Add(Pick(rng_, kMarks), "", "SCONJ", "IN");
        const int sub = Clause(false);
        b_.Attach(mark, sub, "mark");
        if (comma) b_.Attach(comma, sub, "punct");
        b_.Attach(sub, root, "advcl");
        break;
      }
      case 3: {
        if (Bernoulli(rng_, 0.5)) {
          const int mark = b_.Add(Pick(rng_, kMarks), "", "SCONJ", "IN");
          const int sub = Clause(false);
          const int comma = b_.Add(",", ",", "PUNCT", ",");
          root = Clause(true);
          b_.Attach(mark, sub, "mark");
          b_.Attach(comma, sub, "punct");
          b_.Attach(sub, root, "advcl");
        } else {
          static constexpr const char* kIntj[] = {"Yes", "Well", "Oh", "Indeed"};
          const int intj = b_.Add(Pick(rng_, kIntj), "", "INTJ", "UH");
          const int comma = b_.Add(",", ",", "PUNCT", ",");
          root = Clause(true);
          b_.Attach(intj, root, "discourse");
          b_.Attach(comma, root, "punct");
        }
        break;
      }
      case 4: {
        const Phrase subj = Subject(true);
        const auto& speech = Pick(rng_, kSpeech);
        const bool past = Bernoulli(rng_, 0.5);
        root = b_.Add(past ? speech[2] : subj.third_singular ? speech[1] : speech[0],
                      speech[0], "VERB",
                      past ? "VBD" : subj.third_singular ? "VBZ" : "VBP");
        b_.Attach(subj.head, root, "nsubj");
        const int mark = b_.Add("that", "that", "SCONJ", "IN");
        const int sub = Clause(false);
        b_.Attach(mark, sub, "mark");
        b_.Attach(sub, root, "ccomp");
        break;
      }
      default:
        root = Fragment();
        break;
    }
    b_.Attach(root, 0, "root");
    Terminal(root);
    ParsedSentence& s = b_.sentence();
    for (Token& t : s.tokens) {
      if (t.lemma.empty()) t.lemma = LowerCopy(t.form);
    }
    std::string& first = s.tokens.front().form;
    first[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(first[0])));
    s.raw_text = Detokenize(s);
    return std::move(s);
  }

 private:
  static std::string LowerCopy(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
  }

  void Terminal(int root) {
    size_t choice = options_.period_only ? 0 : UniformIndex(rng_, 10);
    const char* mark = choice < 7 ? "." : choice == 7 ? "!" : choice == 8 ? "?" : nullptr;
    if (mark == nullptr) return;
    b_.NoSpaceAfter(b_.size());
    const int p = b_.Add(mark, mark, "PUNCT", ".");
    b_.Attach(p, root, "punct");
  }

  int Determiner(bool plural) {
    static constexpr const char* kSingular[] = {"the", "this", "my", "every", "that"};
    static constexpr const char* kPlural[] = {"the", "some", "these", "many", "my"};
    std::string det = plural ? Pick(rng_, kPlural) : Pick(rng_, kSingular);
    if (plural && !options_.single_negation_site && Bernoulli(rng_, 0.1)) det = "no";
    const int d = b_.Add(det, det, "DET", "DT");
    return d;
  }

  Phrase CommonNoun(const Noun* table, size_t n, bool allow_relative) {
    const bool plural = Bernoulli(rng_, 0.4);
    const Noun& noun = table[UniformIndex(rng_, n)];
    const int det = Determiner(plural);
    int adj = 0;
    if (Bernoulli(rng_, 0.3)) adj = b_.Add(Pick(rng_, kAdjectives), "", "ADJ", "JJ");
    const int head = b_.Add(plural ? noun.plural : noun.singular, noun.singular,
                            "NOUN", plural ? "NNS" : "NN",
                            plural ? "Number=Plur" : "Number=Sing");
    b_.Attach(det, head, "det");
    if (adj) b_.Attach(adj, head, "amod");
    if (allow_relative && Bernoulli(rng_, 0.15)) {
      const int that = b_.Add("that", "that", "PRON", "WDT");
      const Verb& v = Pick(rng_, kVerbs);
      const int verb = b_.Add(plural ? v.base : v.third, v.base, "VERB",
                              plural ? "VBP" : "VBZ");
      b_.Attach(that, verb, "nsubj");
      b_.Attach(verb, head, "acl:relcl");
      if (v.transitive) {
        const Phrase obj = CommonNoun(kObjects, std::size(kObjects), false);
        b_.Attach(obj.head, verb, "obj");
      }
    }
    return {head, !plural};
  }

  Phrase Subject(bool allow_relative) {
    const size_t kind = UniformIndex(rng_, 10);
    if (kind < 3) {
      static constexpr std::pair<const char*, int> kPronouns[] = {
          {"I", 1}, {"you", 2}, {"he", 3}, {"she", 3},
          {"it", 3}, {"we", 0}, {"they", 0}};
      const auto& [form, person] = Pick(rng_, kPronouns);
      const int head = b_.Add(form, LowerCopy(form), "PRON", "PRP");
      return {head, person == 3, person == 1};
    }
    if (kind < 5) {
      const int head = b_.Add(Pick(rng_, kProper), "", "PROPN", "NNP", "Number=Sing");
      return {head, true};
    }
    return CommonNoun(kNouns, std::size(kNouns), allow_relative);
  }

  int Object() {
    if (Bernoulli(rng_, 0.2)) {
      return b_.Add(Pick(rng_, kProper), "", "PROPN", "NNP", "Number=Sing");
    }
    return CommonNoun(kObjects, std::size(kObjects), false).head;
  }

  int Not(bool allow) {
    if (!allow || !Bernoulli(rng_, 0.35)) return 0;
    if (Bernoulli(rng_, 0.8)) return b_.Add("not", "not", "PART", "RB", "Polarity=Neg");
    return b_.Add("never", "never", "ADV", "RB");
  }

  void Adverb(int verb) {
    if (Bernoulli(rng_, 0.2)) {
      const int adv = b_.Add(Pick(rng_, kAdverbs), "", "ADV", "RB");
      b_.Attach(adv, verb, "advmod");
    }
  }

  // Appends a clause and returns its predicate; the caller attaches it.
  int Clause(bool main) {
    const Phrase subj = Subject(main);
    const bool neg_ok = !options_.single_negation_site;
    const size_t kind = options_.single_negation_site ? 0 : UniformIndex(rng_, 6);
    const Verb& v = Pick(rng_, kVerbs);
    int pred = 0;
    std::string subj_rel = "nsubj";
    switch (kind) {
      case 0:
      case 1: {  // simple present/past, possibly with do-support
        const bool past = Bernoulli(rng_, 0.5);
        if (neg_ok && Bernoulli(rng_, 0.25)) {
          const char* aux = past ? "did" : subj.third_singular ? "does" : "do";
          const int a = b_.Add(aux, "do", "AUX", past ? "VBD" : "VBZ");
          const int n = b_.Add("not", "not", "PART", "RB", "Polarity=Neg");
          pred = b_.Add(v.base, v.base, "VERB", "VB");
          b_.Attach(a, pred, "aux");
          b_.Attach(n, pred, "advmod");
        } else {
          const int never = neg_ok && Bernoulli(rng_, 0.1)
                                ? b_.Add("never", "never", "ADV", "RB")
                                : 0;
          const char* form = past ? v.past : subj.third_singular ? v.third : v.base;
          pred = b_.Add(form, v.base, "VERB",
                        past ? "VBD" : subj.third_singular ? "VBZ" : "VBP");
          if (never) b_.Attach(never, pred, "advmod");
        }
        break;
      }
      case 2: {  // modal
        const char* modal = Pick(rng_, kModals);
        const int m = b_.Add(modal, modal, "AUX", "MD");
        const int n = Not(neg_ok);
        pred = b_.Add(v.base, v.base, "VERB", "VB");
        b_.Attach(m, pred, "aux");
        if (n) b_.Attach(n, pred, "advmod");
        break;
      }
      case 3: {  // perfect
        const char* have = subj.third_singular ? "has" : "have";
        const int h = b_.Add(have, "have", "AUX", subj.third_singular ? "VBZ" : "VBP");
        const int n = Not(neg_ok);
        pred = b_.Add(v.participle, v.base, "VERB", "VBN");
        b_.Attach(h, pred, "aux");
        if (n) b_.Attach(n, pred, "advmod");
        break;
      }
      case 4: {  // copula
        const bool past = Bernoulli(rng_, 0.4);
        std::string be = subj.first_singular && !past ? "am"
                         : subj.third_singular || subj.first_singular
                             ? (past ? "was" : "is")
                             : (past ? "were" : "are");
        const int cop = b_.Add(be, "be", "AUX", past ? "VBD" : "VBZ");
        const int n = Not(neg_ok);
        int very = 0;
        if (Bernoulli(rng_, 0.3)) very = b_.Add("very", "very", "ADV", "RB");
        pred = b_.Add(Pick(rng_, kAdjectives), "", "ADJ", "JJ");
        b_.Attach(cop, pred, "cop");
        if (n) b_.Attach(n, pred, "advmod");
        if (very) b_.Attach(very, pred, "advmod");
        b_.Attach(subj.head, pred, "nsubj");
        return pred;
      }
      default: {  // passive
        const Verb& tv = kVerbs[UniformIndex(rng_, 11)];
        const bool past = Bernoulli(rng_, 0.5);
        std::string be = subj.third_singular || subj.first_singular
                             ? (past ? "was" : "is")
                             : (past ? "were" : "are");
        if (subj.first_singular && !past) be = "am";
        const int aux = b_.Add(be, "be", "AUX", past ? "VBD" : "VBZ");
        const int n = Not(neg_ok);
        pred = b_.Add(tv.participle, tv.base, "VERB", "VBN");
        b_.Attach(aux, pred, "aux:pass");
        if (n) b_.Attach(n, pred, "advmod");
        subj_rel = "nsubj:pass";
        b_.Attach(subj.head, pred, subj_rel);
        Adverb(pred);
        return pred;
      }
    }
    b_.Attach(subj.head, pred, subj_rel);
    if (v.transitive && Bernoulli(rng_, 0.8)) b_.Attach(Object(), pred, "obj");
    Adverb(pred);
    return pred;
  }

  int Fragment() {
    const std::string adjective = Pick(rng_, kAdjectives);
    switch (UniformIndex(rng_, 3)) {
      case 0: {
        const int n = b_.Add("not", "not", "PART", "RB", "Polarity=Neg");
        const int adj = b_.Add(adjective, adjective, "ADJ", "JJ");
        const int at = b_.Add("at", "at", "ADP", "IN");
        const int all = b_.Add("all", "all", "PRON", "DT");
        b_.Attach(n, adj, "advmod");
        b_.Attach(at, all, "case");
        b_.Attach(all, adj, "obl");
        return adj;
      }
      case 1: {
        const int adj = b_.Add(adjective, adjective, "ADJ", "JJ");
        const int noun = b_.Add("news", "news", "NOUN", "NN");
        b_.Attach(adj, noun, "amod");
        return noun;
      }
      default: {
        const bool vowel = std::string("aeiou").find(adjective[0]) != std::string::npos;
        const Noun& object = Pick(rng_, kObjects);
        const int what = b_.Add("what", "what", "DET", "WDT");
        const int a = b_.Add(vowel ? "an" : "a", "a", "DET", "DT");
        const int adj = b_.Add(adjective, adjective, "ADJ", "JJ");
        const int noun = b_.Add(object.singular, object.singular, "NOUN", "NN");
        b_.Attach(what, noun, "det");
        b_.Attach(a, noun, "det");
        b_.Attach(adj, noun, "amod");
        return noun;
      }
    }
  }

  Rng& rng_;
  const SyntheticOptions& options_;
  Builder b_;
};

}  // namespace

std::vector<ParsedSentence> SyntheticCorpus(size_t count, uint64_t seed,
                                            const SyntheticOptions& options) {
  std::vector<ParsedSentence> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    Rng rng = MakeRng(seed, {static_cast<uint64_t>(i)});
    ParsedSentence s = Generator(rng, options).Sentence();
    s.sent_id = "syn-" + std::to_string(i + 1);
    ValidateSentence(s);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace sentaug
