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
#include <set>
#include <string>

#include <gtest/gtest.h>

#include "sentaug/errors.h"
#include "sentaug/io.h"
#include "sentaug/synthetic.h"
#include "testing.h"

namespace sentaug {
namespace {

using testing::Sentence;

constexpr char kShareholder[] =
    "A shareholder may transfer its Shares only with the prior written "
    "consent of the Company.";

ParsedSentence Shareholder() {
  return ParseConllu(ReadFile(testing::DataPath("table1.conllu"))).at(0);
}

ParsedSentence ItWorks() {
  return Sentence({{"It", "it", "PRON", 2, "nsubj", "PRP"},
                   {"works", "work", "VERB", 0, "root", "VBZ"},
                   {".", "", "PUNCT", 2, "punct", "."}});
}

ParsedSentence YesItIsTrue() {
  return Sentence({{"Yes", "yes", "INTJ", 5, "discourse", "UH"},
                   {",", "", "PUNCT", 1, "punct", ","},
                   {"it", "", "PRON", 5, "nsubj", "PRP"},
                   {"is", "be", "AUX", 5, "cop", "VBZ"},
                   {"true", "", "ADJ", 0, "root", "JJ"},
                   {".", "", "PUNCT", 5, "punct", "."}});
}

ParsedSentence NotBadAtAll() {
  return Sentence({{"Not", "not", "PART", 2, "advmod", "RB"},
                   {"bad", "", "ADJ", 0, "root", "JJ"},
                   {"at", "", "ADP", 4, "case", "IN"},
                   {"all", "", "DET", 2, "obl", "DT"},
                   {".", "", "PUNCT", 2, "punct", "."}});
}

ParsedSentence SheIsHappy() {
  return Sentence({{"She", "she", "PRON", 3, "nsubj", "PRP"},
                   {"is", "be", "AUX", 3, "cop", "VBZ"},
                   {"happy", "", "ADJ", 0, "root", "JJ"},
                   {".", "", "PUNCT", 3, "punct", "."}});
}

ParsedSentence SheWillGo() {
  return Sentence({{"She", "she", "PRON", 3, "nsubj", "PRP"},
                   {"will", "", "AUX", 3, "aux", "MD"},
                   {"go", "", "VERB", 0, "root", "VB"},
                   {".", "", "PUNCT", 3, "punct", "."}});
}

ParsedSentence DogsBark() {
  return Sentence({{"Dogs", "dog", "NOUN", 2, "nsubj", "NNS"},
                   {"bark", "", "VERB", 0, "root", "VBP"},
                   {".", "", "PUNCT", 2, "punct", "."}});
}

std::string Realize(const std::optional<ParsedSentence>& s) {
  return s ? Detokenize(*s) : "<none>";
}

const AuxPhrase kHaveTo{"have to", "has to"};

TEST(Table1Test, FixtureRealizesTheOriginal) {
  EXPECT_EQ(Detokenize(Shareholder()), kShareholder);
}

TEST(Table1Test, PunctuationInsertionSubjectComma) {
  EXPECT_EQ(Realize(ApplyPiRule(Shareholder(), PiRule::kNounSubject,
                                SubjectMark::kComma)),
            "A shareholder, may transfer its Shares only with the prior "
            "written consent of the Company.");
}

TEST(Table1Test, AffirmativeAuxiliaryHaveTo) {
  EXPECT_EQ(Realize(ApplyAffirmativeAuxiliary(Shareholder(), kHaveTo)),
            "A shareholder has to transfer its Shares only with the prior "
            "written consent of the Company.");
}

TEST(Table1Test, DoubleNegation) {
  const AugmentedPair pair = DoubleNegation(Shareholder(), NegLexicon::Default());
  EXPECT_TRUE(pair.changed);
  EXPECT_EQ(pair.method, Method::kDoubleNegation);
  EXPECT_EQ(pair.positive,
            "Not A shareholder may not transfer its Shares only with the "
            "prior written consent of the Company.");
}

TEST(PunctuationInsertionTest, PronounSubjectFallsThroughToTerminal) {
  Rng rng = MakeRng(1, {});
  const AugmentedPair pair =
      PunctuationInsertion(ItWorks(), rng, RuleStrategy::kCascade);
  EXPECT_EQ(pair.positive, "It works!");
  EXPECT_TRUE(pair.changed);
}

TEST(PunctuationInsertionTest, DuplicatesInteriorPunctuation) {
  EXPECT_EQ(Realize(ApplyPiRule(YesItIsTrue(), PiRule::kInteriorPunctuation)),
            "Yes,, it is true.");
  Rng rng = MakeRng(1, {});
  EXPECT_EQ(PunctuationInsertion(YesItIsTrue(), rng, RuleStrategy::kCascade)
                .positive,
            "Yes,, it is true.");
}

TEST(PunctuationInsertionTest, TerminalVariants) {
  ParsedSentence go = Sentence({{"Go", "go", "VERB", 0, "root"},
                                {"!", "", "PUNCT", 1, "punct"}});
  EXPECT_EQ(Realize(ApplyPiRule(go, PiRule::kTerminal)), "Go!!");
  go.tokens[1].form = "?";
  EXPECT_EQ(Realize(ApplyPiRule(go, PiRule::kTerminal)), "Go!");
  go.tokens.pop_back();
  EXPECT_EQ(Realize(ApplyPiRule(go, PiRule::kTerminal)), "Go!");
}

TEST(PunctuationInsertionTest, SubjectQuotes) {
  EXPECT_EQ(Realize(ApplyPiRule(DogsBark(), PiRule::kNounSubject,
                                SubjectMark::kQuotes)),
            "“Dogs” bark.");
  EXPECT_EQ(Realize(ApplyPiRule(DogsBark(), PiRule::kNounSubject)),
            "Dogs, bark.");
}

TEST(PunctuationInsertionTest, ClauseComma) {
  ParsedSentence s = Sentence({{"He", "he", "PRON", 2, "nsubj"},
                               {"left", "leave", "VERB", 0, "root"},
                               {"because", "", "SCONJ", 5, "mark"},
                               {"it", "", "PRON", 5, "nsubj"},
                               {"rained", "rain", "VERB", 2, "advcl"},
                               {".", "", "PUNCT", 2, "punct"}});
  EXPECT_TRUE(PiRuleApplies(s, PiRule::kSubordinateClause));
  EXPECT_EQ(Realize(ApplyPiRule(s, PiRule::kSubordinateClause)),
            "He left, because it rained.");

  // Already separated by a comma: the rule does not apply.
  const ParsedSentence with_comma =
      *ApplyPiRule(s, PiRule::kSubordinateClause);
  EXPECT_FALSE(PiRuleApplies(with_comma, PiRule::kSubordinateClause));
}

TEST(PunctuationInsertionTest, FrontedClauseIsClosedOff) {
  const ParsedSentence s = Sentence({{"When", "when", "SCONJ", 3, "mark"},
                                     {"it", "", "PRON", 3, "nsubj"},
                                     {"rained", "rain", "VERB", 5, "advcl"},
                                     {"we", "", "PRON", 5, "nsubj"},
                                     {"stayed", "stay", "VERB", 0, "root"},
                                     {".", "", "PUNCT", 5, "punct"}});
  EXPECT_EQ(Realize(ApplyPiRule(s, PiRule::kSubordinateClause)),
            "When it rained, we stayed.");
  EXPECT_FALSE(PiRuleApplies(*ApplyPiRule(s, PiRule::kSubordinateClause),
                             PiRule::kSubordinateClause));
}

TEST(PunctuationInsertionTest, UniformStrategyOnlyPicksApplicableRules) {
  // Applicable here: R2 (noun subject) and R4 (terminal).
  std::set<std::string> seen;
  for (uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng = MakeRng(seed, {});
    seen.insert(
        PunctuationInsertion(DogsBark(), rng, RuleStrategy::kUniformRandom)
            .positive);
  }
  EXPECT_EQ(seen, (std::set<std::string>{"Dogs, bark.", "“Dogs” bark.",
                                         "Dogs bark!"}));
}

TEST(PunctuationInsertionTest, StrategyNames) {
  EXPECT_EQ(ParseRuleStrategy("cascade"), RuleStrategy::kCascade);
  EXPECT_EQ(ParseRuleStrategy("random"), RuleStrategy::kUniformRandom);
  EXPECT_THROW(ParseRuleStrategy("sometimes"), ConfigError);
}

TEST(AffirmativeAuxiliaryTest, VerblessFragmentIsUnchanged) {
  Rng rng = MakeRng(3, {});
  const AugmentedPair pair =
      AffirmativeAuxiliary(NotBadAtAll(), rng, AuxLexicon::Default());
  EXPECT_FALSE(pair.changed);
  EXPECT_EQ(pair.method, Method::kIdentity);
  EXPECT_EQ(pair.positive, "Not bad at all.");
}

TEST(AffirmativeAuxiliaryTest, BeVerbBranch) {
  EXPECT_EQ(Realize(ApplyAffirmativeAuxiliary(SheIsHappy(), kHaveTo)),
            "She has to be happy.");
}

TEST(AffirmativeAuxiliaryTest, PluralSubjectKeepsBaseForm) {
  EXPECT_EQ(Realize(ApplyAffirmativeAuxiliary(DogsBark(), kHaveTo)),
            "Dogs have to bark.");
}

TEST(AffirmativeAuxiliaryTest, ModalIsRemoved) {
  EXPECT_EQ(Realize(ApplyAffirmativeAuxiliary(SheWillGo(), kHaveTo)),
            "She has to go.");
  EXPECT_EQ(Realize(ApplyAffirmativeAuxiliary(SheWillGo(),
                                              {"can't help to", "can't help to"})),
            "She can't help to go.");
}

TEST(AffirmativeAuxiliaryTest, SentenceInitialVerbKeepsCapital) {
  const ParsedSentence s = Sentence({{"Come", "come", "VERB", 0, "root"},
                                     {"here", "", "ADV", 1, "advmod"},
                                     {".", "", "PUNCT", 1, "punct"}});
  EXPECT_EQ(Realize(ApplyAffirmativeAuxiliary(s, kHaveTo)),
            "Have to come here.");
}

TEST(DoubleNegationTest, SingleSiteIsUnchanged) {
  const NegationOutcome outcome =
      ApplyDoubleNegation(DogsBark(), NegLexicon::Default());
  EXPECT_EQ(outcome.edits, 1);
  const AugmentedPair pair = DoubleNegation(DogsBark(), NegLexicon::Default());
  EXPECT_FALSE(pair.changed);
  EXPECT_EQ(pair.positive, "Dogs bark.");
}

TEST(DoubleNegationTest, AuxThenSentenceInitialNot) {
  const AugmentedPair pair = DoubleNegation(SheWillGo(), NegLexicon::Default());
  EXPECT_TRUE(pair.changed);
  EXPECT_EQ(pair.positive, "Not She will not go.");
}

TEST(DoubleNegationTest, DeletionThenDoSupport) {
  const ParsedSentence s = Sentence({{"She", "she", "PRON", 3, "nsubj", "PRP"},
                                     {"never", "", "ADV", 3, "advmod", "RB"},
                                     {"lies", "lie", "VERB", 0, "root", "VBZ"},
                                     {".", "", "PUNCT", 3, "punct", "."}});
  const NegationOutcome outcome = ApplyDoubleNegation(s, NegLexicon::Default());
  EXPECT_EQ(outcome.deletions, 1);
  EXPECT_EQ(outcome.insertions, 1);
  EXPECT_EQ(Detokenize(outcome.sentence), "She does not lie.");
}

TEST(DoubleNegationTest, NegatedFragment) {
  const AugmentedPair pair = DoubleNegation(NotBadAtAll(), NegLexicon::Default());
  // Deleting "Not" and reinserting it leaves the string as it was, so the
  // pair reports no change even though two edits were made.
  EXPECT_EQ(ApplyDoubleNegation(NotBadAtAll(), NegLexicon::Default()).edits, 2);
  EXPECT_FALSE(pair.changed);
  EXPECT_EQ(pair.positive, "Not bad at all.");
}

TEST(DoubleNegationTest, CustomLexicon) {
  const NegLexicon lexicon = NegLexicon::FromText("bark\n");
  EXPECT_TRUE(lexicon.Contains("BARK"));
  EXPECT_FALSE(lexicon.Contains("not"));
}

TEST(AugmentCorpusTest, EmptyCorpus) {
  EXPECT_TRUE(
      AugmentCorpus({}, Method::kDoubleNegation, 0, AugmentConfig{}).empty());
}

TEST(AugmentCorpusTest, OnlyTheTwoSiteSentenceChanges) {
  const std::vector<ParsedSentence> corpus = {DogsBark(), SheWillGo(), ItWorks()};
  const auto pairs = AugmentCorpus(corpus, Method::kDoubleNegation, 7, {});
  ASSERT_EQ(pairs.size(), 3u);
  EXPECT_EQ(std::count_if(pairs.begin(), pairs.end(),
                          [](const AugmentedPair& p) { return p.changed; }),
            1);
  EXPECT_TRUE(pairs[1].changed);
}

TEST(AugmentCorpusTest, DeterministicAcrossRunsAndThreadCounts) {
  const std::vector<ParsedSentence> corpus = SyntheticCorpus(300, 17);
  for (Method method : {Method::kPunctuationInsertion,
                        Method::kAffirmativeAuxiliary,
                        Method::kDoubleNegation, Method::kWordDeletion}) {
    AugmentConfig serial;
    serial.threads = 1;
    serial.strategy = RuleStrategy::kUniformRandom;
    AugmentConfig parallel = serial;
    parallel.threads = 4;
    const std::string a = ToJsonLines(AugmentCorpus(corpus, method, 99, serial));
    const std::string b = ToJsonLines(AugmentCorpus(corpus, method, 99, parallel));
    const std::string c = ToJsonLines(AugmentCorpus(corpus, method, 99, serial));
    EXPECT_EQ(a, b) << MethodName(method);
    EXPECT_EQ(a, c) << MethodName(method);
  }
}

TEST(AugmentCorpusTest, BaselineSpecIsValidated) {
  AugmentConfig config;
  config.baseline.rate = 1.5;
  EXPECT_THROW(AugmentCorpus({DogsBark()}, Method::kCrop, 0, config),
               ConfigError);
}

class InvariantTest : public ::testing::TestWithParam<RuleStrategy> {};

TEST_P(InvariantTest, HoldOnSyntheticSentences) {
  const std::vector<ParsedSentence> corpus = SyntheticCorpus(400, 23);
  AugmentConfig config;
  config.strategy = GetParam();
  const auto pi = AugmentCorpus(corpus, Method::kPunctuationInsertion, 5, config);
  const auto aa = AugmentCorpus(corpus, Method::kAffirmativeAuxiliary, 5, config);
  const auto dn = AugmentCorpus(corpus, Method::kDoubleNegation, 5, config);
  for (size_t i = 0; i < corpus.size(); ++i) {
    EXPECT_EQ(testing::PunctuationViolation(corpus[i], pi[i]), "") << pi[i].positive;
    EXPECT_EQ(testing::AuxiliaryViolation(corpus[i], aa[i], config.aux), "")
        << aa[i].anchor << " => " << aa[i].positive;
    EXPECT_EQ(testing::NegationViolation(corpus[i], dn[i], config.neg), "")
        << dn[i].anchor << " => " << dn[i].positive;
    EXPECT_TRUE(pi[i].changed) << pi[i].anchor;
  }
}

INSTANTIATE_TEST_SUITE_P(Strategies, InvariantTest,
                         ::testing::Values(RuleStrategy::kCascade,
                                           RuleStrategy::kUniformRandom));

TEST(AugmentedPairTest, JsonLine) {
  AugmentedPair pair;
  pair.anchor = "He said \"hi\".";
  pair.positive = "He said \"hi\"!";
  pair.method = Method::kPunctuationInsertion;
  pair.changed = true;
  EXPECT_EQ(ToJsonLine(pair),
            R"({"anchor":"He said \"hi\".","positive":"He said \"hi\"!",)"
            R"("method":"pi","changed":true})");
}

TEST(AugmentedPairTest, MethodNames) {
  for (const char* name :
       {"pi", "aa", "dn", "crop", "del", "syn", "mask", "rep", "randpunct"}) {
    EXPECT_EQ(MethodName(ParseMethod(name)), name);
  }
  EXPECT_THROW(ParseMethod("identity"), ConfigError);
  EXPECT_THROW(ParseMethod("shuffle"), ConfigError);
}

}  // namespace
}  // namespace sentaug
