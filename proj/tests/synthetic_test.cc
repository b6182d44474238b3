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

#include <set>
#include <string>

#include <gtest/gtest.h>

#include "sentaug/augmenter.h"
#include "sentaug/conllu.h"

namespace sentaug {
namespace {

TEST(SyntheticCorpusTest, ValidAndDeterministic) {
  const auto a = SyntheticCorpus(300, 4);
  EXPECT_EQ(a, SyntheticCorpus(300, 4));
  EXPECT_NE(a, SyntheticCorpus(300, 5));
  ASSERT_EQ(a.size(), 300u);
  std::set<std::string> ids;
  for (const ParsedSentence& s : a) {
    ValidateSentence(s);
    ASSERT_TRUE(s.sent_id.has_value());
    ids.insert(*s.sent_id);
  }
  EXPECT_EQ(ids.size(), a.size());
  EXPECT_TRUE(SyntheticCorpus(0, 1).empty());
}

TEST(SyntheticCorpusTest, CoversEveryAugmenterBranch) {
  const auto corpus = SyntheticCorpus(500, 6);
  int clause = 0, noun_subject = 0, interior = 0, no_final_punct = 0;
  int aa_unchanged = 0, dn_changed = 0, dn_unchanged = 0;
  std::set<std::string> distinct;
  for (const ParsedSentence& s : corpus) {
    distinct.insert(Detokenize(s));
    clause += PiRuleApplies(s, PiRule::kSubordinateClause);
    noun_subject += PiRuleApplies(s, PiRule::kNounSubject);
    interior += PiRuleApplies(s, PiRule::kInteriorPunctuation);
    no_final_punct += s.tokens.back().upos != "PUNCT";
    aa_unchanged += !ApplyAffirmativeAuxiliary(s, {"have to", "has to"});
    const bool changed = DoubleNegation(s, NegLexicon::Default()).changed;
    dn_changed += changed;
    dn_unchanged += !changed;
  }
  EXPECT_GT(distinct.size(), 400u);
  EXPECT_GT(clause, 0);
  EXPECT_GT(noun_subject, 0);
  EXPECT_GT(interior, 0);
  EXPECT_GT(no_final_punct, 0);
  EXPECT_GT(aa_unchanged, 0);
  EXPECT_GT(dn_changed, 0);
  EXPECT_GT(dn_unchanged, 0);
}

TEST(SyntheticCorpusTest, PeriodOnly) {
  SyntheticOptions options;
  options.period_only = true;
  for (const ParsedSentence& s : SyntheticCorpus(300, 7, options)) {
    EXPECT_EQ(s.tokens.back().form, ".");
  }
}

TEST(SyntheticCorpusTest, SingleNegationSite) {
  SyntheticOptions options;
  options.single_negation_site = true;
  for (const ParsedSentence& s : SyntheticCorpus(300, 8, options)) {
    EXPECT_EQ(ApplyDoubleNegation(s, NegLexicon::Default()).edits, 1)
        << Detokenize(s);
  }
}

TEST(SyntheticCorpusTest, SerializesAndReparses) {
  const auto corpus = SyntheticCorpus(100, 9);
  EXPECT_EQ(ParseConllu(SerializeConllu(corpus)), corpus);
}

}  // namespace
}  // namespace sentaug
