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

#include "sentaug/encoder.h"

#include <cmath>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "sentaug/errors.h"

namespace sentaug {
namespace {

using Tokens = std::vector<std::string>;

// Vocabulary {<unk>, a}, d = 2, row for "a" = (0.3, -0.4), identity
// projector and zero bias.
ToyEncoder HandSet(double dropout = 0.0) {
  Vocabulary vocab;
  vocab.Add("a");
  return ToyEncoder(vocab, 2, dropout, {0.0, 0.0, 0.3, -0.4}, {1, 0, 0, 1},
                    {0, 0});
}

ToyEncoder Random(int dim, double dropout, uint64_t seed) {
  Vocabulary vocab;
  for (const char* w : {"the", "dog", "barks", "a", "cat", "sleeps", "."}) {
    vocab.Add(w);
  }
  return ToyEncoder(vocab, dim, dropout, seed);
}

TEST(EncodeTest, HandSetSingleToken) {
  const Vector h =
      HandSet().Encode(Tokens{"a"}, DropoutMask::Identity(2), EncodeMode::kTrain);
  ASSERT_EQ(h.size(), 2u);
  EXPECT_DOUBLE_EQ(h[0], std::tanh(0.3));
  EXPECT_DOUBLE_EQ(h[1], std::tanh(-0.4));
}

TEST(EncodeTest, EvalModeIsMeanPoolingOnly) {
  const ToyEncoder enc = HandSet();
  EXPECT_EQ(enc.EncodeEval(Tokens{"a"}), (Vector{0.3, -0.4}));
  EXPECT_EQ(enc.EncodeEval(Tokens{"a", "a"}), enc.EncodeEval(Tokens{"a"}));
  EXPECT_EQ(enc.EncodeEval(Tokens{"A"}), enc.EncodeEval(Tokens{"a"}));
  // Unknown tokens share the reserved row.
  EXPECT_EQ(enc.EncodeEval(Tokens{"zebra", "a"}), (Vector{0.15, -0.2}));
}

TEST(EncodeTest, ZeroDropoutIsDeterministic) {
  const ToyEncoder enc = Random(16, 0.0, 3);
  Rng rng = MakeRng(1, {});
  const Tokens x = {"the", "dog", "barks", "."};
  const Vector first = enc.Encode(x, DropoutMask::Sample(16, 0.0, rng), EncodeMode::kTrain);
  const Vector second = enc.Encode(x, DropoutMask::Sample(16, 0.0, rng), EncodeMode::kTrain);
  EXPECT_EQ(first, second);
}

TEST(InitTest, AnisotropyAddsOneSharedDirection) {
  Vocabulary vocab;
  for (const char* w : {"the", "dog", "barks"}) vocab.Add(w);
  const int d = 6;
  const ToyEncoder flat(vocab, d, 0.1, 9, 0.0);
  const ToyEncoder skewed(vocab, d, 0.1, 9, 2.0);
  const auto a = flat.parameters();
  const auto b = skewed.parameters();
  ASSERT_EQ(a.size(), b.size());
  for (size_t i = 0; i < flat.projector_offset(); ++i) {
    EXPECT_NEAR(b[i] - a[i], b[i % d] - a[i % d], 1e-12) << i;
  }
  double shift = 0.0;
  for (int k = 0; k < d; ++k) shift += std::abs(b[k] - a[k]);
  EXPECT_GT(shift, 0.0);
  for (size_t i = flat.projector_offset(); i < a.size(); ++i) EXPECT_EQ(a[i], b[i]);
}

TEST(EncodeTest, ContractErrors) {
  const ToyEncoder enc = HandSet();
  EXPECT_THROW(enc.Encode(Tokens{}, DropoutMask::Identity(2), EncodeMode::kTrain),
               ContractError);
  EXPECT_THROW(enc.EncodeEval(Tokens{}), ContractError);
  EXPECT_THROW(
      enc.Encode(Tokens{"a"}, DropoutMask::Identity(3), EncodeMode::kTrain),
      ContractError);
  Vocabulary vocab;
  EXPECT_THROW(ToyEncoder(vocab, 2, 0.0, {0, 0}, {1}, {0, 0}), ContractError);
  EXPECT_THROW(ToyEncoder(vocab, 2, 1.0, 0), ConfigError);
  EXPECT_THROW(ToyEncoder(vocab, 0, 0.1, 0), ConfigError);
}

TEST(DropoutMaskTest, EntriesAreZeroOrRescaled) {
  Rng rng = MakeRng(5, {});
  const DropoutMask mask = DropoutMask::Sample(1000, 0.25, rng);
  int zeros = 0;
  for (double s : mask.scale) {
    if (s == 0.0) {
      ++zeros;
    } else {
      EXPECT_DOUBLE_EQ(s, 1.0 / 0.75);
    }
  }
  EXPECT_GT(zeros, 150);
  EXPECT_LT(zeros, 350);
}

TEST(DropoutMaskTest, ExpectationMatchesUnmaskedVector) {
  const ToyEncoder enc = Random(8, 0.1, 11);
  const Vector pooled = enc.Pool(enc.Ids(Tokens{"the", "cat", "sleeps"}));
  Rng rng = MakeRng(6, {});
  Vector mean(pooled.size(), 0.0);
  constexpr int kDraws = 10000;
  for (int draw = 0; draw < kDraws; ++draw) {
    const DropoutMask mask = DropoutMask::Sample(8, 0.1, rng);
    for (size_t k = 0; k < mean.size(); ++k) mean[k] += pooled[k] * mask.scale[k];
  }
  for (size_t k = 0; k < mean.size(); ++k) {
    mean[k] /= kDraws;
    EXPECT_NEAR(mean[k], pooled[k], 0.02 * std::abs(pooled[k])) << "coordinate " << k;
  }
}

TEST(CosineTest, KnownValues) {
  EXPECT_DOUBLE_EQ(CosineSimilarity(Vector{1, 0}, Vector{0, 1}), 0.0);
  EXPECT_NEAR(CosineSimilarity(Vector{1, 1}, Vector{1, 0}), 1.0 / std::sqrt(2.0),
              1e-15);
  EXPECT_NEAR(CosineSimilarity(Vector{0.3, -2, 5}, Vector{0.3, -2, 5}), 1.0, 1e-15);
  EXPECT_NEAR(CosineSimilarity(Vector{1, 2}, Vector{-1, -2}), -1.0, 1e-15);
  EXPECT_THROW(CosineSimilarity(Vector{0, 0}, Vector{1, 0}), UndefinedValueError);
  EXPECT_THROW(CosineSimilarity(Vector{1, 0}, Vector{0, 0}), UndefinedValueError);
}

TEST(CheckpointTest, RoundTripIsExact) {
  const ToyEncoder enc = Random(5, 0.15, 21);
  const std::string text = enc.Serialize();
  const ToyEncoder back = ToyEncoder::Deserialize(text);
  EXPECT_EQ(back.dim(), 5);
  EXPECT_EQ(back.dropout_rate(), 0.15);
  EXPECT_EQ(back.vocabulary().tokens(), enc.vocabulary().tokens());
  const auto a = enc.parameters();
  const auto b = back.parameters();
  ASSERT_EQ(a.size(), b.size());
  for (size_t i = 0; i < a.size(); ++i) ASSERT_EQ(a[i], b[i]) << i;
  EXPECT_EQ(back.Serialize(), text);
}

TEST(CheckpointTest, RejectsDamagedText) {
  const std::string text = Random(3, 0.1, 2).Serialize();
  EXPECT_THROW(ToyEncoder::Deserialize("not a checkpoint\n"), ParseError);
  EXPECT_THROW(ToyEncoder::Deserialize(text.substr(0, text.size() / 2)), ParseError);
}

TEST(VocabularyTest, LowerCasedWithReservedUnknown) {
  Vocabulary v;
  EXPECT_EQ(v.size(), 1u);
  EXPECT_EQ(v.Add("Dog"), 1);
  EXPECT_EQ(v.Add("dog"), 1);
  EXPECT_EQ(v.Lookup("DOG"), 1);
  EXPECT_EQ(v.Lookup("cat"), Vocabulary::kUnknown);
}

}  // namespace
}  // namespace sentaug
