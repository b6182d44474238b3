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

// A small sentence encoder: an embedding table averaged over tokens, then
// (in training only) a dropout mask, an affine projector and tanh.

#ifndef SENTAUG_ENCODER_H_
#define SENTAUG_ENCODER_H_

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sentaug/random.h"

namespace sentaug {

using Vector = std::vector<double>;

// Lower-cased token -> id. Id 0 is reserved for unknown tokens.
class Vocabulary {
 public:
  static constexpr int kUnknown = 0;

  Vocabulary();

  // Returns the id of `token`, adding it if new.
  int Add(const std::string& token);
  int Lookup(const std::string& token) const;
  size_t size() const { return tokens_.size(); }
  const std::vector<std::string>& tokens() const { return tokens_; }

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, int> ids_;
};

// Inverted dropout: each entry is 0 or 1/(1-p).
struct DropoutMask {
  Vector scale;

  static DropoutMask Identity(int dim);
  static DropoutMask Sample(int dim, double rate, Rng& rng);
};

enum class EncodeMode { kTrain, kEval };

class ToyEncoder {
 public:
  // Projector ~ N(0, 1/d), zero bias. Each embedding row is its own
  // N(0, 1/d) draw plus `anisotropy` times one shared N(0, 1/d) direction,
  // so that an untrained encoder, like a pretrained one, maps unrelated
  // sentences to similar vectors. 0 gives an isotropic table.
  ToyEncoder(Vocabulary vocabulary, int dim, double dropout_rate,
             uint64_t seed, double anisotropy = 1.0);

  // Explicit parameters. `embeddings` is |V| x dim row-major, `projector`
  // dim x dim row-major (output-major: z = W u + b).
  ToyEncoder(Vocabulary vocabulary, int dim, double dropout_rate,
             Vector embeddings, Vector projector, Vector bias);

  int dim() const { return dim_; }
  double dropout_rate() const { return dropout_rate_; }
  const Vocabulary& vocabulary() const { return vocabulary_; }

  // All trainable parameters in one flat array: embeddings, then projector,
  // then bias.
  std::span<double> parameters() { return params_; }
  std::span<const double> parameters() const { return params_; }
  size_t embedding_offset(int id) const { return static_cast<size_t>(id) * dim_; }
  size_t projector_offset() const { return vocabulary_.size() * dim_; }
  size_t bias_offset() const { return projector_offset() + static_cast<size_t>(dim_) * dim_; }

  std::vector<int> Ids(std::span<const std::string> tokens) const;

  // Mean of the embedding rows of `ids`.
  Vector Pool(std::span<const int> ids) const;

  // Throws ContractError on an empty token list or a mask of the wrong size.
  Vector Encode(std::span<const std::string> tokens, const DropoutMask& mask,
                EncodeMode mode) const;
  Vector EncodeEval(std::span<const std::string> tokens) const;

  bool AllFinite() const;

  // Text checkpoint: a header with dim, vocabulary size and dropout rate,
  // then the vocabulary and every parameter in shortest round-trip form.
  std::string Serialize() const;
  static ToyEncoder Deserialize(const std::string& text);

 private:
  Vocabulary vocabulary_;
  int dim_;
  double dropout_rate_;
  Vector params_;
};

Vector Encode(const ToyEncoder& encoder, std::span<const std::string> tokens,
              const DropoutMask& mask, EncodeMode mode);

// Throws UndefinedValueError if either vector is zero.
double CosineSimilarity(std::span<const double> u, std::span<const double> v);

}  // namespace sentaug

#endif  // SENTAUG_ENCODER_H_
