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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <utility>

#include "sentaug/errors.h"
#include "sentaug/io.h"

namespace sentaug {
namespace {

constexpr std::string_view kMagic = "sentaug-encoder 1";

void AppendDouble(std::string& out, double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, ptr);
}

double ParseDouble(const std::string& s, int line) {
  double v = 0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, "bad number '" + s + "'");
  }
  return v;
}

}  // namespace

Vocabulary::Vocabulary() { Add("<unk>"); }

int Vocabulary::Add(const std::string& token) {
  const std::string key = ToLower(token);
  auto [it, inserted] = ids_.emplace(key, static_cast<int>(tokens_.size()));
  if (inserted) tokens_.push_back(key);
  return it->second;
}

int Vocabulary::Lookup(const std::string& token) const {
  auto it = ids_.find(ToLower(token));
  return it == ids_.end() ? kUnknown : it->second;
}

DropoutMask DropoutMask::Identity(int dim) {
  return DropoutMask{Vector(static_cast<size_t>(dim), 1.0)};
}

DropoutMask DropoutMask::Sample(int dim, double rate, Rng& rng) {
  if (rate <= 0.0) return Identity(dim);
  const double kept = 1.0 / (1.0 - rate);
  DropoutMask mask{Vector(static_cast<size_t>(dim))};
  for (double& s : mask.scale) s = Bernoulli(rng, rate) ? 0.0 : kept;
  return mask;
}

ToyEncoder::ToyEncoder(Vocabulary vocabulary, int dim, double dropout_rate,
                       uint64_t seed, double anisotropy)
    : vocabulary_(std::move(vocabulary)), dim_(dim), dropout_rate_(dropout_rate) {
  if (dim <= 0) throw ConfigError("encoder dimension must be positive");
  if (!(dropout_rate >= 0.0 && dropout_rate < 1.0)) {
    throw ConfigError("dropout rate must lie in [0, 1)");
  }
  params_.resize(bias_offset() + dim_);
  Rng rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0 / std::sqrt(dim));
  for (size_t i = 0; i < bias_offset(); ++i) params_[i] = normal(rng);
  Vector shared(static_cast<size_t>(dim));
  for (double& v : shared) v = anisotropy * normal(rng);
  for (size_t i = 0; i < projector_offset(); ++i) params_[i] += shared[i % dim];
}

ToyEncoder::ToyEncoder(Vocabulary vocabulary, int dim, double dropout_rate,
                       Vector embeddings, Vector projector, Vector bias)
    : vocabulary_(std::move(vocabulary)), dim_(dim), dropout_rate_(dropout_rate) {
  if (dim <= 0) throw ConfigError("encoder dimension must be positive");
  if (!(dropout_rate >= 0.0 && dropout_rate < 1.0)) {
    throw ConfigError("dropout rate must lie in [0, 1)");
  }
  const size_t d = static_cast<size_t>(dim);
  if (embeddings.size() != vocabulary_.size() * d || projector.size() != d * d ||
      bias.size() != d) {
    throw ContractError("encoder parameter shapes do not match dim/vocabulary");
  }
  params_ = std::move(embeddings);
  params_.insert(params_.end(), projector.begin(), projector.end());
  params_.insert(params_.end(), bias.begin(), bias.end());
}

std::vector<int> ToyEncoder::Ids(std::span<const std::string> tokens) const {
  std::vector<int> ids;
  ids.reserve(tokens.size());
  for (const std::string& t : tokens) ids.push_back(vocabulary_.Lookup(t));
  return ids;
}

Vector ToyEncoder::Pool(std::span<const int> ids) const {
  Vector pooled(static_cast<size_t>(dim_), 0.0);
  for (int id : ids) {
    const double* row = params_.data() + embedding_offset(id);
    for (int k = 0; k < dim_; ++k) pooled[k] += row[k];
  }
  const double inv = 1.0 / static_cast<double>(ids.size());
  for (double& v : pooled) v *= inv;
  return pooled;
}

Vector ToyEncoder::Encode(std::span<const std::string> tokens,
                          const DropoutMask& mask, EncodeMode mode) const {
  if (tokens.empty()) throw ContractError("cannot encode an empty token list");
  const std::vector<int> ids = Ids(tokens);
  Vector pooled = Pool(ids);
  if (mode == EncodeMode::kEval) return pooled;
  if (mask.scale.size() != static_cast<size_t>(dim_)) {
    throw ContractError("dropout mask size does not match encoder dimension");
  }
  for (int k = 0; k < dim_; ++k) pooled[k] *= mask.scale[k];
  Vector h(static_cast<size_t>(dim_));
  const double* w = params_.data() + projector_offset();
  const double* b = params_.data() + bias_offset();
  for (int r = 0; r < dim_; ++r) {
    double z = b[r];
    for (int c = 0; c < dim_; ++c) z += w[r * dim_ + c] * pooled[c];
    h[r] = std::tanh(z);
  }
  return h;
}

Vector ToyEncoder::EncodeEval(std::span<const std::string> tokens) const {
  return Encode(tokens, DropoutMask{}, EncodeMode::kEval);
}

bool ToyEncoder::AllFinite() const {
  for (double v : params_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

std::string ToyEncoder::Serialize() const {
  std::string out(kMagic);
  out += "\ndim " + std::to_string(dim_);
  out += "\nvocab " + std::to_string(vocabulary_.size());
  out += "\ndropout ";
  AppendDouble(out, dropout_rate_);
  out += "\ntokens\n";
  for (const std::string& t : vocabulary_.tokens()) out += t + "\n";
  auto rows = [&](const char* name, size_t offset, size_t count) {
    out += name;
    out += '\n';
    for (size_t r = 0; r < count; ++r) {
      for (int k = 0; k < dim_; ++k) {
        if (k > 0) out += ' ';
        AppendDouble(out, params_[offset + r * dim_ + k]);
      }
      out += '\n';
    }
  };
  rows("embeddings", 0, vocabulary_.size());
  rows("projector", projector_offset(), static_cast<size_t>(dim_));
  rows("bias", bias_offset(), 1);
  return out;
}

ToyEncoder ToyEncoder::Deserialize(const std::string& text) {
  const std::vector<std::string> lines = SplitLines(text);
  size_t at = 0;
  auto next = [&]() -> const std::string& {
    if (at >= lines.size()) {
      throw ParseError(static_cast<int>(at) + 1, "unexpected end of checkpoint");
    }
    return lines[at++];
  };
  auto header = [&](std::string_view key) {
    const std::string& line = next();
    if (line.rfind(std::string(key) + " ", 0) != 0) {
      throw ParseError(static_cast<int>(at), "expected '" + std::string(key) + "'");
    }
    return line.substr(key.size() + 1);
  };
  if (next() != kMagic) throw ParseError(1, "not a sentaug encoder checkpoint");
  int dim = 0;
  long vocab_size = 0;
  try {
    dim = std::stoi(header("dim"));
    vocab_size = std::stol(header("vocab"));
  } catch (const std::logic_error&) {
    throw ParseError(static_cast<int>(at), "bad integer");
  }
  if (dim <= 0 || vocab_size <= 0) {
    throw ParseError(static_cast<int>(at), "dim and vocab must be positive");
  }
  const double dropout = ParseDouble(header("dropout"), static_cast<int>(at));
  if (next() != "tokens") throw ParseError(static_cast<int>(at), "expected 'tokens'");
  Vocabulary vocab;
  for (long i = 0; i < vocab_size; ++i) {
    const std::string& token = next();
    if (vocab.Add(token) != i) {
      throw ParseError(static_cast<int>(at), "duplicate or misplaced token '" + token + "'");
    }
  }
  auto read_rows = [&](const char* name, size_t count) {
    if (next() != name) {
      throw ParseError(static_cast<int>(at), std::string("expected '") + name + "'");
    }
    Vector values;
    values.reserve(count * dim);
    for (size_t r = 0; r < count; ++r) {
      const std::string& line = next();
      const std::vector<std::string> cols = Split(line, ' ');
      if (cols.size() != static_cast<size_t>(dim)) {
        throw ParseError(static_cast<int>(at), "expected " + std::to_string(dim) + " values");
      }
      for (const std::string& c : cols) values.push_back(ParseDouble(c, static_cast<int>(at)));
    }
    return values;
  };
  Vector emb = read_rows("embeddings", static_cast<size_t>(vocab_size));
  Vector proj = read_rows("projector", static_cast<size_t>(dim));
  Vector bias = read_rows("bias", 1);
  return ToyEncoder(std::move(vocab), dim, dropout, std::move(emb),
                    std::move(proj), std::move(bias));
}

Vector Encode(const ToyEncoder& encoder, std::span<const std::string> tokens,
              const DropoutMask& mask, EncodeMode mode) {
  return encoder.Encode(tokens, mask, mode);
}

double CosineSimilarity(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) throw ContractError("vector sizes differ");
  double dot = 0, nu = 0, nv = 0;
  for (size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    nu += u[i] * u[i];
    nv += v[i] * v[i];
  }
  if (nu == 0.0 || nv == 0.0) {
    throw UndefinedValueError("cosine similarity of a zero vector");
  }
  const double c = dot / (std::sqrt(nu) * std::sqrt(nv));
  return std::clamp(c, -1.0, 1.0);
}

}  // namespace sentaug
