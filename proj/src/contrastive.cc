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

#include "sentaug/contrastive.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <set>

#include "sentaug/errors.h"
#include "sentaug/io.h"

namespace sentaug {
namespace {

struct Forward {
  std::vector<int> ids;
  Vector masked;  // pooled embedding after dropout
  Vector h;
};

Forward RunForward(const ToyEncoder& enc, std::span<const std::string> tokens,
                   const DropoutMask& mask) {
  if (tokens.empty()) throw ContractError("cannot encode an empty token list");
  Forward f;
  f.ids = enc.Ids(tokens);
  f.masked = enc.Pool(f.ids);
  const int d = enc.dim();
  for (int k = 0; k < d; ++k) f.masked[k] *= mask.scale[k];
  const std::span<const double> p = enc.parameters();
  const double* w = p.data() + enc.projector_offset();
  const double* b = p.data() + enc.bias_offset();
  f.h.resize(static_cast<size_t>(d));
  for (int r = 0; r < d; ++r) {
    double z = b[r];
    for (int c = 0; c < d; ++c) z += w[r * d + c] * f.masked[c];
    f.h[r] = std::tanh(z);
  }
  return f;
}

void RunBackward(const ToyEncoder& enc, const Forward& f,
                 const DropoutMask& mask, const Vector& dh,
                 std::vector<double>& grad) {
  const int d = enc.dim();
  const std::span<const double> p = enc.parameters();
  const double* w = p.data() + enc.projector_offset();
  double* gw = grad.data() + enc.projector_offset();
  double* gb = grad.data() + enc.bias_offset();
  Vector du(static_cast<size_t>(d), 0.0);
  for (int r = 0; r < d; ++r) {
    const double dz = dh[r] * (1.0 - f.h[r] * f.h[r]);
    gb[r] += dz;
    for (int c = 0; c < d; ++c) {
      gw[r * d + c] += dz * f.masked[c];
      du[c] += w[r * d + c] * dz;
    }
  }
  const double inv = 1.0 / static_cast<double>(f.ids.size());
  for (int id : f.ids) {
    double* ge = grad.data() + enc.embedding_offset(id);
    for (int k = 0; k < d; ++k) ge[k] += du[k] * mask.scale[k] * inv;
  }
}

double Norm(const Vector& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

// -log softmax of row[i] within row.
double RowLoss(const std::vector<double>& logits, size_t i) {
  const double target = logits[i];
  const double top = *std::max_element(logits.begin(), logits.end());
  if (target >= top) {
    double rest = 0.0;
    for (size_t j = 0; j < logits.size(); ++j) {
      if (j != i) rest += std::exp(logits[j] - target);
    }
    return std::log1p(rest);
  }
  double sum = 0.0;
  for (double s : logits) sum += std::exp(s - top);
  return top + std::log(sum) - target;
}

template <typename T>
T ParseNumber(const std::string& key, const std::string& value, int line) {
  T out{};
  const char* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, "bad value '" + value + "' for " + key);
  }
  return out;
}

}  // namespace

InfoNceResult InfoNceFromSimilarities(
    const std::vector<std::vector<double>>& similarities, double temperature) {
  if (!(temperature > 0.0)) throw ConfigError("temperature must be positive");
  const size_t n = similarities.size();
  if (n == 0) throw ContractError("InfoNCE needs at least one pair");
  InfoNceResult result;
  result.per_example.resize(n);
  double total = 0.0;
  for (size_t i = 0; i < n; ++i) {
    if (similarities[i].size() != n) {
      throw ContractError("similarity matrix must be square");
    }
    std::vector<double> logits(n);
    for (size_t j = 0; j < n; ++j) logits[j] = similarities[i][j] / temperature;
    result.per_example[i] = RowLoss(logits, i);
    total += result.per_example[i];
  }
  result.mean = total / static_cast<double>(n);
  return result;
}

InfoNceResult InfoNceLoss(std::span<const std::pair<Vector, Vector>> pairs,
                          double temperature) {
  if (!(temperature > 0.0)) throw ConfigError("temperature must be positive");
  const size_t n = pairs.size();
  std::vector<std::vector<double>> sims(n, std::vector<double>(n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      sims[i][j] = CosineSimilarity(pairs[i].first, pairs[j].second);
    }
  }
  return InfoNceFromSimilarities(sims, temperature);
}

std::vector<TrainingPair> BuildBatch(std::span<const AugmentedPair> corpus,
                                     double proportion, uint64_t seed,
                                     std::span<const size_t> indices) {
  std::vector<TrainingPair> batch;
  batch.reserve(indices.size());
  for (size_t i : indices) {
    const AugmentedPair& pair = corpus[i];
    Rng rng = MakeRng(seed, {static_cast<uint64_t>(i)});
    const bool augmented = Bernoulli(rng, proportion);
    batch.push_back({pair.anchor_tokens,
                     augmented ? pair.positive_tokens : pair.anchor_tokens});
  }
  return batch;
}

BatchMasks BatchMasks::Identity(size_t n, int dim) {
  BatchMasks m;
  m.anchor.assign(n, DropoutMask::Identity(dim));
  m.positive.assign(n, DropoutMask::Identity(dim));
  return m;
}

double BatchLoss(const ToyEncoder& encoder, std::span<const TrainingPair> batch,
                 const BatchMasks& masks, double temperature,
                 std::vector<double>* gradient) {
  if (!(temperature > 0.0)) throw ConfigError("temperature must be positive");
  const size_t n = batch.size();
  if (n == 0) throw ContractError("empty batch");
  std::vector<Forward> anchors, positives;
  anchors.reserve(n);
  positives.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    anchors.push_back(RunForward(encoder, batch[i].anchor, masks.anchor[i]));
    positives.push_back(RunForward(encoder, batch[i].positive, masks.positive[i]));
  }
  std::vector<double> anorm(n), pnorm(n);
  for (size_t i = 0; i < n; ++i) {
    anorm[i] = Norm(anchors[i].h);
    pnorm[i] = Norm(positives[i].h);
    if (anorm[i] == 0.0 || pnorm[i] == 0.0) {
      throw UndefinedValueError("encoder produced a zero vector");
    }
  }
  std::vector<std::vector<double>> cos(n, std::vector<double>(n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      double dot = 0;
      for (size_t k = 0; k < anchors[i].h.size(); ++k) {
        dot += anchors[i].h[k] * positives[j].h[k];
      }
      cos[i][j] = dot / (anorm[i] * pnorm[j]);
    }
  }
  const InfoNceResult loss = InfoNceFromSimilarities(cos, temperature);
  if (gradient == nullptr) return loss.mean;

  gradient->assign(encoder.parameters().size(), 0.0);
  const size_t d = static_cast<size_t>(encoder.dim());
  std::vector<Vector> da(n, Vector(d, 0.0)), dp(n, Vector(d, 0.0));
  for (size_t i = 0; i < n; ++i) {
    std::vector<double> logits(n);
    for (size_t j = 0; j < n; ++j) logits[j] = cos[i][j] / temperature;
    const double top = *std::max_element(logits.begin(), logits.end());
    double sum = 0;
    for (double& s : logits) sum += (s = std::exp(s - top));
    for (size_t j = 0; j < n; ++j) {
      const double softmax = logits[j] / sum;
      const double g = (softmax - (i == j ? 1.0 : 0.0)) /
                       (static_cast<double>(n) * temperature);
      if (g == 0.0) continue;
      const Vector& a = anchors[i].h;
      const Vector& p = positives[j].h;
      const double inv = 1.0 / (anorm[i] * pnorm[j]);
      const double ca = cos[i][j] / (anorm[i] * anorm[i]);
      const double cp = cos[i][j] / (pnorm[j] * pnorm[j]);
      for (size_t k = 0; k < d; ++k) {
        da[i][k] += g * (p[k] * inv - ca * a[k]);
        dp[j][k] += g * (a[k] * inv - cp * p[k]);
      }
    }
  }
  for (size_t i = 0; i < n; ++i) {
    RunBackward(encoder, anchors[i], masks.anchor[i], da[i], *gradient);
    RunBackward(encoder, positives[i], masks.positive[i], dp[i], *gradient);
  }
  return loss.mean;
}

void TrainConfig::Validate() const {
  if (!(temperature > 0.0)) throw ConfigError("temperature must be positive");
  if (batch_size < 1) throw ConfigError("batch_size must be at least 1");
  if (!(dropout >= 0.0 && dropout < 1.0)) {
    throw ConfigError("dropout must lie in [0, 1)");
  }
  if (!(proportion >= 0.0 && proportion <= 1.0)) {
    throw ConfigError("proportion must lie in [0, 1]");
  }
  if (!(learning_rate >= 0.0) || !std::isfinite(learning_rate)) {
    throw ConfigError("learning_rate must be a finite non-negative number");
  }
  if (epochs < 0) throw ConfigError("epochs must be non-negative");
  if (!(init_anisotropy >= 0.0) || !std::isfinite(init_anisotropy)) {
    throw ConfigError("init_anisotropy must be a finite non-negative number");
  }
  if (dim < 1) throw ConfigError("dim must be positive");
  if (!(gradcheck_tolerance > 0.0)) {
    throw ConfigError("gradcheck_tolerance must be positive");
  }
  if (gradcheck_samples < 1) throw ConfigError("gradcheck_samples must be positive");
}

TrainConfig ParseTrainConfig(const std::string& text) {
  TrainConfig c;
  const std::vector<std::string> lines = SplitLines(text);
  for (size_t li = 0; li < lines.size(); ++li) {
    const int line_no = static_cast<int>(li) + 1;
    std::string line = lines[li];
    if (const size_t hash = line.find('#'); hash != std::string::npos) {
      line.resize(hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    const size_t eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(line_no, "expected key=value");
    const std::string key = Trim(line.substr(0, eq));
    const std::string value = Trim(line.substr(eq + 1));
    try {
      if (key == "temperature") {
        c.temperature = ParseNumber<double>(key, value, line_no);
      } else if (key == "batch_size") {
        c.batch_size = ParseNumber<int>(key, value, line_no);
      } else if (key == "dropout") {
        c.dropout = ParseNumber<double>(key, value, line_no);
      } else if (key == "proportion") {
        c.proportion = ParseNumber<double>(key, value, line_no);
      } else if (key == "learning_rate") {
        c.learning_rate = ParseNumber<double>(key, value, line_no);
      } else if (key == "epochs") {
        c.epochs = ParseNumber<int>(key, value, line_no);
      } else if (key == "seed") {
        c.seed = ParseNumber<uint64_t>(key, value, line_no);
      } else if (key == "method") {
        c.method = ParseMethod(value);
      } else if (key == "strategy") {
        c.strategy = ParseRuleStrategy(value);
      } else if (key == "rate") {
        c.baseline_rate = ParseNumber<double>(key, value, line_no);
      } else if (key == "dim") {
        c.dim = ParseNumber<int>(key, value, line_no);
      } else if (key == "optimizer") {
        if (value == "sgd") {
          c.optimizer = Optimizer::kSgd;
        } else if (value == "adam") {
          c.optimizer = Optimizer::kAdam;
        } else {
          throw ConfigError("optimizer must be sgd or adam");
        }
      } else if (key == "init_anisotropy") {
        c.init_anisotropy = ParseNumber<double>(key, value, line_no);
      } else if (key == "gradcheck_tolerance") {
        c.gradcheck_tolerance = ParseNumber<double>(key, value, line_no);
      } else if (key == "gradcheck_samples") {
        c.gradcheck_samples = ParseNumber<int>(key, value, line_no);
      } else {
        throw ParseError(line_no, "unknown key '" + key + "'");
      }
    } catch (const ConfigError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  try {
    c.Validate();
  } catch (const ConfigError& e) {
    throw ParseError(0, e.what());
  }
  return c;
}

TrainConfig LoadTrainConfig(const std::string& path) {
  const std::string text = ReadFile(path);
  try {
    return ParseTrainConfig(text);
  } catch (const ParseError& e) {
    const std::string where =
        e.line() > 0 ? path + ":" + std::to_string(e.line()) : path;
    throw DataError(where + ": " + e.message());
  }
}

Vocabulary BuildVocabulary(std::span<const AugmentedPair> pairs) {
  Vocabulary vocab;
  for (const AugmentedPair& p : pairs) {
    for (const std::string& t : p.anchor_tokens) vocab.Add(t);
    for (const std::string& t : p.positive_tokens) vocab.Add(t);
  }
  return vocab;
}

TrainResult Train(const std::vector<ParsedSentence>& corpus,
                  const TrainConfig& config, const AugmentConfig& augment) {
  config.Validate();
  if (corpus.empty()) throw ConfigError("training corpus is empty");
  AugmentConfig aug = augment;
  aug.strategy = config.strategy;
  aug.baseline.rate = config.baseline_rate;
  std::vector<AugmentedPair> pairs =
      AugmentCorpus(corpus, config.method, DeriveSeed(config.seed, {1}), aug);

  ToyEncoder encoder(BuildVocabulary(pairs), config.dim, config.dropout,
                     DeriveSeed(config.seed, {2}), config.init_anisotropy);
  TrainResult result{encoder, encoder, {}, {}};
  ToyEncoder& enc = result.encoder;

  const size_t n = pairs.size();
  const size_t batch_size = static_cast<size_t>(config.batch_size);
  std::vector<size_t> order(n);
  std::vector<double> grad;
  std::vector<double> m1, m2;
  if (config.optimizer == Optimizer::kAdam) {
    m1.assign(enc.parameters().size(), 0.0);
    m2.assign(enc.parameters().size(), 0.0);
  }
  uint64_t step = 0;
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    const uint64_t e = static_cast<uint64_t>(epoch);
    std::iota(order.begin(), order.end(), 0);
    Rng shuffle_rng = MakeRng(config.seed, {3, e});
    std::shuffle(order.begin(), order.end(), shuffle_rng);
    const uint64_t batch_seed = DeriveSeed(config.seed, {4, e});
    for (size_t start = 0; start < n; start += batch_size) {
      const size_t end = std::min(n, start + batch_size);
      if (end - start < 2) continue;
      const std::span<const size_t> members(order.data() + start, end - start);
      const std::vector<TrainingPair> batch =
          BuildBatch(pairs, config.proportion, batch_seed, members);
      BatchMasks masks;
      for (size_t i = 0; i < batch.size(); ++i) {
        Rng mask_rng = MakeRng(config.seed, {5, step, static_cast<uint64_t>(i)});
        masks.anchor.push_back(DropoutMask::Sample(enc.dim(), config.dropout, mask_rng));
        masks.positive.push_back(DropoutMask::Sample(enc.dim(), config.dropout, mask_rng));
      }
      result.loss_trace.push_back(
          BatchLoss(enc, batch, masks, config.temperature, &grad));
      ++step;

      std::span<double> params = enc.parameters();
      if (config.optimizer == Optimizer::kSgd) {
        for (size_t k = 0; k < params.size(); ++k) {
          params[k] -= config.learning_rate * grad[k];
        }
      } else {
        constexpr double kBeta1 = 0.9, kBeta2 = 0.999, kEps = 1e-8;
        const double c1 = 1.0 - std::pow(kBeta1, static_cast<double>(step));
        const double c2 = 1.0 - std::pow(kBeta2, static_cast<double>(step));
        for (size_t k = 0; k < params.size(); ++k) {
          m1[k] = kBeta1 * m1[k] + (1 - kBeta1) * grad[k];
          m2[k] = kBeta2 * m2[k] + (1 - kBeta2) * grad[k] * grad[k];
          params[k] -= config.learning_rate * (m1[k] / c1) /
                       (std::sqrt(m2[k] / c2) + kEps);
        }
      }
    }
  }
  result.pairs = std::move(pairs);
  return result;
}

std::string LossTraceCsv(std::span<const double> trace) {
  std::string out = "step,loss\n";
  char buf[64];
  for (size_t i = 0; i < trace.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%zu,%.17g\n", i + 1, trace[i]);
    out += buf;
  }
  return out;
}

std::vector<double> AnalyticGradient(const ToyEncoder& encoder,
                                     std::span<const TrainingPair> batch,
                                     double temperature) {
  std::vector<double> grad;
  BatchLoss(encoder, batch, BatchMasks::Identity(batch.size(), encoder.dim()),
            temperature, &grad);
  return grad;
}

std::string GradientCheckReport::Describe() const {
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "%s: %zu parameters checked, max relative error %.3e at "
                "parameter %zu",
                passed ? "PASS" : "FAIL", entries.size(), max_relative_error,
                worst_parameter);
  return buf;
}

GradientCheckReport CheckGradients(const ToyEncoder& encoder,
                                   std::span<const TrainingPair> batch,
                                   double temperature,
                                   const GradientCheckOptions& options,
                                   const GradientFn& gradient) {
  const std::vector<double> analytic = gradient(encoder, batch, temperature);
  if (analytic.size() != encoder.parameters().size()) {
    throw ContractError("gradient size does not match parameter count");
  }

  std::set<int> ids;
  for (const TrainingPair& p : batch) {
    for (int id : encoder.Ids(p.anchor)) ids.insert(id);
    for (int id : encoder.Ids(p.positive)) ids.insert(id);
  }
  std::vector<size_t> active;
  const size_t d = static_cast<size_t>(encoder.dim());
  for (int id : ids) {
    for (size_t k = 0; k < d; ++k) active.push_back(encoder.embedding_offset(id) + k);
  }
  for (size_t k = encoder.projector_offset(); k < encoder.parameters().size(); ++k) {
    active.push_back(k);
  }
  Rng rng(options.seed);
  const size_t count = std::min(active.size(), static_cast<size_t>(options.samples));
  for (size_t i = 0; i < count; ++i) {
    std::swap(active[i], active[i + UniformIndex(rng, active.size() - i)]);
  }
  active.resize(count);

  const BatchMasks masks = BatchMasks::Identity(batch.size(), encoder.dim());
  ToyEncoder probe = encoder;
  GradientCheckReport report;
  for (size_t k : active) {
    double& param = probe.parameters()[k];
    const double saved = param;
    param = saved + options.step;
    const double plus = BatchLoss(probe, batch, masks, temperature, nullptr);
    param = saved - options.step;
    const double minus = BatchLoss(probe, batch, masks, temperature, nullptr);
    param = saved;
    const double numeric = (plus - minus) / (2.0 * options.step);
    const double denom =
        std::max({std::abs(analytic[k]), std::abs(numeric), 1e-6});
    const double rel = std::abs(analytic[k] - numeric) / denom;
    report.entries.push_back({k, analytic[k], numeric, rel});
    if (rel > report.max_relative_error || report.entries.size() == 1) {
      report.max_relative_error = rel;
      report.worst_parameter = k;
    }
  }
  report.passed = report.max_relative_error < options.tolerance;
  return report;
}

}  // namespace sentaug
