#pragma once

#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "tsel/scores.hpp"
#include "tsel/skill.hpp"

namespace tsel {

/// Lowercases, strips punctuation, splits on whitespace.
std::vector<std::string> tokenize(const std::string& text);

/// A model of the next-token distribution over a fixed vocabulary.
class TokenModel {
 public:
  virtual ~TokenModel() = default;
  virtual const std::vector<std::string>& vocabulary() const = 0;
  /// Probabilities over vocabulary() given the prefix; sums to 1.
  virtual std::vector<double> next_distribution(std::span<const std::string> prefix) const = 0;
};

/// Add-one-smoothed bigram model over a plain-text instruction corpus.
/// Out-of-vocabulary tokens map to "<unk>".
class NgramBackend : public TokenModel {
 public:
  explicit NgramBackend(const std::vector<std::string>& lines);

  /// Backend trained on the cooking-instruction corpus shipped in data/.
  static const NgramBackend& builtin();

  const std::vector<std::string>& vocabulary() const override { return vocab_; }
  std::vector<double> next_distribution(std::span<const std::string> prefix) const override;

  int token_index(const std::string& token) const;

 private:
  std::vector<std::string> vocab_;
  std::unordered_map<std::string, int> index_;
  int unk_ = 0;
  std::vector<std::vector<std::uint32_t>> counts_;  // [context][next], context 0 = line start
  std::vector<std::uint64_t> context_totals_;
};

/// The text of the built-in instruction corpus, one instruction per line.
const std::vector<std::string>& builtin_corpus_lines();

/// Sum over descriptor tokens of ln p(token | prompt + earlier tokens).
double sequence_loglik(const TokenModel& model, std::span<const std::string> prompt_tokens,
                       std::span<const std::string> descriptor_tokens);

/// Mean log probability per descriptor token (log-space length normalization).
double normalized_score(const TokenModel& model, std::span<const std::string> prompt_tokens,
                        std::span<const std::string> descriptor_tokens);

/// "to successfully <verb> the <recipient> with the <tool> you should".
std::vector<std::string> build_prompt(const SkillLabel& skill);

/// Scores a text continuation given a text prompt; hides tokenization so a
/// remote model may tokenize differently than the local backends.
class SequenceScorer {
 public:
  virtual ~SequenceScorer() = default;
  /// Mean per-token log probability of the continuation.
  virtual double score(const std::string& prompt, const std::string& continuation) const = 0;
};

class TokenModelScorer : public SequenceScorer {
 public:
  explicit TokenModelScorer(const TokenModel& model) : model_(model) {}
  double score(const std::string& prompt, const std::string& continuation) const override;

 private:
  const TokenModel& model_;
};

/// HTTP adapter to a hosted model that returns per-token logprobs.
/// POST {"prompt": str, "continuation": str} -> {"token_logprobs": [float]}.
class RemoteBackend : public SequenceScorer {
 public:
  RemoteBackend(std::string host, int port, std::string path = "/score",
                int timeout_seconds = 10);
  double score(const std::string& prompt, const std::string& continuation) const override;
  std::vector<double> token_logprobs(const std::string& prompt,
                                     const std::string& continuation) const;

 private:
  std::string host_;
  int port_;
  std::string path_;
  int timeout_seconds_;
};

/// Normalized likelihood of each template's filled descriptor; no ordering.
ScoreVector rank_templates_llm(const SequenceScorer& scorer, const SkillLabel& skill,
                               const std::vector<Template>& library);

/// Ids of the k largest scores, ties broken toward the lower template id.
std::vector<int> top_k(const ScoreVector& scores, int k);

}  // namespace tsel
