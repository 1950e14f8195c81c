#include "tsel/lang.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <set>

#include "tsel/errors.hpp"

namespace tsel {

std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    const auto uc = static_cast<unsigned char>(c);
    if (std::isalnum(uc)) {
      current.push_back(static_cast<char>(std::tolower(uc)));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

NgramBackend::NgramBackend(const std::vector<std::string>& lines) {
  std::set<std::string> words;
  std::vector<std::vector<std::string>> tokenized;
  tokenized.reserve(lines.size());
  for (const auto& line : lines) {
    auto toks = tokenize(line);
    for (const auto& t : toks) words.insert(t);
    tokenized.push_back(std::move(toks));
  }
  words.insert("<unk>");
  vocab_.assign(words.begin(), words.end());
  for (std::size_t i = 0; i < vocab_.size(); ++i) index_[vocab_[i]] = static_cast<int>(i);
  unk_ = index_.at("<unk>");

  // Context 0 is line start; context i+1 is vocabulary word i.
  counts_.assign(vocab_.size() + 1, std::vector<std::uint32_t>(vocab_.size(), 0));
  context_totals_.assign(vocab_.size() + 1, 0);
  for (const auto& toks : tokenized) {
    int context = 0;
    for (const auto& tok : toks) {
      const int w = token_index(tok);
      ++counts_[static_cast<std::size_t>(context)][static_cast<std::size_t>(w)];
      ++context_totals_[static_cast<std::size_t>(context)];
      context = w + 1;
    }
  }
}

int NgramBackend::token_index(const std::string& token) const {
  auto it = index_.find(token);
  return it == index_.end() ? unk_ : it->second;
}

std::vector<double> NgramBackend::next_distribution(std::span<const std::string> prefix) const {
  const int context = prefix.empty() ? 0 : token_index(prefix.back()) + 1;
  const auto& row = counts_[static_cast<std::size_t>(context)];
  const double total = static_cast<double>(context_totals_[static_cast<std::size_t>(context)]) +
                       static_cast<double>(vocab_.size());
  std::vector<double> dist(vocab_.size());
  for (std::size_t i = 0; i < vocab_.size(); ++i) {
    dist[i] = (static_cast<double>(row[i]) + 1.0) / total;
  }
  return dist;
}

const NgramBackend& NgramBackend::builtin() {
  static const NgramBackend backend(builtin_corpus_lines());
  return backend;
}

namespace {

int vocab_index_or_throw(const TokenModel& model, const std::string& token) {
  const auto& vocab = model.vocabulary();
  auto it = std::find(vocab.begin(), vocab.end(), token);
  if (it != vocab.end()) return static_cast<int>(it - vocab.begin());
  auto unk = std::find(vocab.begin(), vocab.end(), "<unk>");
  if (unk != vocab.end()) return static_cast<int>(unk - vocab.begin());
  throw UnknownToken("token not in vocabulary: " + token);
}

}  // namespace

double sequence_loglik(const TokenModel& model, std::span<const std::string> prompt_tokens,
                       std::span<const std::string> descriptor_tokens) {
  if (descriptor_tokens.empty()) throw EmptyDescriptor();
  std::vector<std::string> prefix(prompt_tokens.begin(), prompt_tokens.end());
  double loglik = 0.0;
  for (const auto& token : descriptor_tokens) {
    const auto dist = model.next_distribution(prefix);
    loglik += std::log(dist[static_cast<std::size_t>(vocab_index_or_throw(model, token))]);
    prefix.push_back(token);
  }
  return loglik;
}

double normalized_score(const TokenModel& model, std::span<const std::string> prompt_tokens,
                        std::span<const std::string> descriptor_tokens) {
  return sequence_loglik(model, prompt_tokens, descriptor_tokens) /
         static_cast<double>(descriptor_tokens.size());
}

std::vector<std::string> build_prompt(const SkillLabel& skill) {
  return tokenize("to successfully " + skill.verb + " the " + skill.recipient + " with the " +
                  skill.tool + " you should");
}

double TokenModelScorer::score(const std::string& prompt, const std::string& continuation) const {
  const auto prompt_tokens = tokenize(prompt);
  const auto continuation_tokens = tokenize(continuation);
  return normalized_score(model_, prompt_tokens, continuation_tokens);
}

ScoreVector rank_templates_llm(const SequenceScorer& scorer, const SkillLabel& skill,
                               const std::vector<Template>& library) {
  if (library.empty()) throw Error("template library is empty");
  std::string prompt = "to successfully " + skill.verb + " the " + skill.recipient +
                       " with the " + skill.tool + " you should";
  ScoreVector result;
  result.higher_is_better = true;
  for (const auto& tmpl : library) {
    result.ids.push_back(tmpl.id);
    result.scores.push_back(scorer.score(prompt, fill_descriptor(tmpl, skill)));
  }
  return result;
}

std::vector<int> top_k(const ScoreVector& scores, int k) {
  if (k < 0 || static_cast<std::size_t>(k) > scores.size()) throw KTooLarge();
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (scores.scores[a] != scores.scores[b]) return scores.scores[a] > scores.scores[b];
    return scores.ids[a] < scores.ids[b];
  });
  std::vector<int> ids;
  ids.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) ids.push_back(scores.ids[order[static_cast<std::size_t>(i)]]);
  return ids;
}

}  // namespace tsel
