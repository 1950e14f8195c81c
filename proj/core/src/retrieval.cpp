#include "tsel/retrieval.hpp"

#include <algorithm>
#include <cmath>

#include "tsel/errors.hpp"
#include "tsel/lang.hpp"

namespace tsel {

namespace {

constexpr int kBagDims = 56;    // hashed token dimensions
constexpr int kStatDims = 8;    // mean |flow| + 7-bin direction histogram
constexpr double kStatWeight = 0.25;

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

void add_token(Embedding& v, const std::string& token) {
  const std::uint64_t h = fnv1a64(token);
  const auto dim = static_cast<std::size_t>(h % kBagDims);
  const double sign = ((h >> 32) & 1) ? 1.0 : -1.0;
  v[dim] += sign;
}

void normalize(Embedding& v) {
  double norm = 0.0;
  for (double x : v) norm += x * x;
  norm = std::sqrt(norm);
  if (norm == 0.0) throw EmptyInput("embedding input produced a zero vector");
  for (double& x : v) x /= norm;
}

}  // namespace

double cosine_similarity(const Embedding& a, const Embedding& b) {
  double dot = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) dot += a[i] * b[i];
  return dot;
}

Embedding ReferenceDualEncoder::embed_text(const std::string& caption) const {
  const auto tokens = tokenize(caption);
  if (tokens.empty()) throw EmptyInput("caption has no tokens");
  Embedding v{};
  for (const auto& t : tokens) add_token(v, t);
  normalize(v);
  return v;
}

Embedding ReferenceDualEncoder::embed_video(const DemoRecord& record) const {
  if (record.objects.empty()) throw EmptyInput("record has no object tokens");
  Embedding v{};
  for (const auto& obj : record.objects) add_token(v, obj);
  for (const auto& t : tokenize(record.text)) add_token(v, t);

  // Coarse motion statistics in the trailing dimensions.
  double mean_mag = 0.0;
  std::array<double, kStatDims - 1> direction{};
  std::size_t samples = 0;
  for (const auto& frame : record.video.frames) {
    for (std::size_t i = 0; i + 1 < frame.size(); i += 2) {
      const double dx = frame[i];
      const double dy = frame[i + 1];
      const double mag = std::sqrt(dx * dx + dy * dy);
      mean_mag += mag;
      ++samples;
      if (mag > 1e-6) {
        const double angle = std::atan2(dy, dx);  // [-pi, pi]
        auto bin = static_cast<std::size_t>((angle + 3.14159265358979323846) /
                                            (2.0 * 3.14159265358979323846) * (kStatDims - 1));
        bin = std::min(bin, direction.size() - 1);
        direction[bin] += 1.0;
      }
    }
  }
  if (samples > 0) mean_mag /= static_cast<double>(samples);
  double dir_total = 0.0;
  for (double d : direction) dir_total += d;

  v[kBagDims] = kStatWeight * mean_mag;
  for (std::size_t i = 0; i < direction.size(); ++i) {
    v[kBagDims + 1 + i] = dir_total > 0.0 ? kStatWeight * direction[i] / dir_total : 0.0;
  }
  normalize(v);
  return v;
}

std::vector<RetrievalHit> retrieve(const SkillLabel& skill, const std::vector<DemoRecord>& corpus,
                                   const DualEncoder& encoder, int m) {
  if (corpus.empty()) throw Error("corpus is empty");
  if (m < 1) throw Error("m must be positive");
  const Embedding query =
      encoder.embed_text(skill.verb + " the " + skill.recipient + " with the " + skill.tool);

  std::vector<RetrievalHit> eligible;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& objects = corpus[i].objects;
    const bool has_tool = std::find(objects.begin(), objects.end(), skill.tool) != objects.end();
    const bool has_recipient =
        std::find(objects.begin(), objects.end(), skill.recipient) != objects.end();
    if (!has_tool || !has_recipient) continue;
    eligible.push_back({i, cosine_similarity(query, encoder.embed_video(corpus[i]))});
  }
  if (eligible.empty()) throw NoEligibleRecords();

  std::stable_sort(eligible.begin(), eligible.end(), [](const RetrievalHit& a, const RetrievalHit& b) {
    if (a.similarity != b.similarity) return a.similarity > b.similarity;
    return a.corpus_index < b.corpus_index;
  });
  if (eligible.size() > static_cast<std::size_t>(m)) eligible.resize(static_cast<std::size_t>(m));
  return eligible;
}

}  // namespace tsel
