#pragma once

#include <array>
#include <string>
#include <vector>

#include "tsel/sim.hpp"
#include "tsel/skill.hpp"

namespace tsel {

inline constexpr int kEmbeddingDim = 64;

/// Unit-norm vector in the shared text/video space.
using Embedding = std::array<double, kEmbeddingDim>;

double cosine_similarity(const Embedding& a, const Embedding& b);

/// Paired text/video encoders mapping into one space.
class DualEncoder {
 public:
  virtual ~DualEncoder() = default;
  virtual Embedding embed_text(const std::string& caption) const = 0;
  virtual Embedding embed_video(const DemoRecord& record) const = 0;
};

/// Deterministic reference encoder: hashed bag of tokens for text; for video,
/// hashed bag of metadata tokens plus 8 coarse flow statistics.
class ReferenceDualEncoder : public DualEncoder {
 public:
  Embedding embed_text(const std::string& caption) const override;
  Embedding embed_video(const DemoRecord& record) const override;
};

struct RetrievalHit {
  std::size_t corpus_index = 0;
  double similarity = 0.0;
};

/// Object-presence filter, then descending cosine similarity to the skill
/// caption; ties break toward the lower corpus index. Returns at most m hits.
std::vector<RetrievalHit> retrieve(const SkillLabel& skill, const std::vector<DemoRecord>& corpus,
                                   const DualEncoder& encoder, int m);

inline constexpr int kDefaultRetrievalCount = 5;

}  // namespace tsel
