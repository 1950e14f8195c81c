#include "tsel/appearance.hpp"

#include <cmath>
#include <random>

#include "tsel/errors.hpp"

namespace tsel {

std::vector<std::size_t> subsample_indices(std::size_t frame_count) {
  if (frame_count < 1) throw EmptyVideo();
  std::vector<std::size_t> indices(kSubsampleCount);
  for (int i = 0; i < kSubsampleCount; ++i) {
    indices[static_cast<std::size_t>(i)] = static_cast<std::size_t>(
        std::llround(static_cast<double>(i) * static_cast<double>(frame_count - 1) / 15.0));
  }
  return indices;
}

namespace {

// Fixed seeded projection from 16x16 pixel space to the embedding space.
const std::vector<double>& projection_matrix() {
  static const std::vector<double> matrix = [] {
    constexpr std::size_t rows = kEmbeddingDim;
    constexpr std::size_t cols = kAppearanceSize * kAppearanceSize;
    std::mt19937_64 rng(0xA11CE5EEDULL);
    std::normal_distribution<double> dist(0.0, 1.0 / 16.0);
    std::vector<double> m(rows * cols);
    for (auto& v : m) v = dist(rng);
    return m;
  }();
  return matrix;
}

}  // namespace

Embedding video_embedding_appearance(const std::vector<AppearanceFrame>& frames) {
  if (frames.empty()) throw EmptyVideo();
  const auto indices = subsample_indices(frames.size());
  constexpr std::size_t pixels = kAppearanceSize * kAppearanceSize;

  std::vector<double> mean(pixels, 0.0);
  for (std::size_t idx : indices) {
    const auto& frame = frames[idx];
    if (frame.size() != pixels) throw Error("appearance frame has wrong size");
    for (std::size_t p = 0; p < pixels; ++p) mean[p] += frame[p];
  }
  for (auto& v : mean) v /= static_cast<double>(kSubsampleCount);

  const auto& proj = projection_matrix();
  Embedding out{};
  for (std::size_t r = 0; r < kEmbeddingDim; ++r) {
    double acc = 0.0;
    const double* row = proj.data() + r * pixels;
    for (std::size_t p = 0; p < pixels; ++p) acc += row[p] * mean[p];
    out[r] = acc;
  }
  double norm = 0.0;
  for (double v : out) norm += v * v;
  norm = std::sqrt(norm);
  if (norm == 0.0) throw EmptyVideo("appearance frames are identically zero");
  for (double& v : out) v /= norm;
  return out;
}

double score_template_appearance(const std::vector<AppearanceFrame>& exec_frames,
                                 const std::vector<DemoRecord>& demos) {
  if (demos.empty()) throw EmptyDemoSet();
  const Embedding exec_embedding = video_embedding_appearance(exec_frames);
  double sum = 0.0;
  for (const auto& demo : demos) {
    sum += 1.0 - cosine_similarity(exec_embedding, video_embedding_appearance(demo.appearance));
  }
  return sum / static_cast<double>(demos.size());
}

}  // namespace tsel
