#pragma once

#include <vector>

#include "tsel/retrieval.hpp"
#include "tsel/sim.hpp"

namespace tsel {

inline constexpr int kSubsampleCount = 16;

/// 16 evenly spaced frame indices: round(i * (n - 1) / 15). Duplicates are
/// allowed when the video is shorter than 16 frames.
std::vector<std::size_t> subsample_indices(std::size_t frame_count);

/// Mean of 16 subsampled frames, fixed random projection to 64-d, unit norm.
/// Deliberately blind to flow; this is the pretrained-encoder stand-in.
Embedding video_embedding_appearance(const std::vector<AppearanceFrame>& frames);

/// Mean cosine distance (1 - similarity) from the execution to each demo.
double score_template_appearance(const std::vector<AppearanceFrame>& exec_frames,
                                 const std::vector<DemoRecord>& demos);

}  // namespace tsel
