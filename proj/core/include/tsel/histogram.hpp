#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "tsel/codec.hpp"
#include "tsel/sim.hpp"

namespace tsel {

/// Normalized bag of codebook indices accumulated over a whole video.
struct FlowHistogram {
  std::array<double, kCodebookSize> bins{};
  std::uint64_t total_codes = 0;
};

/// Counts every code-grid cell of every frame, then normalizes to sum 1.
FlowHistogram video_histogram(const FlowVideo& video, const CodecParams& params);

/// Euclidean distance over the 64 bins. Throws UnnormalizedInput if either
/// histogram's bins do not sum to 1 within 1e-6.
double histogram_distance(const FlowHistogram& a, const FlowHistogram& b);

/// Mean histogram distance from the execution to each retrieved demo.
double score_template_flow(const FlowVideo& exec_video, const std::vector<FlowVideo>& demos,
                           const CodecParams& params);

}  // namespace tsel
