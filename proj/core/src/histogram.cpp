#include "tsel/histogram.hpp"

#include <cmath>

#include "tsel/errors.hpp"

namespace tsel {

FlowHistogram video_histogram(const FlowVideo& video, const CodecParams& params) {
  if (video.frames.empty()) throw EmptyVideo();
  FlowHistogram hist;
  std::array<std::uint64_t, kCodebookSize> counts{};
  for (const auto& frame : video.frames) {
    auto latents = encode(frame, static_cast<int>(video.width), static_cast<int>(video.height), params);
    auto q = quantize(latents, params.codebook);
    for (int idx : q.codes.indices) {
      ++counts[static_cast<std::size_t>(idx)];
      ++hist.total_codes;
    }
  }
  for (std::size_t i = 0; i < counts.size(); ++i) {
    hist.bins[i] = static_cast<double>(counts[i]) / static_cast<double>(hist.total_codes);
  }
  return hist;
}

namespace {

void check_normalized(const FlowHistogram& h) {
  double sum = 0.0;
  for (double b : h.bins) sum += b;
  if (std::abs(sum - 1.0) > 1e-6) throw UnnormalizedInput("histogram bins must sum to 1");
}

}  // namespace

double histogram_distance(const FlowHistogram& a, const FlowHistogram& b) {
  check_normalized(a);
  check_normalized(b);
  double sum = 0.0;
  for (std::size_t i = 0; i < a.bins.size(); ++i) {
    const double d = a.bins[i] - b.bins[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

double score_template_flow(const FlowVideo& exec_video, const std::vector<FlowVideo>& demos,
                           const CodecParams& params) {
  if (demos.empty()) throw EmptyDemoSet();
  const FlowHistogram exec_hist = video_histogram(exec_video, params);
  double sum = 0.0;
  for (const auto& demo : demos) {
    sum += histogram_distance(exec_hist, video_histogram(demo, params));
  }
  return sum / static_cast<double>(demos.size());
}

}  // namespace tsel
