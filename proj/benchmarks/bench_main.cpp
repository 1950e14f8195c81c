#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "tsel/codec.hpp"
#include "tsel/histogram.hpp"
#include "tsel/sim.hpp"
#include "tsel/skill.hpp"

using namespace tsel;

namespace {

std::vector<float> random_frame(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n(0.0, 1.0);
  std::vector<float> frame(kFlowSize * kFlowSize * 2);
  for (auto& v : frame) v = static_cast<float>(n(rng));
  return frame;
}

CodecParams bench_params() {
  return init_codec_params(kPatchDim, 16, kLatentDim, kCodebookSize, 0.25, 7);
}

void BM_EncodeFrame(benchmark::State& state) {
  const CodecParams p = bench_params();
  const auto frame = random_frame(1);
  for (auto _ : state) {
    auto grid = encode(frame, kFlowSize, kFlowSize, p);
    benchmark::DoNotOptimize(grid.values.data());
  }
}
BENCHMARK(BM_EncodeFrame);

void BM_QuantizeFrame(benchmark::State& state) {
  const CodecParams p = bench_params();
  const auto grid = encode(random_frame(2), kFlowSize, kFlowSize, p);
  for (auto _ : state) {
    auto q = quantize(grid, p.codebook);
    benchmark::DoNotOptimize(q.codes.indices.data());
  }
}
BENCHMARK(BM_QuantizeFrame);

void BM_TrainingGradients(benchmark::State& state) {
  const CodecParams p = bench_params();
  const auto frame = random_frame(3);
  for (auto _ : state) {
    auto g = training_gradients(frame, kFlowSize, kFlowSize, p);
    benchmark::DoNotOptimize(g.enc_w1.data());
  }
}
BENCHMARK(BM_TrainingGradients);

void BM_VideoHistogram(benchmark::State& state) {
  const CodecParams p = bench_params();
  FlowVideo video;
  for (int f = 0; f < kEpisodeFrames; ++f) video.frames.push_back(random_frame(10 + f));
  for (auto _ : state) {
    auto h = video_histogram(video, p);
    benchmark::DoNotOptimize(h.bins.data());
  }
}
BENCHMARK(BM_VideoHistogram);

void BM_HistogramDistance(benchmark::State& state) {
  const CodecParams p = bench_params();
  FlowVideo a, b;
  for (int f = 0; f < 8; ++f) {
    a.frames.push_back(random_frame(20 + f));
    b.frames.push_back(random_frame(40 + f));
  }
  const auto ha = video_histogram(a, p);
  const auto hb = video_histogram(b, p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(histogram_distance(ha, hb));
  }
}
BENCHMARK(BM_HistogramDistance);

void BM_ExecuteTemplate(benchmark::State& state) {
  const Scene scene = make_scene({"wipe", "cloth", "plate"}, 202);
  const Template& tmpl = best_known_template("wipe");
  for (auto _ : state) {
    auto result = execute_template(scene, tmpl, kEpisodeFrames + 1, 303);
    benchmark::DoNotOptimize(result.progress.data());
  }
}
BENCHMARK(BM_ExecuteTemplate);

}  // namespace

BENCHMARK_MAIN();
