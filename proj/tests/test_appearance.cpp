#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "tsel/appearance.hpp"
#include "tsel/errors.hpp"

using namespace tsel;

namespace {

AppearanceFrame random_appearance(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  AppearanceFrame f(kAppearanceSize * kAppearanceSize);
  for (auto& v : f) v = static_cast<float>(u(rng));
  return f;
}

}  // namespace

TEST_CASE("subsampling picks evenly spaced frame indices") {
  auto exact = subsample_indices(16);
  std::vector<std::size_t> expected;
  for (std::size_t i = 0; i < 16; ++i) expected.push_back(i);
  CHECK(exact == expected);

  auto single = subsample_indices(1);
  CHECK(single == std::vector<std::size_t>(16, 0));

  auto wide = subsample_indices(31);
  REQUIRE(wide.size() == 16);
  for (std::size_t i = 0; i < 16; ++i) {
    CHECK(wide[i] ==
          static_cast<std::size_t>(std::llround(static_cast<double>(i) * 30.0 / 15.0)));
  }
  CHECK(wide.front() == 0);
  CHECK(wide.back() == 30);

  CHECK_THROWS_AS(subsample_indices(0), EmptyVideo);
}

TEST_CASE("embedding is unit norm and deterministic") {
  std::vector<AppearanceFrame> frames;
  for (int i = 0; i < 20; ++i) frames.push_back(random_appearance(100 + i));
  auto a = video_embedding_appearance(frames);
  auto b = video_embedding_appearance(frames);
  CHECK(a == b);
  double norm = 0.0;
  for (double v : a) norm += v * v;
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("a constant video embeds like its single frame repeated") {
  auto frame = random_appearance(7);
  std::vector<AppearanceFrame> one(1, frame);
  std::vector<AppearanceFrame> many(45, frame);
  CHECK(video_embedding_appearance(one) == video_embedding_appearance(many));
}

TEST_CASE("the embedding never sees the flow channel") {
  // Two records with identical appearance but entirely different motion must
  // produce identical appearance embeddings.
  std::vector<AppearanceFrame> frames;
  for (int i = 0; i < 10; ++i) frames.push_back(random_appearance(3));
  DemoRecord left;
  left.appearance = frames;
  left.video.frames.assign(9, std::vector<float>(kFlowSize * kFlowSize * 2, 1.0f));
  DemoRecord right;
  right.appearance = frames;
  right.video.frames.assign(9, std::vector<float>(kFlowSize * kFlowSize * 2, -1.0f));
  CHECK(video_embedding_appearance(left.appearance) ==
        video_embedding_appearance(right.appearance));
  CHECK(score_template_appearance(frames, {left}) ==
        score_template_appearance(frames, {right}));
}

TEST_CASE("score is the mean cosine distance to the demos") {
  std::vector<AppearanceFrame> exec = {random_appearance(11), random_appearance(12)};
  std::vector<DemoRecord> demos(3);
  demos[0].appearance = {random_appearance(21)};
  demos[1].appearance = {random_appearance(22)};
  demos[2].appearance = {random_appearance(23)};

  const double score = score_template_appearance(exec, demos);

  const auto e = video_embedding_appearance(exec);
  double mean = 0.0;
  for (const auto& d : demos) {
    mean += 1.0 - cosine_similarity(e, video_embedding_appearance(d.appearance));
  }
  mean /= 3.0;
  CHECK(score == doctest::Approx(mean).epsilon(1e-12));
  CHECK(score >= 0.0);
  CHECK(score <= 2.0);
}

TEST_CASE("self-similarity scores zero distance") {
  std::vector<AppearanceFrame> exec = {random_appearance(31)};
  DemoRecord self;
  self.appearance = exec;
  CHECK(score_template_appearance(exec, {self}) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("degenerate inputs are rejected") {
  std::vector<AppearanceFrame> exec = {random_appearance(41)};
  CHECK_THROWS_AS(score_template_appearance(exec, {}), EmptyDemoSet);
  CHECK_THROWS_AS(video_embedding_appearance({}), EmptyVideo);
  std::vector<AppearanceFrame> zeros(3, AppearanceFrame(kAppearanceSize * kAppearanceSize, 0.0f));
  CHECK_THROWS_AS(video_embedding_appearance(zeros), EmptyVideo);
  std::vector<AppearanceFrame> misshapen = {AppearanceFrame(10, 0.5f)};
  CHECK_THROWS_AS(video_embedding_appearance(misshapen), Error);
}
