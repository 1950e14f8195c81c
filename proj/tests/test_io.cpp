#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "json.hpp"
#include "tsel/errors.hpp"
#include "tsel/io.hpp"

using namespace tsel;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("tsel_io_test_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

FlowVideo random_video(std::uint64_t seed, int frames) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n(0.0, 1.0);
  FlowVideo v;
  for (int f = 0; f < frames; ++f) {
    std::vector<float> frame(kFlowSize * kFlowSize * 2);
    for (auto& x : frame) x = static_cast<float>(n(rng));
    v.frames.push_back(std::move(frame));
  }
  return v;
}

}  // namespace

TEST_CASE("flow videos round-trip bit-exactly") {
  TempDir tmp;
  const auto file = tmp.path / "video.flv1";
  for (std::uint64_t seed : {1, 2, 3}) {
    FlowVideo v = random_video(seed, 7);
    save_flow_video(v, file);
    FlowVideo back = load_flow_video(file);
    CHECK(back.width == v.width);
    CHECK(back.height == v.height);
    REQUIRE(back.frames.size() == v.frames.size());
    for (std::size_t i = 0; i < v.frames.size(); ++i) CHECK(back.frames[i] == v.frames[i]);
  }
}

TEST_CASE("flow loader rejects wrong magic and missing files") {
  TempDir tmp;
  const auto file = tmp.path / "video.flv1";
  atomic_write(file, "APP1garbage that is long enough to parse a header from....");
  CHECK_THROWS_AS(load_flow_video(file), IoError);
  CHECK_THROWS_AS(load_flow_video(tmp.path / "missing.flv1"), IoError);
  atomic_write(file, "FL");
  CHECK_THROWS_AS(load_flow_video(file), IoError);
}

TEST_CASE("appearance stacks round-trip bit-exactly") {
  TempDir tmp;
  const auto file = tmp.path / "frames.app1";
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<AppearanceFrame> frames(5, AppearanceFrame(kAppearanceSize * kAppearanceSize));
  for (auto& f : frames) {
    for (auto& v : f) v = static_cast<float>(u(rng));
  }
  save_appearance(frames, file);
  auto back = load_appearance(file);
  CHECK(back == frames);
}

TEST_CASE("codec parameters round-trip bit-exactly after training") {
  TempDir tmp;
  const auto file = tmp.path / "codec.vqc1";
  auto frames = synth_flow_frames(120, 55);
  TrainOptions opts;
  opts.epochs = 1;
  opts.seed = 56;
  CodecParams p = train(frames, opts).params;
  save_codec_params(p, file);
  CodecParams back = load_codec_params(file);
  CHECK(back.input_dim == p.input_dim);
  CHECK(back.hidden_dim == p.hidden_dim);
  CHECK(back.latent_dim == p.latent_dim);
  CHECK(back.beta == doctest::Approx(p.beta));
  CHECK(back.enc_w1 == p.enc_w1);
  CHECK(back.enc_b1 == p.enc_b1);
  CHECK(back.enc_w2 == p.enc_w2);
  CHECK(back.enc_b2 == p.enc_b2);
  CHECK(back.dec_w1 == p.dec_w1);
  CHECK(back.dec_b1 == p.dec_b1);
  CHECK(back.dec_w2 == p.dec_w2);
  CHECK(back.dec_b2 == p.dec_b2);
  CHECK(back.codebook.vectors == p.codebook.vectors);
  CHECK(back.codebook.entry_count == p.codebook.entry_count);

  // Loaded parameters must produce identical encodings.
  auto a = encode(frames[0], kFlowFrameSide, kFlowFrameSide, p);
  auto b = encode(frames[0], kFlowFrameSide, kFlowFrameSide, back);
  CHECK(a.values == b.values);
}

TEST_CASE("demo corpora round-trip through the directory layout") {
  TempDir tmp;
  auto corpus = synth_demo_corpus({{"wipe", "cloth", "plate"}}, 2, 77);
  save_demo_corpus(corpus, tmp.path / "corpus");
  auto back = load_demo_corpus(tmp.path / "corpus");
  REQUIRE(back.size() == corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    CHECK(back[i].text == corpus[i].text);
    CHECK(back[i].objects == corpus[i].objects);
    CHECK(back[i].expert == corpus[i].expert);
    REQUIRE(back[i].video.frames.size() == corpus[i].video.frames.size());
    for (std::size_t f = 0; f < corpus[i].video.frames.size(); ++f) {
      CHECK(back[i].video.frames[f] == corpus[i].video.frames[f]);
    }
    CHECK(back[i].appearance == corpus[i].appearance);
  }
  // Layout: per-record directories with the three expected files.
  CHECK(fs::exists(tmp.path / "corpus" / "record_0000" / "flow.flv1"));
  CHECK(fs::exists(tmp.path / "corpus" / "record_0000" / "appearance.app1"));
  CHECK(fs::exists(tmp.path / "corpus" / "record_0000" / "meta.json"));
}

TEST_CASE("histogram CSV round-trips the bin fractions") {
  TempDir tmp;
  const auto file = tmp.path / "hist.csv";
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<FlowHistogram> hists(3);
  for (auto& h : hists) {
    double sum = 0.0;
    for (auto& b : h.bins) {
      b = u(rng);
      sum += b;
    }
    for (auto& b : h.bins) b /= sum;
    h.total_codes = 1;
  }
  save_histogram_csv(hists, file);
  auto back = load_histogram_csv(file);
  REQUIRE(back.size() == 3);
  for (std::size_t i = 0; i < hists.size(); ++i) CHECK(back[i].bins == hists[i].bins);

  std::ifstream in(file);
  std::string header;
  std::getline(in, header);
  CHECK(header.substr(0, 11) == "bin_0,bin_1");
  atomic_write(file, "bin_0\n0.5\n");
  CHECK_THROWS_AS(load_histogram_csv(file), IoError);
}

TEST_CASE("template library JSON round-trips") {
  TempDir tmp;
  const auto file = tmp.path / "library.json";
  auto library = build_library();
  save_library_json(library, file);
  auto back = load_library_json(file);
  REQUIRE(back.size() == library.size());
  for (std::size_t i = 0; i < library.size(); ++i) {
    CHECK(back[i].id == library[i].id);
    CHECK(back[i].trajectory == library[i].trajectory);
    CHECK(back[i].force == library[i].force);
    CHECK(back[i].descriptor_template == library[i].descriptor_template);
  }
}

TEST_CASE("selection reports serialize every fusion stage") {
  SelectionReport r;
  r.skill = {"wipe", "cloth", "plate"};
  r.candidates = {16, 17, 31};
  r.llm_scores.ids = {0, 1};
  r.llm_scores.scores = {-3.0, -2.0};
  r.flow_scores.ids = {16, 17, 31};
  r.flow_scores.scores = {0.4, 0.2, 0.1};
  r.flow_scores.higher_is_better = false;
  r.flow_normalized = r.flow_scores;
  r.flow_normalized.norm_min_max = {{0.1, 0.4}};
  r.selected_id = 31;
  r.lambda = 0.1;
  r.episode_seed = 99;

  auto j = nlohmann::json::parse(selection_report_to_json(r));
  CHECK(j["skill"]["verb"] == "wipe");
  CHECK(j["selected_id"] == 31);
  CHECK(j["lambda"] == 0.1);
  CHECK(j["seeds"]["episode"] == 99);
  CHECK(j["candidates"] == nlohmann::json({16, 17, 31}));
  CHECK(j["flow_scores"]["higher_is_better"] == false);
  CHECK(j["flow_normalized"]["norm_min"] == 0.1);
  CHECK(j["flow_normalized"]["norm_max"] == 0.4);

  TempDir tmp;
  save_selection_report(r, tmp.path / "selection.json");
  std::ifstream in(tmp.path / "selection.json");
  auto j2 = nlohmann::json::parse(in);
  CHECK(j2 == j);
}

TEST_CASE("atomic_write replaces the file contents completely") {
  TempDir tmp;
  const auto file = tmp.path / "note.txt";
  atomic_write(file, "first version with a long body\n");
  atomic_write(file, "v2\n");
  std::ifstream in(file);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(content == "v2\n");
  // No stray temp files left behind.
  std::size_t entries = 0;
  for (const auto& e : fs::directory_iterator(tmp.path)) {
    (void)e;
    ++entries;
  }
  CHECK(entries == 1);
}
