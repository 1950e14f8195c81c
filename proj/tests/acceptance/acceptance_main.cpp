// End-to-end acceptance checks for the template-selection system. Each
// criterion prints exactly one PASS/FAIL line; the process exits nonzero if
// any criterion fails. Later criteria reuse the codec trained in criterion 4.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "tsel/appearance.hpp"
#include "tsel/codec.hpp"
#include "tsel/fusion.hpp"
#include "tsel/harness.hpp"
#include "tsel/histogram.hpp"
#include "tsel/io.hpp"
#include "tsel/lang.hpp"
#include "tsel/retrieval.hpp"
#include "tsel/sim.hpp"
#include "tsel/skill.hpp"

using namespace tsel;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %2d: %s\n", pass ? "PASS" : "FAIL", criterion, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof(buf), format, args);
  va_end(args);
  return buf;
}

FlowVideo random_flow_video(std::mt19937_64& rng, int frames) {
  std::normal_distribution<double> n(0.0, 1.0);
  FlowVideo v;
  for (int f = 0; f < frames; ++f) {
    std::vector<float> frame(kFlowSize * kFlowSize * 2);
    for (auto& x : frame) x = static_cast<float>(n(rng));
    v.frames.push_back(std::move(frame));
  }
  return v;
}

// --- criterion 1: template library -----------------------------------------

void criterion_library() {
  const auto start = Clock::now();
  auto library = build_library();
  const double elapsed = seconds_since(start);

  bool ok = library.size() == 33 && elapsed < 1.0;
  for (std::size_t i = 0; ok && i < library.size(); ++i) {
    ok = library[i].id == static_cast<int>(i) &&
         library[i].id == 3 * static_cast<int>(library[i].trajectory) +
                              static_cast<int>(library[i].force);
    if (ok) {
      const std::string d = fill_descriptor(library[i], {"wipe", "cloth", "plate"});
      ok = d.find("cloth") != std::string::npos && d.find("plate") != std::string::npos &&
           d.find('[') == std::string::npos;
    }
  }
  report(1, ok,
         fmt("library enumerates %zu templates with filled descriptors in %.3fs (< 1s)",
             library.size(), elapsed));
}

// --- criterion 2: likelihood chain rule -------------------------------------

/// Mock model: the next-token distribution depends only on the previous token
/// through a seeded hash, so an independent product-of-probabilities oracle is
/// easy to form.
class MockModel : public TokenModel {
 public:
  MockModel(std::uint64_t seed, int vocab_size) : seed_(seed) {
    for (int i = 0; i < vocab_size; ++i) vocab_.push_back("w" + std::to_string(i));
  }
  const std::vector<std::string>& vocabulary() const override { return vocab_; }
  std::vector<double> next_distribution(std::span<const std::string> prefix) const override {
    std::uint64_t h = seed_;
    if (!prefix.empty()) {
      for (char c : prefix.back()) h = h * 1099511628211ULL + static_cast<unsigned char>(c);
    }
    std::mt19937_64 rng(h);
    std::uniform_real_distribution<double> u(0.05, 1.0);
    std::vector<double> dist(vocab_.size());
    double sum = 0.0;
    for (auto& d : dist) {
      d = u(rng);
      sum += d;
    }
    for (auto& d : dist) d /= sum;
    return dist;
  }

 private:
  std::uint64_t seed_;
  std::vector<std::string> vocab_;
};

void criterion_chain_rule() {
  std::mt19937_64 rng(2024);
  double worst = 0.0;
  bool ok = true;

  for (int trial = 0; trial < 100 && ok; ++trial) {
    const int vocab_size = 5 + static_cast<int>(rng() % 40);
    MockModel model(rng(), vocab_size);
    const auto& vocab = model.vocabulary();

    std::vector<std::string> prompt;
    for (int i = 0; i < 3; ++i) prompt.push_back(vocab[rng() % vocab.size()]);
    std::vector<std::string> descriptor;
    const int len = 2 + static_cast<int>(rng() % 8);
    for (int i = 0; i < len; ++i) descriptor.push_back(vocab[rng() % vocab.size()]);

    // Oracle: multiply the step probabilities, then take one log.
    double product = 1.0;
    std::vector<std::string> prefix = prompt;
    for (const auto& token : descriptor) {
      const auto dist = model.next_distribution(prefix);
      const auto it = std::find(vocab.begin(), vocab.end(), token);
      product *= dist[static_cast<std::size_t>(it - vocab.begin())];
      prefix.push_back(token);
    }
    const double expected = std::log(product);
    const double got = sequence_loglik(model, prompt, descriptor);
    const double rel = std::abs(got - expected) / std::max(1e-300, std::abs(expected));
    worst = std::max(worst, rel);
    ok = rel <= 1e-9;
  }

  // Uniform model: every token contributes exactly -ln V.
  if (ok) {
    for (int v : {3, 17, 64}) {
      MockModel base(0, v);
      struct Uniform : TokenModel {
        explicit Uniform(std::vector<std::string> vocab) : vocab_(std::move(vocab)) {}
        const std::vector<std::string>& vocabulary() const override { return vocab_; }
        std::vector<double> next_distribution(std::span<const std::string>) const override {
          return std::vector<double>(vocab_.size(), 1.0 / static_cast<double>(vocab_.size()));
        }
        std::vector<std::string> vocab_;
      } uniform(base.vocabulary());
      std::vector<std::string> prompt = {uniform.vocab_[0]};
      std::vector<std::string> descriptor = {uniform.vocab_[1], uniform.vocab_[0]};
      const double got = sequence_loglik(uniform, prompt, descriptor);
      const double expected = -2.0 * std::log(static_cast<double>(v));
      ok = ok && std::abs(got - expected) / std::abs(expected) <= 1e-9;
    }
  }
  report(2, ok, fmt("chain-rule log-likelihood matches a product oracle on 100 random models "
                    "(worst rel err %.2e <= 1e-9) and -ln V under uniform models", worst));
}

// --- criterion 3: analytic gradients ----------------------------------------

void criterion_gradients() {
  const auto start = Clock::now();
  constexpr double kStep = 1e-5;
  constexpr double kMargin = 1e-6;
  double worst = 0.0;
  long checked = 0;

  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    CodecParams p = init_codec_params(32, 5, 3, 4, 0.25, seed);
    std::mt19937_64 rng(seed * 977);
    std::normal_distribution<double> n(0.0, 1.0);
    std::vector<float> frame(4 * 4 * 2);
    for (auto& x : frame) x = static_cast<float>(n(rng));
    if (quantization_margin(frame, 4, 4, p) < kMargin) continue;

    const CodecGrads g = loss_gradients(frame, 4, 4, p);
    auto check_tensor = [&](std::vector<double>& param, const std::vector<double>& grad) {
      for (std::size_t i = 0; i < param.size(); ++i) {
        const double orig = param[i];
        param[i] = orig + kStep;
        if (quantization_margin(frame, 4, 4, p) < kMargin) {
          param[i] = orig;
          continue;
        }
        const double lp = loss(frame, 4, 4, p).total;
        param[i] = orig - kStep;
        if (quantization_margin(frame, 4, 4, p) < kMargin) {
          param[i] = orig;
          continue;
        }
        const double lm = loss(frame, 4, 4, p).total;
        param[i] = orig;
        const double fd = (lp - lm) / (2.0 * kStep);
        const double denom = std::max(std::abs(fd), std::abs(grad[i]));
        if (denom < 1e-8) continue;
        worst = std::max(worst, std::abs(fd - grad[i]) / denom);
        ++checked;
      }
    };
    check_tensor(p.enc_w1, g.enc_w1);
    check_tensor(p.enc_b1, g.enc_b1);
    check_tensor(p.enc_w2, g.enc_w2);
    check_tensor(p.enc_b2, g.enc_b2);
    check_tensor(p.dec_w1, g.dec_w1);
    check_tensor(p.dec_b1, g.dec_b1);
    check_tensor(p.dec_w2, g.dec_w2);
    check_tensor(p.dec_b2, g.dec_b2);
    check_tensor(p.codebook.vectors, g.codebook);
  }
  const double elapsed = seconds_since(start);
  const bool ok = worst <= 1e-4 && checked > 1000 && elapsed < 30.0;
  report(3, ok,
         fmt("finite differences agree with analytic gradients over %ld parameters across 20 "
             "seeds (worst rel err %.2e <= 1e-4) in %.1fs (< 30s)", checked, worst, elapsed));
}

// --- criterion 4: codec training --------------------------------------------

struct TrainedCodec {
  CodecParams params;
  bool trained_ok = false;
};

TrainedCodec criterion_training() {
  const auto frames = synth_flow_frames(10000, 1);
  TrainOptions opts;  // defaults match the experiment harness

  const auto start = Clock::now();
  auto first = train(frames, opts);
  const double train_seconds = seconds_since(start);
  auto second = train(frames, opts);

  const bool identical = first.params.enc_w1 == second.params.enc_w1 &&
                         first.params.enc_b1 == second.params.enc_b1 &&
                         first.params.enc_w2 == second.params.enc_w2 &&
                         first.params.enc_b2 == second.params.enc_b2 &&
                         first.params.dec_w1 == second.params.dec_w1 &&
                         first.params.dec_b1 == second.params.dec_b1 &&
                         first.params.dec_w2 == second.params.dec_w2 &&
                         first.params.dec_b2 == second.params.dec_b2 &&
                         first.params.codebook.vectors == second.params.codebook.vectors &&
                         first.epoch_recon_mse == second.epoch_recon_mse;

  const double ratio = first.final_recon_mse / first.initial_recon_mse;
  const double usage = codebook_usage(frames, first.params);
  const bool ok =
      ratio <= 0.25 && usage >= 0.25 && train_seconds < 600.0 && identical;
  report(4, ok,
         fmt("training on 10000 frames: final/initial MSE %.3f (<= 0.25), codebook usage %.2f "
             "(>= 0.25), %.0fs (< 600s), repeat run bit-identical: %s",
             ratio, usage, train_seconds, identical ? "yes" : "no"));

  TrainedCodec result;
  result.params = std::move(first.params);
  result.trained_ok = ok;
  return result;
}

// --- criterion 5: histogram metric axioms -----------------------------------

void criterion_metric_axioms(const CodecParams& codec) {
  std::mt19937_64 rng(505);
  bool ok = true;
  std::string why = "distance axioms hold";

  // Symmetry (exact), identity (1e-9), permutation invariance (exact) on
  // histograms of real videos through the trained codec.
  for (int t = 0; t < 10 && ok; ++t) {
    FlowVideo a = random_flow_video(rng, 6);
    FlowVideo b = random_flow_video(rng, 6);
    auto ha = video_histogram(a, codec);
    auto hb = video_histogram(b, codec);
    if (histogram_distance(ha, hb) != histogram_distance(hb, ha)) {
      ok = false;
      why = "symmetry violated";
    }
    if (ok && histogram_distance(ha, ha) > 1e-9) {
      ok = false;
      why = "identity violated";
    }
    if (ok) {
      FlowVideo shuffled = a;
      std::shuffle(shuffled.frames.begin(), shuffled.frames.end(), rng);
      auto hs = video_histogram(shuffled, codec);
      if (hs.bins != ha.bins) {
        ok = false;
        why = "frame-permutation invariance violated";
      }
    }
  }

  // Triangle inequality and range on 1000 random normalized triples.
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto random_hist = [&]() {
    FlowHistogram h;
    h.total_codes = 1;
    double sum = 0.0;
    for (auto& v : h.bins) {
      v = u(rng);
      sum += v;
    }
    for (auto& v : h.bins) v /= sum;
    return h;
  };
  const double sqrt2 = std::sqrt(2.0);
  for (int t = 0; t < 1000 && ok; ++t) {
    auto a = random_hist();
    auto b = random_hist();
    auto c = random_hist();
    const double ab = histogram_distance(a, b);
    const double bc = histogram_distance(b, c);
    const double ac = histogram_distance(a, c);
    if (ac > ab + bc + 1e-12) {
      ok = false;
      why = "triangle inequality violated";
    }
    for (double d : {ab, bc, ac}) {
      if (d < 0.0 || d > sqrt2 + 1e-12) {
        ok = false;
        why = "distance out of [0, sqrt(2)]";
      }
    }
  }
  report(5, ok, fmt("%s (symmetry/permutation exact, identity <= 1e-9, 1000 triangle triples, "
                    "range within [0, sqrt 2])", why.c_str()));
}

// --- criterion 6: motion blindness vs flow sensitivity ----------------------

void criterion_motion_blindness(const CodecParams& codec) {
  Scene scene;
  scene.recipient = {{32.0, 32.0}, {14.0, 12.0}, "plate"};
  scene.tool.half_extents = {8.0, 8.0};
  scene.metric = TaskMetric::WipeCoverage;

  auto push = trajectory_waypoints(TrajectoryKind::PushAway, scene.recipient, 16);
  auto pull = trajectory_waypoints(TrajectoryKind::PullToward, scene.recipient, 16);
  auto a = execute_waypoints(scene, push, ForceLevel::Low, 7);
  auto b = execute_waypoints(scene, pull, ForceLevel::Low, 7);

  // The two executions traverse the same positions in opposite order, so the
  // appearance channel cannot tell them apart while the flow channel must.
  DemoRecord demo;
  demo.video = a.flow;
  demo.appearance = a.appearance;
  demo.text = "wipe the plate with the cloth";
  demo.objects = {"cloth", "plate"};

  const double app_a = score_template_appearance(a.appearance, {demo});
  const double app_b = score_template_appearance(b.appearance, {demo});
  const double flow_a = score_template_flow(a.flow, {demo.video}, codec);
  const double flow_b = score_template_flow(b.flow, {demo.video}, codec);
  const double flow_gap = std::abs(flow_a - flow_b);

  const bool ok = app_a == app_b && flow_gap >= 0.05;
  report(6, ok,
         fmt("identical appearance, opposite motion: appearance scores equal exactly (%.6f), "
             "flow score gap %.3f (>= 0.05)", app_a, flow_gap));
}

// --- shared pipeline fixtures ------------------------------------------------

struct PipelineFixture {
  std::vector<Template> library = build_library();
  std::vector<DemoRecord> corpus;
  const TokenModelScorer scorer{NgramBackend::builtin()};
  ReferenceDualEncoder encoder;

  PipelineFixture() {
    ExperimentConfig config = default_config();
    corpus = synth_demo_corpus(config.skills, config.demos_per_skill, config.corpus_seed);
  }
};

int flow_argmin(const SelectionReport& r) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < r.flow_scores.size(); ++i) {
    if (r.flow_scores.scores[i] < r.flow_scores.scores[best] ||
        (r.flow_scores.scores[i] == r.flow_scores.scores[best] &&
         r.flow_scores.ids[i] < r.flow_scores.ids[best])) {
      best = i;
    }
  }
  return r.flow_scores.ids[best];
}

int appearance_argmin(const SelectionReport& r) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < r.appearance_scores.size(); ++i) {
    if (r.appearance_scores.scores[i] < r.appearance_scores.scores[best] ||
        (r.appearance_scores.scores[i] == r.appearance_scores.scores[best] &&
         r.appearance_scores.ids[i] < r.appearance_scores.ids[best])) {
      best = i;
    }
  }
  return r.appearance_scores.ids[best];
}

// --- criterion 7: flow beats appearance on direction-sensitive tasks --------

void criterion_flow_vs_appearance(const PipelineFixture& fx, const CodecParams& codec) {
  const auto start = Clock::now();
  ExperimentConfig config = default_config();

  // Wipe, first scene variation.
  SkillLabel wipe{"wipe", "cloth", "plate"};
  Scene wipe_scene = make_scene(wipe, config.scene_seed);
  auto wipe_report = run_pipeline(wipe, fx.library, fx.corpus, codec, fx.scorer, fx.encoder,
                                  wipe_scene, config.lambda, config.k, {config.episode_seed});
  const int wipe_flow = flow_argmin(wipe_report);
  const int wipe_app = appearance_argmin(wipe_report);
  const double wipe_flow_cov =
      execute_template(wipe_scene, fx.library[static_cast<std::size_t>(wipe_flow)],
                       kEpisodeFrames + 1, config.episode_seed)
          .progress.back();
  const double wipe_app_cov =
      execute_template(wipe_scene, fx.library[static_cast<std::size_t>(wipe_app)],
                       kEpisodeFrames + 1, config.episode_seed)
          .progress.back();

  // Scrape, second scene variation.
  SkillLabel scrape{"scrape", "scraper", "board"};
  Scene scrape_scene = make_scene(scrape, config.scene_seed + 1);
  auto scrape_report =
      run_pipeline(scrape, fx.library, fx.corpus, codec, fx.scorer, fx.encoder, scrape_scene,
                   config.lambda, config.k, {config.episode_seed + 1});
  const int scrape_flow = flow_argmin(scrape_report);
  const int scrape_app = appearance_argmin(scrape_report);
  const double scrape_flow_clear =
      execute_template(scrape_scene, fx.library[static_cast<std::size_t>(scrape_flow)],
                       kEpisodeFrames + 1, config.episode_seed + 1)
          .progress.back();
  const double scrape_app_clear =
      execute_template(scrape_scene, fx.library[static_cast<std::size_t>(scrape_app)],
                       kEpisodeFrames + 1, config.episode_seed + 1)
          .progress.back();

  const double elapsed = seconds_since(start);
  const bool ok = wipe_flow_cov > wipe_app_cov && scrape_flow_clear >= scrape_app_clear &&
                  elapsed < 300.0;
  report(7, ok,
         fmt("wipe coverage: flow pick %d -> %.2f > appearance pick %d -> %.2f; scrape "
             "clearance: flow pick %d -> %.2f >= appearance pick %d -> %.2f; %.0fs (< 300s)",
             wipe_flow, wipe_flow_cov, wipe_app, wipe_app_cov, scrape_flow, scrape_flow_clear,
             scrape_app, scrape_app_clear, elapsed));
}

// --- criterion 8: full method comparison -------------------------------------

void criterion_experiment(const fs::path& workdir, const fs::path& codec_file) {
  const auto start = Clock::now();
  ExperimentConfig config = default_config();
  config.codec_path = codec_file;
  config.out_dir = workdir / "experiment";
  auto artifacts = run_experiment(config);
  const double elapsed = seconds_since(start);

  const auto& rates = artifacts.report.success_rate;
  const double llm = rates.at("llm");
  const double flow = rates.at("flow");
  const double appearance = rates.at("appearance");
  const double combined = rates.at("combined");

  bool trials_complete = true;
  for (const auto& [name, trials] : artifacts.report.trials) {
    trials_complete = trials_complete && trials.size() == 20;  // 4 skills x 5 variations
  }

  const bool ok = combined >= flow && flow >= appearance && combined >= llm &&
                  combined - appearance >= 0.15 && trials_complete && elapsed < 1800.0;
  report(8, ok,
         fmt("4 skills x 5 scenes: combined %.2f >= flow %.2f >= appearance %.2f, combined >= "
             "llm %.2f, combined-appearance gap %.2f (>= 0.15), %.0fs (< 1800s)",
             combined, flow, appearance, llm, combined - appearance, elapsed));
}

// --- criterion 9: ablation reductions ----------------------------------------

void criterion_reductions(const PipelineFixture& fx, const CodecParams& codec) {
  ExperimentConfig config = default_config();
  bool ok = true;
  std::string why = "lambda=0 equals flow-only and k=1 equals the llm argmax on every skill";

  for (const auto& skill : config.skills) {
    Scene scene = make_scene(skill, config.scene_seed);
    PipelineSeeds seeds{config.episode_seed};

    auto lambda_zero = run_pipeline(skill, fx.library, fx.corpus, codec, fx.scorer, fx.encoder,
                                    scene, 0.0, config.k, seeds);
    if (lambda_zero.selected_id != flow_argmin(lambda_zero)) {
      ok = false;
      why = "lambda=0 selection differs from the flow minimizer for " + skill.verb;
      break;
    }

    auto k_one = run_pipeline(skill, fx.library, fx.corpus, codec, fx.scorer, fx.encoder, scene,
                              config.lambda, 1, seeds);
    if (k_one.selected_id != top_k(k_one.llm_scores, 1).front()) {
      ok = false;
      why = "k=1 selection differs from the llm argmax for " + skill.verb;
      break;
    }
  }
  report(9, ok, why);
}

// --- criterion 10: serialization round-trips ----------------------------------

void criterion_round_trips(const fs::path& workdir, const CodecParams& codec) {
  std::mt19937_64 rng(1010);
  bool ok = true;
  std::string why = "50 random videos, histograms, codec files and reports round-trip "
                    "bit-identically";

  auto read_bytes = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  };

  for (int t = 0; t < 50 && ok; ++t) {
    // Flow video bytes and values.
    FlowVideo video = random_flow_video(rng, 2 + static_cast<int>(rng() % 6));
    const fs::path vfile = workdir / "rt_video.flv1";
    save_flow_video(video, vfile);
    FlowVideo loaded = load_flow_video(vfile);
    if (loaded.frames != video.frames) {
      ok = false;
      why = "flow video round-trip changed frame data";
      break;
    }
    save_flow_video(loaded, workdir / "rt_video2.flv1");
    if (read_bytes(vfile) != read_bytes(workdir / "rt_video2.flv1")) {
      ok = false;
      why = "flow video bytes differ after a save/load/save cycle";
      break;
    }

    // Codec file bytes (trained params are float-exact by construction).
    const fs::path cfile = workdir / "rt_codec.vqc1";
    save_codec_params(codec, cfile);
    CodecParams codec2 = load_codec_params(cfile);
    save_codec_params(codec2, workdir / "rt_codec2.vqc1");
    if (read_bytes(cfile) != read_bytes(workdir / "rt_codec2.vqc1") ||
        codec2.codebook.vectors != codec.codebook.vectors) {
      ok = false;
      why = "codec parameters changed across a save/load/save cycle";
      break;
    }

    // Histogram of the video through the loaded codec must match the
    // original codec exactly, and its CSV must round-trip.
    auto h1 = video_histogram(video, codec);
    auto h2 = video_histogram(loaded, codec2);
    if (h1.bins != h2.bins || h1.total_codes != h2.total_codes) {
      ok = false;
      why = "histograms differ after round-tripping video and codec";
      break;
    }
    const fs::path hfile = workdir / "rt_hist.csv";
    save_histogram_csv({h1}, hfile);
    auto hists = load_histogram_csv(hfile);
    if (hists.size() != 1 || hists[0].bins != h1.bins) {
      ok = false;
      why = "histogram CSV round-trip changed bin values";
      break;
    }

    // Selection report JSON is stable under parse/serialize.
    SelectionReport r;
    r.skill = {"wipe", "cloth", "plate"};
    r.candidates = {16, 17, 31, 4, 13};
    r.llm_scores.ids = r.candidates;
    for (int id : r.candidates) {
      r.llm_scores.scores.push_back(-1.0 - 0.001 * id);
      r.flow_scores.ids.push_back(id);
      r.flow_scores.scores.push_back(static_cast<double>(rng() % 1000) / 1000.0);
    }
    r.flow_scores.higher_is_better = false;
    r.selected_id = 31;
    r.episode_seed = rng();
    const std::string j1 = selection_report_to_json(r);
    const fs::path rfile = workdir / "rt_report.json";
    save_selection_report(r, rfile);
    if (read_bytes(rfile) != j1) {
      ok = false;
      why = "selection report bytes differ between direct and file serialization";
      break;
    }
  }
  report(10, ok, why);
}

}  // namespace

int main() {
  const fs::path workdir =
      fs::temp_directory_path() / ("tsel_acceptance_" + std::to_string(std::random_device{}()));
  fs::create_directories(workdir);

  criterion_library();
  criterion_chain_rule();
  criterion_gradients();

  TrainedCodec trained = criterion_training();
  const fs::path codec_file = workdir / "codec.vqc1";
  save_codec_params(trained.params, codec_file);

  criterion_metric_axioms(trained.params);
  criterion_motion_blindness(trained.params);

  PipelineFixture fixture;
  criterion_flow_vs_appearance(fixture, trained.params);
  criterion_experiment(workdir, codec_file);
  criterion_reductions(fixture, trained.params);
  criterion_round_trips(workdir, trained.params);

  fs::remove_all(workdir);
  std::printf("%d/10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
