// Command-line surface for the template-selection workbench.
//
// Subcommands: gen-corpus, train-codec, oracle, score, select, evaluate,
// report. All randomness flows from explicit seeds; reruns with the same
// arguments produce byte-identical artifacts.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "tsel/appearance.hpp"
#include "tsel/errors.hpp"
#include "tsel/harness.hpp"
#include "tsel/histogram.hpp"
#include "tsel/io.hpp"

namespace {

tsel::ExperimentConfig resolve_config(const std::string& config_path,
                                      std::optional<std::uint64_t> seed,
                                      const std::string& out_dir) {
  tsel::ExperimentConfig config =
      config_path.empty() ? tsel::default_config() : tsel::load_config(config_path);
  if (seed) {
    config.corpus_seed = *seed + 1;
    config.scene_seed = *seed + 2;
    config.episode_seed = *seed + 3;
    config.oracle_seed = *seed + 4;
    config.codec_options.seed = *seed + 5;
  }
  if (!out_dir.empty()) config.out_dir = out_dir;
  return config;
}

tsel::SkillLabel find_skill(const tsel::ExperimentConfig& config, const std::string& verb) {
  for (const auto& s : config.skills) {
    if (s.verb == verb) return s;
  }
  throw tsel::Error("skill not in config: " + verb);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Behavior-template selection workbench"};
  app.require_subcommand(1);
  app.fallthrough();  // accept global flags after the subcommand too

  std::string config_path;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  app.add_option("--config", config_path, "Experiment config JSON");
  app.add_option("--seed", seed, "Master seed overriding config seeds");
  app.add_option("--out", out_dir, "Output directory");

  auto* gen_corpus = app.add_subcommand("gen-corpus", "Generate the synthetic demo corpus");
  auto* train_codec = app.add_subcommand("train-codec", "Train the flow codec on synthetic frames");
  int train_frames = 10000;
  train_codec->add_option("--frames", train_frames, "Training frame count");

  std::string skill_verb = "wipe";
  auto* oracle_cmd = app.add_subcommand("oracle", "Rank all templates by simulator progress");
  oracle_cmd->add_option("--skill", skill_verb, "Skill verb");
  std::uint64_t variation = 0;
  oracle_cmd->add_option("--variation", variation, "Scene variation index");

  auto* score_cmd = app.add_subcommand("score", "Score the LLM top-k candidates for a skill");
  score_cmd->add_option("--skill", skill_verb, "Skill verb");
  score_cmd->add_option("--variation", variation, "Scene variation index");
  std::string codec_file;
  score_cmd->add_option("--codec", codec_file, "Trained codec file (defaults to <out>/codec.vqc1)");

  auto* select_cmd = app.add_subcommand("select", "Run the full selection pipeline for a skill");
  select_cmd->add_option("--skill", skill_verb, "Skill verb");
  select_cmd->add_option("--variation", variation, "Scene variation index");
  select_cmd->add_option("--codec", codec_file, "Trained codec file");

  auto* evaluate_cmd = app.add_subcommand("evaluate", "Run all methods over all skills");
  (void)evaluate_cmd;
  auto* report_cmd = app.add_subcommand("report", "Print the summary of a finished evaluation");
  (void)report_cmd;

  CLI11_PARSE(app, argc, argv);

  try {
    tsel::ExperimentConfig config = resolve_config(config_path, seed, out_dir);
    std::filesystem::create_directories(config.out_dir);

    if (gen_corpus->parsed()) {
      auto corpus = tsel::synth_demo_corpus(config.skills, config.demos_per_skill, config.corpus_seed);
      tsel::save_demo_corpus(corpus, config.out_dir / "corpus");
      tsel::save_library_json(tsel::build_library(), config.out_dir / "library.json");
      std::cout << "wrote " << corpus.size() << " records to " << (config.out_dir / "corpus").string()
                << "\n";
      return 0;
    }

    if (train_codec->parsed()) {
      auto frames = tsel::synth_flow_frames(static_cast<std::size_t>(train_frames),
                                            config.codec_options.seed + 1);
      auto result = tsel::train(frames, config.codec_options);
      tsel::save_codec_params(result.params, config.out_dir / "codec.vqc1");
      std::cout << "recon mse " << result.initial_recon_mse << " -> " << result.final_recon_mse
                << ", codebook usage " << tsel::codebook_usage(frames, result.params) << "\n";
      return 0;
    }

    if (oracle_cmd->parsed()) {
      const auto skill = find_skill(config, skill_verb);
      const auto library = tsel::build_library();
      const auto scene = tsel::make_scene(skill, config.scene_seed + variation);
      const auto ranking = tsel::oracle_best(skill, library, scene, config.oracle_seed);
      nlohmann::json j = {{"skill", skill.verb}, {"ranking", ranking}};
      tsel::atomic_write(config.out_dir / (skill.verb + "_oracle.json"), j.dump(2) + "\n");
      std::cout << "oracle best for " << skill.verb << ": template " << ranking.front() << "\n";
      return 0;
    }

    if (score_cmd->parsed() || select_cmd->parsed()) {
      const auto skill = find_skill(config, skill_verb);
      const auto library = tsel::build_library();
      const auto corpus =
          tsel::synth_demo_corpus(config.skills, config.demos_per_skill, config.corpus_seed);
      const std::filesystem::path codec_path =
          codec_file.empty() ? config.out_dir / "codec.vqc1" : std::filesystem::path(codec_file);
      const auto codec = tsel::load_codec_params(codec_path);
      const tsel::TokenModelScorer scorer(tsel::NgramBackend::builtin());
      const tsel::ReferenceDualEncoder encoder;
      const auto scene = tsel::make_scene(skill, config.scene_seed + variation);
      tsel::PipelineSeeds seeds{config.episode_seed + variation};
      const auto report = tsel::run_pipeline(skill, library, corpus, codec, scorer, encoder, scene,
                                             config.lambda, config.k, seeds);
      tsel::save_selection_report(report, config.out_dir / (skill.verb + "_selection.json"));
      if (select_cmd->parsed()) {
        std::cout << "selected template " << report.selected_id << " for " << skill.verb << "\n";
      } else {
        std::cout << "scored " << report.candidates.size() << " candidates for " << skill.verb
                  << "\n";
      }
      return 0;
    }

    if (evaluate_cmd->parsed()) {
      const auto artifacts = tsel::run_experiment(config);
      std::cout << "report: " << artifacts.report_path.string() << "\n";
      for (const auto& [name, rate] : artifacts.report.success_rate) {
        std::cout << name << " success rate " << rate << "\n";
      }
      return 0;
    }

    if (report_cmd->parsed()) {
      std::ifstream in(config.out_dir / "summary.csv");
      if (!in) throw tsel::IoError("no summary.csv in " + config.out_dir.string());
      std::cout << in.rdbuf();
      return 0;
    }
  } catch (const tsel::StageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
