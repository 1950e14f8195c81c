#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "tsel/fusion.hpp"

namespace tsel {

enum class Method { Llm, Flow, Appearance, Combined };
const std::string& method_name(Method m);

struct ExperimentConfig {
  std::vector<SkillLabel> skills;
  std::vector<Method> methods = {Method::Llm, Method::Flow, Method::Appearance, Method::Combined};
  double lambda = kDefaultLambda;
  int k = kDefaultCandidateCount;
  int scene_variations = 5;
  int demos_per_skill = 3;
  double success_threshold = 0.5;
  std::uint64_t corpus_seed = 101;
  std::uint64_t scene_seed = 202;
  std::uint64_t episode_seed = 303;
  std::uint64_t oracle_seed = 404;
  TrainOptions codec_options{};
  std::filesystem::path codec_path;  // load instead of training when set
  std::filesystem::path out_dir = "out";
};

ExperimentConfig default_config();
ExperimentConfig load_config(const std::filesystem::path& path);
std::string config_to_json(const ExperimentConfig& config);

struct TrialResult {
  SkillLabel skill;
  std::uint64_t scene_variation = 0;
  int selected_id = -1;
  int oracle_rank = 0;  // 1..33
  double final_progress = 0.0;
  bool success = false;
};

struct MethodReport {
  std::map<std::string, std::vector<TrialResult>> trials;  // per method
  std::map<std::string, double> success_rate;
};

/// Executes every template (3 seeds each, mean final progress) and ranks
/// all 33 descending; ties toward the lower id.
std::vector<int> oracle_best(const SkillLabel& skill, const std::vector<Template>& library,
                             const Scene& scene, std::uint64_t seed);

struct ExperimentArtifacts {
  MethodReport report;
  std::filesystem::path report_path;
  std::filesystem::path summary_path;
};

/// Runs every enabled method on every skill x scene variation, compares each
/// selection to the simulator oracle, and writes report + CSV artifacts.
ExperimentArtifacts run_experiment(const ExperimentConfig& config);

/// Per-method progress traces as CSV: normalized_time plus one column per
/// method. Traces must share a common length.
void emit_progress_csv(const std::map<std::string, ProgressTrace>& traces,
                       const std::filesystem::path& path);

std::string method_report_to_json(const MethodReport& report);

}  // namespace tsel
