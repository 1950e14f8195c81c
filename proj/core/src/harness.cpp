#include "tsel/harness.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tsel/errors.hpp"
#include "tsel/histogram.hpp"
#include "tsel/io.hpp"

namespace tsel {

const std::string& method_name(Method m) {
  static const std::vector<std::string> names = {"llm", "flow", "appearance", "combined"};
  return names[static_cast<std::size_t>(m)];
}

namespace {

Method method_from_name(const std::string& name) {
  for (Method m : {Method::Llm, Method::Flow, Method::Appearance, Method::Combined}) {
    if (method_name(m) == name) return m;
  }
  throw Error("unknown method: " + name);
}

}  // namespace

ExperimentConfig default_config() {
  ExperimentConfig config;
  config.skills = {
      {"wipe", "cloth", "plate"},
      {"scrape", "scraper", "board"},
      {"stir", "spoon", "pan"},
      {"spread", "knife", "bread"},
  };
  return config;
}

std::string config_to_json(const ExperimentConfig& config) {
  nlohmann::json skills = nlohmann::json::array();
  for (const auto& s : config.skills) {
    skills.push_back({{"verb", s.verb}, {"tool", s.tool}, {"recipient", s.recipient}});
  }
  std::vector<std::string> methods;
  for (Method m : config.methods) methods.push_back(method_name(m));
  nlohmann::json j = {
      {"skills", skills},
      {"methods", methods},
      {"lambda", config.lambda},
      {"k", config.k},
      {"scene_variations", config.scene_variations},
      {"demos_per_skill", config.demos_per_skill},
      {"success_threshold", config.success_threshold},
      {"seeds",
       {{"corpus", config.corpus_seed},
        {"scene", config.scene_seed},
        {"episode", config.episode_seed},
        {"oracle", config.oracle_seed}}},
      {"codec",
       {{"epochs", config.codec_options.epochs},
        {"learning_rate", config.codec_options.learning_rate},
        {"beta", config.codec_options.beta},
        {"batch_size", config.codec_options.batch_size},
        {"hidden_dim", config.codec_options.hidden_dim},
        {"seed", config.codec_options.seed},
        {"path", config.codec_path.string()}}},
      {"out_dir", config.out_dir.string()},
  };
  return j.dump(2) + "\n";
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config " + path.string());
  nlohmann::json j = nlohmann::json::parse(in);
  ExperimentConfig config = default_config();
  if (j.contains("skills")) {
    config.skills.clear();
    for (const auto& s : j["skills"]) {
      config.skills.push_back({s.at("verb").get<std::string>(), s.at("tool").get<std::string>(),
                               s.at("recipient").get<std::string>()});
    }
  }
  if (j.contains("methods")) {
    config.methods.clear();
    for (const auto& m : j["methods"]) config.methods.push_back(method_from_name(m.get<std::string>()));
  }
  if (j.contains("lambda")) config.lambda = j["lambda"].get<double>();
  if (j.contains("k")) config.k = j["k"].get<int>();
  if (j.contains("scene_variations")) config.scene_variations = j["scene_variations"].get<int>();
  if (j.contains("demos_per_skill")) config.demos_per_skill = j["demos_per_skill"].get<int>();
  if (j.contains("success_threshold")) config.success_threshold = j["success_threshold"].get<double>();
  if (j.contains("seeds")) {
    const auto& s = j["seeds"];
    if (s.contains("corpus")) config.corpus_seed = s["corpus"].get<std::uint64_t>();
    if (s.contains("scene")) config.scene_seed = s["scene"].get<std::uint64_t>();
    if (s.contains("episode")) config.episode_seed = s["episode"].get<std::uint64_t>();
    if (s.contains("oracle")) config.oracle_seed = s["oracle"].get<std::uint64_t>();
  }
  if (j.contains("codec")) {
    const auto& c = j["codec"];
    if (c.contains("epochs")) config.codec_options.epochs = c["epochs"].get<int>();
    if (c.contains("learning_rate")) config.codec_options.learning_rate = c["learning_rate"].get<double>();
    if (c.contains("beta")) config.codec_options.beta = c["beta"].get<double>();
    if (c.contains("batch_size")) config.codec_options.batch_size = c["batch_size"].get<int>();
    if (c.contains("hidden_dim")) config.codec_options.hidden_dim = c["hidden_dim"].get<int>();
    if (c.contains("seed")) config.codec_options.seed = c["seed"].get<std::uint64_t>();
    if (c.contains("path")) config.codec_path = c["path"].get<std::string>();
  }
  if (j.contains("out_dir")) config.out_dir = j["out_dir"].get<std::string>();
  if (config.lambda < 0.0) throw Error("lambda must be >= 0");
  if (config.k < 1 || config.k > kLibrarySize) throw Error("k must be in 1..33");
  return config;
}

std::vector<int> oracle_best(const SkillLabel& skill, const std::vector<Template>& library,
                             const Scene& scene, std::uint64_t seed) {
  struct Entry {
    int id;
    double progress;
  };
  std::vector<Entry> entries;
  for (const auto& tmpl : library) {
    double sum = 0.0;
    for (std::uint64_t s = 0; s < 3; ++s) {
      auto exec = execute_template(scene, tmpl, kEpisodeFrames + 1, seed + s);
      sum += exec.progress.back();
    }
    entries.push_back({tmpl.id, sum / 3.0});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.progress != b.progress) return a.progress > b.progress;
    return a.id < b.id;
  });
  std::vector<int> ranking;
  ranking.reserve(entries.size());
  for (const auto& e : entries) ranking.push_back(e.id);
  return ranking;
}

void emit_progress_csv(const std::map<std::string, ProgressTrace>& traces,
                       const std::filesystem::path& path) {
  std::ostringstream out;
  out << "normalized_time";
  std::size_t length = 0;
  for (const auto& [name, trace] : traces) {
    out << "," << name;
    if (length == 0) length = trace.size();
    if (trace.size() != length) throw Error("progress traces must share a length");
  }
  out << "\n";
  out.precision(17);
  for (std::size_t i = 0; i < length; ++i) {
    out << (length > 1 ? static_cast<double>(i) / static_cast<double>(length - 1) : 0.0);
    for (const auto& [name, trace] : traces) out << "," << trace[i];
    out << "\n";
  }
  atomic_write(path, out.str());
}

std::string method_report_to_json(const MethodReport& report) {
  nlohmann::json methods = nlohmann::json::object();
  for (const auto& [name, trials] : report.trials) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& t : trials) {
      arr.push_back({{"skill", t.skill.verb},
                     {"tool", t.skill.tool},
                     {"recipient", t.skill.recipient},
                     {"scene_variation", t.scene_variation},
                     {"selected_id", t.selected_id},
                     {"oracle_rank", t.oracle_rank},
                     {"final_progress", t.final_progress},
                     {"success", t.success}});
    }
    methods[name] = {{"success_rate", report.success_rate.at(name)}, {"trials", arr}};
  }
  nlohmann::json j = {{"methods", methods}};
  return j.dump(2) + "\n";
}

namespace {

int argmin_id(const ScoreVector& sv) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < sv.size(); ++i) {
    if (sv.scores[i] < sv.scores[best] ||
        (sv.scores[i] == sv.scores[best] && sv.ids[i] < sv.ids[best])) {
      best = i;
    }
  }
  return sv.ids[best];
}

}  // namespace

ExperimentArtifacts run_experiment(const ExperimentConfig& config) {
  std::filesystem::create_directories(config.out_dir);
  std::filesystem::create_directories(config.out_dir / "selections");
  std::filesystem::create_directories(config.out_dir / "progress");

  const std::vector<Template> library = build_library();
  const auto corpus = synth_demo_corpus(config.skills, config.demos_per_skill, config.corpus_seed);

  CodecParams codec;
  if (!config.codec_path.empty()) {
    codec = load_codec_params(config.codec_path);
  } else {
    const auto frames = synth_flow_frames(10000, config.codec_options.seed + 1);
    codec = train(frames, config.codec_options).params;
    save_codec_params(codec, config.out_dir / "codec.vqc1");
  }

  const TokenModelScorer scorer(NgramBackend::builtin());
  const ReferenceDualEncoder encoder;

  MethodReport report;
  for (Method m : config.methods) {
    report.trials[method_name(m)] = {};
    report.success_rate[method_name(m)] = 0.0;
  }
  nlohmann::json failures = nlohmann::json::array();

  for (const auto& skill : config.skills) {
    for (int v = 0; v < config.scene_variations; ++v) {
      const std::uint64_t variation = config.scene_seed + static_cast<std::uint64_t>(v);
      const std::uint64_t episode_seed = config.episode_seed + static_cast<std::uint64_t>(v);
      try {
        const Scene scene = make_scene(skill, variation);
        const auto oracle = oracle_best(skill, library, scene, config.oracle_seed);

        PipelineSeeds seeds{episode_seed};
        const SelectionReport selection = run_pipeline(skill, library, corpus, codec, scorer,
                                                       encoder, scene, config.lambda, config.k, seeds);
        save_selection_report(selection, config.out_dir / "selections" /
                                             (skill.verb + "_v" + std::to_string(v) + ".json"));

        std::map<std::string, ProgressTrace> traces;
        for (Method m : config.methods) {
          int selected = -1;
          switch (m) {
            case Method::Llm:
              selected = top_k(selection.llm_scores, 1).front();
              break;
            case Method::Flow:
              selected = argmin_id(selection.flow_scores);
              break;
            case Method::Appearance:
              selected = argmin_id(selection.appearance_scores);
              break;
            case Method::Combined:
              selected = selection.selected_id;
              break;
          }
          auto exec = execute_template(scene, library[static_cast<std::size_t>(selected)],
                                       kEpisodeFrames + 1, episode_seed);
          TrialResult trial;
          trial.skill = skill;
          trial.scene_variation = static_cast<std::uint64_t>(v);
          trial.selected_id = selected;
          trial.oracle_rank = static_cast<int>(std::find(oracle.begin(), oracle.end(), selected) -
                                               oracle.begin()) + 1;
          trial.final_progress = exec.progress.back();
          trial.success = trial.final_progress >= config.success_threshold;
          report.trials[method_name(m)].push_back(trial);
          traces[method_name(m)] = exec.progress;
        }
        if (v == 0) {
          emit_progress_csv(traces, config.out_dir / "progress" / (skill.verb + ".csv"));
        }
      } catch (const StageError& e) {
        failures.push_back({{"skill", skill.verb}, {"variation", v}, {"stage", e.stage()},
                            {"error", e.what()}});
      } catch (const Error& e) {
        failures.push_back({{"skill", skill.verb}, {"variation", v}, {"stage", "trial"},
                            {"error", e.what()}});
      }
    }
  }

  for (auto& [name, trials] : report.trials) {
    if (trials.empty()) continue;
    double successes = 0.0;
    for (const auto& t : trials) successes += t.success ? 1.0 : 0.0;
    report.success_rate[name] = successes / static_cast<double>(trials.size());
  }

  ExperimentArtifacts artifacts;
  artifacts.report = report;
  artifacts.report_path = config.out_dir / "report.json";
  artifacts.summary_path = config.out_dir / "summary.csv";

  std::string report_json = method_report_to_json(report);
  if (!failures.empty()) {
    nlohmann::json j = nlohmann::json::parse(report_json);
    j["failures"] = failures;
    report_json = j.dump(2) + "\n";
  }
  atomic_write(artifacts.report_path, report_json);

  // Summary: one row per method, per-skill success rates plus the average.
  std::ostringstream summary;
  summary << "method";
  for (const auto& skill : config.skills) summary << "," << skill.verb;
  summary << ",average\n";
  for (Method m : config.methods) {
    const auto& trials = report.trials[method_name(m)];
    summary << method_name(m);
    for (const auto& skill : config.skills) {
      double successes = 0.0;
      double count = 0.0;
      for (const auto& t : trials) {
        if (t.skill.verb != skill.verb) continue;
        count += 1.0;
        successes += t.success ? 1.0 : 0.0;
      }
      summary << "," << (count > 0.0 ? successes / count : 0.0);
    }
    summary << "," << report.success_rate[method_name(m)] << "\n";
  }
  atomic_write(artifacts.summary_path, summary.str());
  return artifacts;
}

}  // namespace tsel
