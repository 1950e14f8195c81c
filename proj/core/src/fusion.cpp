#include "tsel/fusion.hpp"

#include <algorithm>
#include <cmath>

#include "tsel/errors.hpp"
#include "tsel/histogram.hpp"
#include "tsel/appearance.hpp"

namespace tsel {

ScoreVector minmax_normalize(const ScoreVector& scores) {
  if (scores.size() < 2) throw TooFewEntries();
  const auto [min_it, max_it] = std::minmax_element(scores.scores.begin(), scores.scores.end());
  const double lo = *min_it;
  const double hi = *max_it;
  ScoreVector out = scores;
  out.norm_min_max = {lo, hi};
  if (hi == lo) {
    std::fill(out.scores.begin(), out.scores.end(), 0.5);
  } else {
    for (auto& s : out.scores) s = (s - lo) / (hi - lo);
  }
  return out;
}

ScoreVector combine(const ScoreVector& s_llm, const ScoreVector& s_flow, double lambda) {
  if (lambda < 0.0) throw Error("lambda must be non-negative");
  if (s_llm.ids != s_flow.ids) throw IdMismatch();
  ScoreVector out;
  out.ids = s_llm.ids;
  out.higher_is_better = true;
  out.scores.resize(s_llm.size());
  for (std::size_t i = 0; i < s_llm.size(); ++i) {
    out.scores[i] = lambda * s_llm.scores[i] + (1.0 - s_flow.scores[i]);
  }
  return out;
}

int select(const ScoreVector& combined) {
  if (combined.ids.empty()) throw EmptyScores();
  std::size_t best = 0;
  for (std::size_t i = 1; i < combined.size(); ++i) {
    if (combined.scores[i] > combined.scores[best] ||
        (combined.scores[i] == combined.scores[best] && combined.ids[i] < combined.ids[best])) {
      best = i;
    }
  }
  return combined.ids[best];
}

SelectionReport run_pipeline(const SkillLabel& skill, const std::vector<Template>& library,
                             const std::vector<DemoRecord>& corpus, const CodecParams& codec,
                             const SequenceScorer& llm, const DualEncoder& encoder,
                             const Scene& scene, double lambda, int k,
                             const PipelineSeeds& seeds) {
  SelectionReport report;
  report.skill = skill;
  report.lambda = lambda;
  report.episode_seed = seeds.episode;

  try {
    report.llm_scores = rank_templates_llm(llm, skill, library);
    report.candidates = top_k(report.llm_scores, k);
  } catch (const Error& e) {
    throw StageError("llm-ranking", e.what());
  }

  if (report.candidates.size() == 1) {
    report.selected_id = report.candidates.front();
    return report;
  }

  std::vector<RetrievalHit> hits;
  try {
    hits = retrieve(skill, corpus, encoder, kDefaultRetrievalCount);
  } catch (const Error& e) {
    throw StageError("retrieval", e.what());
  }
  std::vector<FlowVideo> demo_videos;
  std::vector<DemoRecord> demo_records;
  for (const auto& hit : hits) {
    demo_videos.push_back(corpus[hit.corpus_index].video);
    demo_records.push_back(corpus[hit.corpus_index]);
  }

  ScoreVector llm_candidates;
  llm_candidates.higher_is_better = true;
  report.flow_scores.higher_is_better = false;
  report.appearance_scores.higher_is_better = false;
  try {
    for (int id : report.candidates) {
      const auto& tmpl = library[static_cast<std::size_t>(id)];
      auto exec = execute_template(scene, tmpl, kEpisodeFrames + 1, seeds.episode);

      report.flow_scores.ids.push_back(id);
      report.flow_scores.scores.push_back(score_template_flow(exec.flow, demo_videos, codec));
      report.appearance_scores.ids.push_back(id);
      report.appearance_scores.scores.push_back(
          score_template_appearance(exec.appearance, demo_records));

      const std::size_t pos = static_cast<std::size_t>(
          std::find(report.llm_scores.ids.begin(), report.llm_scores.ids.end(), id) -
          report.llm_scores.ids.begin());
      llm_candidates.ids.push_back(id);
      llm_candidates.scores.push_back(report.llm_scores.scores[pos]);
    }
  } catch (const Error& e) {
    throw StageError("candidate-scoring", e.what());
  }

  try {
    report.llm_normalized = minmax_normalize(llm_candidates);
    report.flow_normalized = minmax_normalize(report.flow_scores);
    report.combined = combine(report.llm_normalized, report.flow_normalized, lambda);
    report.selected_id = select(report.combined);
  } catch (const Error& e) {
    throw StageError("fusion", e.what());
  }
  return report;
}

}  // namespace tsel
