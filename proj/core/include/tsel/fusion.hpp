#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tsel/codec.hpp"
#include "tsel/lang.hpp"
#include "tsel/retrieval.hpp"
#include "tsel/scores.hpp"
#include "tsel/sim.hpp"

namespace tsel {

inline constexpr double kDefaultLambda = 0.1;
inline constexpr int kDefaultCandidateCount = 5;

/// Min-max rescale to [0,1] over the candidate set; a constant vector maps
/// everything to 0.5. Requires at least 2 entries.
ScoreVector minmax_normalize(const ScoreVector& scores);

/// S_combined = lambda * S_llm + (1 - S_flow), per id; higher is better.
ScoreVector combine(const ScoreVector& s_llm, const ScoreVector& s_flow, double lambda);

/// Id of the maximum score; ties break toward the lower id.
int select(const ScoreVector& combined);

struct PipelineSeeds {
  std::uint64_t episode = 1;
};

/// Full audit trail of one selection run.
struct SelectionReport {
  SkillLabel skill;
  ScoreVector llm_scores;            // over all templates
  std::vector<int> candidates;       // LLM top-k
  ScoreVector flow_scores;           // raw mean histogram distances, candidates only
  ScoreVector appearance_scores;     // raw mean cosine distances, candidates only
  ScoreVector llm_normalized;        // min-max over candidates
  ScoreVector flow_normalized;
  ScoreVector combined;
  int selected_id = -1;
  double lambda = kDefaultLambda;
  std::uint64_t episode_seed = 0;
};

/// LLM ranking -> top-k filter -> candidate execution -> retrieval ->
/// flow/appearance scoring -> min-max normalization -> fusion -> argmax.
/// With k = 1 the single candidate is selected regardless of lambda.
SelectionReport run_pipeline(const SkillLabel& skill, const std::vector<Template>& library,
                             const std::vector<DemoRecord>& corpus, const CodecParams& codec,
                             const SequenceScorer& llm, const DualEncoder& encoder,
                             const Scene& scene, double lambda, int k,
                             const PipelineSeeds& seeds);

}  // namespace tsel
