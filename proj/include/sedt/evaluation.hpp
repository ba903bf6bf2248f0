#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sedt/conversation.hpp"
#include "sedt/embedding.hpp"
#include "sedt/llm.hpp"
#include "sedt/prompting.hpp"
#include "sedt/relevance.hpp"
#include "sedt/selfcorrect.hpp"

namespace sedt {

enum class Strategy { sedt, sharded };

Strategy strategy_from_string(const std::string& name);
std::string to_string(Strategy strategy);

using Scorer = std::function<double(const std::string& answer, const std::string& reference)>;

/// Last number in the text (tolerant of thousands separators, currency
/// symbols, and trailing punctuation) compared to the reference: exact for
/// integers, relative tolerance 1e-6 otherwise. No extractable number is a 0.
double score_math(const std::string& answer, const std::string& reference);

/// 1 iff the whitespace-normalized, case-folded strings are equal.
double score_exact(const std::string& answer, const std::string& reference);

std::optional<double> extract_final_number(const std::string& text);

Scorer scorer_for(TaskKind task);

/// Answer equality used by the Guard-2 "answers differ" check: the task
/// scorer's normalized extraction when it has one, else trimmed comparison.
AnswerEquality answer_equality_for(TaskKind task);

struct TurnRecord {
    int turn = 0;
    std::string user_text;  // newly revealed shard, or the flattened final prompt
    std::string assistant_text;
    double score = 0.0;
};

struct RunRecord {
    std::string example_id;
    Strategy strategy = Strategy::sedt;
    int run_index = 0;
    std::uint64_t seed = 0;
    std::vector<TurnRecord> transcript;
    std::string final_answer;
    double score = 0.0;  // in {0,1} for the binary-correctness tasks
    std::optional<CorrectionAudit> audit;
    bool terminated_early = false;
    bool error = false;       // provider failure, logged distinctly from a wrong answer
    std::string error_note;
};

std::string run_record_to_json_line(const RunRecord& record);

struct SimulationConfig {
    Strategy strategy = Strategy::sedt;
    SignalWeights weights{};
    RtgMode rtg_mode{};
    bool correction_enabled = true;
    ChatOptions chat{};
    PromptTemplates templates = PromptTemplates::defaults();
};

/// Deterministic per-run seed from (batch seed, example id, run index).
std::uint64_t derive_run_seed(std::uint64_t batch_seed, const std::string& example_id,
                              int run_index);

/// One simulated conversation: shards revealed one per turn, each
/// intermediate reply scored for early termination, final turn rendered by
/// the strategy (SeDT: annotate + render + correct; sharded: flat prompt).
/// Provider failures yield a score-0 record flagged error=true.
RunRecord simulate_conversation(const ShardedInstruction& instr,
                                const SimulationConfig& config,
                                EmbeddingProvider& embedder,
                                LlmClient& llm,
                                std::uint64_t run_seed,
                                int run_index = 0);

struct BatchConfig {
    SimulationConfig sim{};
    int runs_per_example = 5;
    int parallelism = 1;
    std::uint64_t seed = 0;
    std::string run_log_path;  // empty -> no streaming log
};

/// n independent runs per instruction, conversations dispatched across
/// `parallelism` workers, records streamed to the run log as they complete.
/// Individual run errors never abort the batch. The returned vector is in
/// canonical (example id, strategy, run index) order.
std::vector<RunRecord> run_batch(const std::vector<ShardedInstruction>& instructions,
                                 const BatchConfig& config,
                                 EmbeddingProvider& embedder,
                                 LlmClient& llm);

void sort_canonical(std::vector<RunRecord>& records);

/// Nearest-rank percentile: the ceil(p*n)-th order statistic of the values.
double nearest_rank_percentile(std::vector<double> values, double p);

struct ExampleMetrics {
    std::vector<double> scores;       // n run scores in {0,1}
    double p_bar = 0.0;               // 0-100
    double aptitude = 0.0;            // 90th percentile, 0-100
    double unreliability = 0.0;       // 90th - 10th percentile gap, 0-100
};

struct RunMetrics {
    std::map<std::string, ExampleMetrics> per_example;
    double p_bar = 0.0;
    double aptitude = 0.0;
    double unreliability = 0.0;
    int runs_per_example = 0;
    std::string percentile_method = "nearest-rank";
};

/// Per-example P/A/U from the n run scores, averaged unweighted across
/// examples, on the 0-100 scale. Requires a uniform run count and a single
/// strategy; errors name the offending example.
RunMetrics compute_metrics(const std::vector<RunRecord>& records);

}  // namespace sedt
