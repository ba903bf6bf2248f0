#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sedt/llm.hpp"
#include "sedt/prompting.hpp"
#include "sedt/rtg.hpp"

namespace sedt {

/// Full record of one correction decision: Guard-1 trigger inputs and the
/// Guard-2 acceptance outcome.
struct CorrectionAudit {
    double z_last = 0.0;
    double u_r = 0.0;
    double weakness = 0.0;   // W
    double threshold = 0.0;  // tau
    bool triggered = false;
    std::optional<std::string> verifier_answer;
    bool accepted = false;
    double cov_first = 0.0;
    double cov_verifier = 0.0;
    std::string error_note;  // non-empty when the verify call failed
};

struct WeaknessScore {
    double z_last = 0.0;
    double weakness = 0.0;
};

/// z_last = (rel(T-1) - mean) / sigma, W = (-z_last) * u_r. A zero-variance
/// conversation carries no relative-weakness signal: sigma = 0 gives
/// z = W = 0 and the guard never fires.
WeaknessScore weakness_score(double rel_last, const ConversationStats& stats);

/// tau = 0.5 * (1 - mean_rel): lower when the conversation is globally weak.
double adaptive_threshold(const ConversationStats& stats);

/// Fraction of confirmed shards sharing at least one content word
/// (length > 3) with the answer, matching whole tokens. Empty shard list
/// gives 0, which combined with the strict acceptance inequality makes
/// replacement impossible without confirmed shards.
double coverage(const std::string& answer, const std::vector<Shard>& confirmed_shards);

using AnswerEquality = std::function<bool(const std::string&, const std::string&)>;

/// Default answer equality: exact comparison after whitespace trimming.
bool answers_equal_trimmed(const std::string& a, const std::string& b);

struct CorrectionOutcome {
    std::string answer;
    CorrectionAudit audit;
};

using AuditSink = std::function<void(const CorrectionAudit&)>;

/// Guard 1: verify only when W > tau (at most one extra LLM call, none when
/// the guard stays quiet). Guard 2: the verifier's answer replaces the first
/// answer only when the answers differ AND the verifier strictly improves
/// confirmed-shard coverage. A failed verify call keeps the first answer and
/// notes the error in the audit.
CorrectionOutcome maybe_correct(const AnnotatedHistory& history,
                                const ConversationStats& stats,
                                const std::string& first_answer,
                                LlmClient& llm,
                                const ChatOptions& options = {},
                                AnswerEquality answers_equal = answers_equal_trimmed,
                                const PromptTemplates& templates = PromptTemplates::defaults(),
                                AuditSink sink = {});

}  // namespace sedt
