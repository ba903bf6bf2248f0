#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sedt/llm.hpp"
#include "sedt/rtg.hpp"

namespace sedt {

/// The complete annotated conversation as presented at the final turn.
/// Every shard revealed so far is an entry; nothing is dropped.
struct AnnotatedHistory {
    std::vector<AnnotatedShard> entries;
    GoalAnchor anchor;
    std::string final_query;  // the last shard's text
};

AnnotatedHistory make_history(const Annotation& annotation, const GoalAnchor& anchor);

struct PromptBundle {
    std::string system_text;
    std::vector<ChatMessage> messages;
};

/// Versioned prompt wording. "{anchor}" and "{answer}" are substituted at
/// render time. The defaults are frozen by golden-file tests; overrides can
/// be loaded from a JSON file but change the recorded version string.
struct PromptTemplates {
    std::string version;
    std::string base_system;         // uses {anchor}
    std::string sedt_system;         // uses {anchor}
    std::string verify_instruction;  // uses {answer}

    static const PromptTemplates& defaults();
    static PromptTemplates from_file(const std::string& path);
};

/// Annotation line form: "[RTG=<2 decimals>] [<LABEL>] <shard text>".
std::string format_rtg(double value);
std::string format_annotated_line(const AnnotatedShard& entry);

/// Full annotated history as alternating user/assistant messages; the last
/// message is the final query's annotated line. Intermediate responses are
/// included untruncated (the 30-character rule applies to embedding input
/// only, never to prompt content).
PromptBundle render_sedt_prompt(const AnnotatedHistory& history,
                                const PromptTemplates& templates = PromptTemplates::defaults());

/// Flat baseline: plain alternating user/assistant messages, no scores or
/// labels; system text is the base task instruction only.
PromptBundle render_sharded_prompt(const std::vector<Shard>& shards,
                                   const GoalAnchor& anchor,
                                   const PromptTemplates& templates = PromptTemplates::defaults());

/// SeDT prompt plus one appended user turn instructing the model to
/// re-derive the answer attending to CONFIRMED shards, with the first
/// answer embedded for reference. Throws on an empty first answer.
PromptBundle render_verify_prompt(const AnnotatedHistory& history,
                                  const std::string& first_answer,
                                  const PromptTemplates& templates = PromptTemplates::defaults());

ChatRequest to_chat_request(const PromptBundle& bundle, const ChatOptions& options = {});

/// Flattened "role: content" transcript form, for logs.
std::string bundle_to_text(const PromptBundle& bundle);

/// Scripted-mock support: verify turns embed the first answer between
/// stable markers so offline clients can detect verification requests and
/// echo the original answer.
bool is_verify_request(const ChatRequest& request);
std::optional<std::string> extract_first_answer(const std::string& text);

}  // namespace sedt
