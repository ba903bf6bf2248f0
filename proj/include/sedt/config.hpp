#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "sedt/conversation.hpp"
#include "sedt/embedding.hpp"
#include "sedt/llm.hpp"
#include "sedt/relevance.hpp"

namespace sedt {

/// Resolved run configuration. Defaults mirror the evaluation protocol:
/// alpha=0.6, beta=0.2, gamma=0.2, n=5, temperature=1.0, max_tokens=1000.
/// Credentials are taken from environment variables only (never flags or
/// config files) because reports embed the resolved config verbatim.
struct RunConfig {
    std::string dataset_path;
    TaskKind task = TaskKind::math;
    std::string strategy = "sedt";  // sedt | sharded | both
    SignalWeights weights{};
    std::string rtg_mode = "computed";  // computed | random
    int n = 5;
    double temperature = 1.0;
    int max_tokens = 1000;
    int parallelism = 1;
    std::optional<std::uint64_t> seed;
    bool correction_enabled = true;
    std::string embedder_spec = "hash";  // remote | hash | stub:<file>
    std::string llm_spec = "remote";     // remote | scripted:<file> | cassette:<file>
    std::string record_cassette_path;    // with llm=remote: also record to this file
    std::string template_path;           // optional prompt template override
    std::string out_dir = "out";

    /// Throws std::invalid_argument describing the first problem found.
    void validate() const;

    /// Applies keys present in a JSON config file over the current values.
    void apply_file(const std::string& path);
};

/// Environment variables consulted by the factories:
///   SEDT_LLM_BASE_URL / OPENAI_BASE_URL, SEDT_LLM_API_KEY / OPENAI_API_KEY,
///   SEDT_LLM_MODEL / OPENAI_MODEL,
///   SEDT_EMBED_BASE_URL, SEDT_EMBED_API_KEY, SEDT_EMBED_MODEL.
std::unique_ptr<EmbeddingProvider> make_embedder(const RunConfig& config);
std::unique_ptr<LlmClient> make_llm(const RunConfig& config);

}  // namespace sedt
