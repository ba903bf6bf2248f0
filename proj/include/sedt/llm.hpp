#pragma once

#include <atomic>
#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace sedt {

struct ChatMessage {
    std::string role;  // "user" | "assistant"
    std::string content;

    bool operator==(const ChatMessage&) const = default;
};

struct ChatRequest {
    std::string system;
    std::vector<ChatMessage> messages;
    double temperature = 1.0;
    int max_tokens = 1000;
    std::optional<std::uint64_t> seed;
};

struct ChatOptions {
    double temperature = 1.0;
    int max_tokens = 1000;
    std::optional<std::uint64_t> seed;
};

struct ChatResult {
    std::string text;
    bool truncated = false;  // provider stopped at its token limit
};

/// Stable hex digest of the canonically serialized request (sorted-key JSON,
/// FNV-1a 64). Identical across platforms for identical requests.
std::string request_digest(const ChatRequest& request);

class LlmClient {
public:
    virtual ~LlmClient() = default;

    /// Returns the assistant text. Throws std::runtime_error carrying
    /// provider diagnostics once retries are exhausted.
    virtual ChatResult complete(const ChatRequest& request) = 0;
};

/// Deterministic offline client. Two modes:
///  - queue: pops pre-seeded replies in order (single-conversation tests);
///  - responder: a pure function of the request, safe under any parallelism.
/// Performs no network activity in either mode.
class ScriptedLlm final : public LlmClient {
public:
    using Responder = std::function<std::string(const ChatRequest&)>;

    explicit ScriptedLlm(std::vector<std::string> queue);
    explicit ScriptedLlm(Responder responder);

    /// Loads a rule file:
    /// {
    ///   "responses": ["...", ...],              // optional queue mode
    ///   "verify": "echo_first" | "<text>",      // reply for verify prompts
    ///   "match": [{"contains": "...", "reply": "..."}],
    ///   "default": "<text>"
    /// }
    /// Rules are consulted in the order verify, match, default.
    static std::unique_ptr<ScriptedLlm> from_file(const std::string& path);

    ChatResult complete(const ChatRequest& request) override;

    int calls() const { return calls_.load(); }

private:
    std::mutex mutex_;
    std::deque<std::string> queue_;
    bool queue_mode_ = false;
    Responder responder_;
    std::atomic<int> calls_{0};
};

struct RemoteLlmConfig {
    std::string base_url;  // e.g. https://api.openai.com
    std::string path = "/v1/chat/completions";
    std::string model;
    std::string api_key;   // empty -> no Authorization header
    int max_retries = 3;
    int initial_backoff_ms = 500;
    int timeout_s = 120;
    double qps = 0.0;          // client-side rate limit; 0 disables
    int max_concurrency = 8;   // in-flight request bound
};

/// OpenAI-compatible chat-completions client. Transient failures
/// (connection errors, 408/409/429, 5xx) retry with capped exponential
/// backoff; a finish_reason of "length" sets ChatResult::truncated.
class RemoteLlm final : public LlmClient {
public:
    explicit RemoteLlm(RemoteLlmConfig config);
    ~RemoteLlm() override;

    ChatResult complete(const ChatRequest& request) override;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Wraps another client and appends {request_digest, request, response}
/// JSONL records to a cassette file as calls complete.
class CassetteRecorder final : public LlmClient {
public:
    CassetteRecorder(LlmClient& inner, const std::string& cassette_path);
    ChatResult complete(const ChatRequest& request) override;

private:
    LlmClient& inner_;
    std::string path_;
    std::mutex mutex_;
};

/// Replays a recorded cassette offline; unknown request digests are errors.
class CassetteReplayLlm final : public LlmClient {
public:
    explicit CassetteReplayLlm(const std::string& cassette_path);
    ChatResult complete(const ChatRequest& request) override;
    std::size_t size() const { return responses_.size(); }

private:
    std::unordered_map<std::string, ChatResult> responses_;
};

}  // namespace sedt
