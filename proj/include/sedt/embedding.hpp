#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "sedt/conversation.hpp"

namespace sedt {

using EmbeddingVector = std::vector<double>;

class EmbeddingProvider {
public:
    virtual ~EmbeddingProvider() = default;

    /// One vector per input text, order-aligned. The same text must map to
    /// the same vector for the lifetime of the provider instance.
    /// Implementations must be safe to call from multiple threads.
    virtual std::vector<EmbeddingVector> embed_batch(const std::vector<std::string>& texts) = 0;

    /// Vector length; 0 if not yet known (remote providers learn it lazily).
    virtual std::size_t dimension() const = 0;
};

inline constexpr std::size_t kMaxEmbeddedResponseChars = 30;

/// Text fed to the embedder for one shard: the intermediate response is
/// appended (space-separated) only when it is at most 30 characters long,
/// keeping verbose intermediate output away from the relevance estimate.
std::string shard_embed_text(const Shard& shard);

/// dot(a,b) / (|a|*|b|). Throws std::invalid_argument on dimension mismatch
/// or a zero-norm input.
double cosine_similarity(const EmbeddingVector& a, const EmbeddingVector& b);

/// Deterministic unit-norm vector derived from a stable hash of (text, seed).
/// Identical inputs give identical vectors across runs and platforms.
EmbeddingVector hash_embed(const std::string& text, std::size_t dim, std::uint64_t seed);

class HashEmbedder final : public EmbeddingProvider {
public:
    explicit HashEmbedder(std::size_t dim = 64, std::uint64_t seed = 0);
    std::vector<EmbeddingVector> embed_batch(const std::vector<std::string>& texts) override;
    std::size_t dimension() const override { return dim_; }

private:
    std::size_t dim_;
    std::uint64_t seed_;
};

/// Test embedder mapping known texts to prescribed anchor similarities.
/// A text maps to the 2-D unit vector (s, sqrt(1-s^2)) where s is its entry
/// in the map (clamped to [-1,1]); texts absent from the map use the default
/// value, 1.0 by default, which embeds to the reference axis. The anchor is
/// normally left out of the map so that cosine(anchor, shard) == s.
class StubEmbedder final : public EmbeddingProvider {
public:
    explicit StubEmbedder(std::unordered_map<std::string, double> sem_by_text,
                          double default_sem = 1.0);

    /// Loads {"default": number?, "sem": {"<text>": number, ...}}.
    static std::unique_ptr<StubEmbedder> from_file(const std::string& path);

    std::vector<EmbeddingVector> embed_batch(const std::vector<std::string>& texts) override;
    std::size_t dimension() const override { return 2; }

private:
    std::unordered_map<std::string, double> sem_by_text_;
    double default_sem_;
};

/// Thread-safe memo cache in front of another provider. Sound because
/// providers are deterministic by contract.
class CachingEmbedder final : public EmbeddingProvider {
public:
    explicit CachingEmbedder(EmbeddingProvider& inner);
    std::vector<EmbeddingVector> embed_batch(const std::vector<std::string>& texts) override;
    std::size_t dimension() const override;
    std::size_t cache_size() const;

private:
    EmbeddingProvider& inner_;
    mutable std::mutex mutex_;
    std::unordered_map<std::string, EmbeddingVector> cache_;
};

struct RemoteEmbedderConfig {
    std::string base_url;             // e.g. http://localhost:8080
    std::string path = "/v1/embeddings";
    std::string model;                // e.g. all-mpnet-base-v2
    std::string api_key;              // empty -> no Authorization header
    int max_retries = 3;
    int initial_backoff_ms = 500;
    int timeout_s = 120;
};

/// HTTP client for a JSON embeddings endpoint:
/// request {"model": ..., "input": [texts]}, response {"data": [{"index": i,
/// "embedding": [...]}]}. Transient failures (connection errors, 408/409/429,
/// 5xx) are retried with capped exponential backoff.
class RemoteEmbedder final : public EmbeddingProvider {
public:
    explicit RemoteEmbedder(RemoteEmbedderConfig config);
    ~RemoteEmbedder() override;

    std::vector<EmbeddingVector> embed_batch(const std::vector<std::string>& texts) override;
    std::size_t dimension() const override;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace sedt
