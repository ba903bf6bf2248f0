#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sedt/conversation.hpp"
#include "sedt/embedding.hpp"

namespace sedt {

struct SignalWeights {
    double alpha = 0.6;  // semantic
    double beta = 0.2;   // lexical
    double gamma = 0.2;  // positional

    /// Throws std::invalid_argument if any weight is negative.
    void validate() const;
    bool operator==(const SignalWeights&) const = default;
};

struct RelevanceBreakdown {
    double sem = 0.0;  // may be negative; never clamped
    double lex = 0.0;  // [0,1]
    double pos = 0.0;  // [0,1]
    double rel = 0.0;
};

enum class RtgModeKind { computed, random_uniform };

struct RtgMode {
    RtgModeKind kind = RtgModeKind::computed;
    std::uint64_t seed = 0;

    static RtgMode computed() { return {}; }
    static RtgMode random_uniform(std::uint64_t seed) {
        return {RtgModeKind::random_uniform, seed};
    }
    bool operator==(const RtgMode&) const = default;
};

/// Cosine similarity between the goal anchor and one shard embedding.
double semantic_signal(const EmbeddingVector& anchor_vec, const EmbeddingVector& shard_vec);

/// Jaccard similarity between the word sets of the anchor and the shard
/// text (responses never enter this signal). Returns 0 when both sets are
/// empty. Throws std::invalid_argument on an empty anchor string.
double lexical_signal(const std::string& anchor, const std::string& shard_text);

/// Inverted-U boost: 1 at the midpoint of the shard indices, decreasing
/// symmetrically to 0.5 at both endpoints. A single-shard conversation is
/// its own middle and scores 1.
double positional_signal(int t, int shard_count);

double combine(double sem, double lex, double pos, const SignalWeights& weights);

/// Scores every shard against the anchor: one batched embed call for the
/// shards plus one for the anchor. In random_uniform mode the component
/// signals are recorded as computed but rel is overwritten with a seeded
/// uniform draw from [0,1).
std::vector<RelevanceBreakdown> score_conversation(const std::vector<Shard>& shards,
                                                   const GoalAnchor& anchor,
                                                   EmbeddingProvider& provider,
                                                   const SignalWeights& weights = {},
                                                   const RtgMode& mode = {});

/// Platform-stable uniform [0,1) draws (mt19937_64 with explicit 53-bit
/// mapping, avoiding std::uniform_real_distribution's unspecified output).
std::vector<double> seeded_uniform_draws(std::uint64_t seed, std::size_t count);

}  // namespace sedt
