#pragma once

#include <string>
#include <vector>

#include "sedt/conversation.hpp"
#include "sedt/relevance.hpp"

namespace sedt {

enum class Label { confirmed, uncertain };

std::string to_string(Label label);  // "CONFIRMED" / "UNCERTAIN"

struct AnnotatedShard {
    Shard shard;
    RelevanceBreakdown breakdown;
    double rtg = 0.0;
    Label label = Label::uncertain;
};

struct ConversationStats {
    double mean_rel = 0.0;            // rho-bar
    double std_rel = 0.0;             // population standard deviation
    double uncertain_fraction = 0.0;  // u_r
    double mean_rtg = 0.0;            // mean of the pre-guarantee RTGs
};

/// Suffix sums: result[t] = sum of rels[t..T-1]. Throws on an empty input.
std::vector<double> compute_rtg(const std::vector<double>& rels);

/// Raises only the last element to max(itself, mean of the input list).
std::vector<double> apply_last_shard_guarantee(const std::vector<double>& rtgs);

struct LabelResult {
    std::vector<Label> labels;
    ConversationStats stats;  // mean_rtg is left 0 here; annotate() fills it
};

/// CONFIRMED where rel >= mean(rels), else UNCERTAIN. The labeling threshold
/// is clamped to max(rels) so that at least one shard is always CONFIRMED
/// even when floating-point summation puts the mean a hair above the max
/// (constant vectors). stats.mean_rel is the unclamped mean.
LabelResult assign_labels(const std::vector<double>& rels);

struct Annotation {
    std::vector<AnnotatedShard> entries;
    ConversationStats stats;
};

/// Full annotation: suffix-sum RTG, last-shard guarantee, labels.
/// Throws std::invalid_argument when the lengths differ or are zero.
Annotation annotate(const std::vector<Shard>& shards,
                    const std::vector<RelevanceBreakdown>& breakdowns);

}  // namespace sedt
