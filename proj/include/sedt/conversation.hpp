#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace sedt {

/// One turn's atomic user content plus the intermediate model reply it
/// received, if any. The final shard of a live conversation has no response.
struct Shard {
    int index = 0;
    std::string text;
    std::optional<std::string> response;

    bool operator==(const Shard&) const = default;
};

enum class TaskKind { math, actions, code };

TaskKind task_from_string(const std::string& name);
std::string to_string(TaskKind task);

/// Task-typed statement of the expected output goal.
struct GoalAnchor {
    std::string text;
};

GoalAnchor anchor_for(TaskKind task);
std::string scorer_id_for(TaskKind task);

struct ShardedInstruction {
    std::string id;
    TaskKind task = TaskKind::math;
    std::vector<std::string> shards;
    std::string reference;  // opaque payload interpreted by the task's scorer

    bool operator==(const ShardedInstruction&) const = default;
};

/// Builds Shard objects (indices 0..T-1) from an instruction's shard texts,
/// attaching the intermediate responses collected so far.
std::vector<Shard> make_shards(const std::vector<std::string>& texts,
                               const std::vector<std::string>& responses = {});

/// Reads a JSONL dataset (one record per line: {id, task, shards, reference})
/// and returns the records matching `task` in file order.
/// Throws std::runtime_error naming the line number on malformed input.
std::vector<ShardedInstruction> load_dataset(const std::string& path, TaskKind task);

/// Writes records back out in the same JSONL schema.
void save_dataset(const std::string& path, const std::vector<ShardedInstruction>& records);

/// Unique lowercased whitespace-separated tokens with non-alphanumeric
/// leading/trailing characters stripped. Interior punctuation (e.g. hyphens)
/// is preserved; tokens that strip to nothing are dropped.
std::set<std::string> word_set(const std::string& s);

/// word_set(s) filtered to tokens longer than three characters.
std::set<std::string> content_words(const std::string& s);

}  // namespace sedt
