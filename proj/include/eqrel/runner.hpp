#pragma once

#include "eqrel/relation.hpp"
#include "eqrel/spec_document.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace eqrel::spec {

enum class ExitCode : int {
    ok = 0,
    usage = 1,         // parse errors, bad arguments, missing bounds
    window = 2,        // a query left a decided window
    refuted = 3,       // `reduce assert` found no witness
    violation = 4,     // an audit produced violation evidence
    precondition = 5,  // coverage and other operation preconditions
    internal = 70,
};

struct Artifact {
    std::string name;
    std::string content;
};

struct RunOptions {
    std::optional<std::filesystem::path> out_dir;
    std::optional<OutputFormat> format; // overrides per-command formats
};

struct RunResult {
    ExitCode exit_code = ExitCode::ok;
    std::vector<Artifact> artifacts;
    std::string diagnostics;
};

/*
 * Executes the document's commands in order. Errors stop the run and are
 * reported with the failing command's index; refuted assertions and
 * violation evidence are recorded and the run continues. The first nonzero
 * code becomes the exit code.
 */
RunResult run(const SpecDocument& doc, const RunOptions& options = {});

// Evaluates every relation declaration in order (used by run and tests).
std::map<std::string, Relation> evaluate_relations(const SpecDocument& doc);

// CSV class table: element,representative,class_size_on_window.
std::string class_table_csv(const Relation& r, Nat bound);
std::string class_table_text(const Relation& r, Nat bound);
// One node per window element, one edge per union-find merge.
std::string partition_dot(const Relation& r, Nat bound, const std::string& graph_name);
std::string merge_log_text(const Relation& r);

} // namespace eqrel::spec
