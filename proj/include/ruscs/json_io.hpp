#pragma once

#include "ruscs/pipeline.hpp"

#include <string>

namespace ruscs {

/**
 * Everything needed to re-verify a result from its JSON alone: the target,
 * the config, the plan coordinates and the gate list.
 */
struct ResultDocument {
    std::string target_spec;
    Vec4 target_u{};
    Config config;
    SynthesisResult result;
    std::vector<ResultDocument> followups;
};

/// Render the result JSON (stable field order, exact fraction strings, big
/// integers as decimal strings). `timestamp` is omitted when empty.
std::string result_to_json(const ResultDocument &doc, const std::string &timestamp = "");

ResultDocument result_from_json(const std::string &text);

/// 4x2 isometry schema for the synth-isometry tool: either explicit ring
/// entries {"re","im","k"} or {"n","u0","u1"} to build W' from a plan.
std::string wprime_to_json(const RMat4x2 &w);
RMat4x2 wprime_from_json(const std::string &text);

} // namespace ruscs
