#pragma once

#include <map>
#include <string>
#include <vector>

namespace optseq {

struct TargetOutcome {
    std::string report_json;
    bool verified = false;
};

/// Runs one named closed-form verification target. Targets: lemma3, lemma4,
/// lemma5, lemma6, lemma7, thm1..thm7, wlists. Parameters arrive as key=value
/// pairs; see the CLI help for the per-target grids.
TargetOutcome run_verify_target(const std::string& target,
                                const std::map<std::string, std::string>& params);

std::vector<std::string> verify_target_names();

} // namespace optseq
