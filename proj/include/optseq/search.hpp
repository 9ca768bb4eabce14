#pragma once

#include <vector>

#include "optseq/seq.hpp"

namespace optseq {

enum class SearchTarget { Perfect, Optimal, Custom };

struct SearchSpec {
    std::size_t period = 0;
    SearchTarget target = SearchTarget::Perfect;
    std::vector<long long> custom_values; // allowed off-phase values for Custom
    bool canonicalize = false;            // keep shift-canonical representatives only
    unsigned jobs = 1;
    std::size_t max_period = 28;          // enumeration cap
};

struct SearchResult {
    std::vector<BinarySequence> hits;     // lexicographic order
    std::size_t candidates = 0;
    std::size_t raw_hit_count = 0;        // before canonical filtering
    std::size_t shift_classes = 0;
    std::size_t shift_complement_classes = 0;
    bool audited = false;                 // every hit re-verified from its full spectrum
};

/// Enumerates all 2^N assignments with an incremental difference-function
/// evaluation and returns every sequence whose off-phase spectrum satisfies
/// the target. Deterministic regardless of job count.
SearchResult exhaustive_search(const SearchSpec& spec);

/// Lexicographically least shift of a. Idempotent; spectra are unchanged.
BinarySequence canonical_form(const BinarySequence& a);

} // namespace optseq
