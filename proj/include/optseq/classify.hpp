#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "optseq/correlation.hpp"
#include "optseq/seq.hpp"

namespace optseq {

enum class SpectrumLabel { Perfect, Optimal, Other };

/// Off-phase value-set classification against the known minimal value tables.
struct SpectrumClassification {
    int period_residue = 0; // N mod 4
    std::map<long long, std::size_t> offphase_histogram;
    SpectrumLabel label = SpectrumLabel::Other;
    bool ideal_two_level = false; // constant -1 off-phase (implies Perfect, N%4==3)
    std::string description;
};

/// Smallest achievable off-phase value set for each period residue.
std::vector<std::vector<long long>> perfect_value_sets(int period_residue);
/// Next smallest value set for each period residue.
std::vector<long long> optimal_value_set(int period_residue);

SpectrumClassification classify_spectrum(const CorrelationSpectrum& spec);

struct AdsParams {
    std::size_t n = 0;
    std::size_t k = 0;
    long long lambda = 0;
    std::size_t t = 0;
};

/// Difference-function report: d_C(w) = |(w+C) cap C| for w = 1..N-1.
/// ads_params is filled only when d_C takes exactly two adjacent values.
struct AdsReport {
    std::size_t period = 0;
    std::size_t k = 0;
    std::vector<long long> diff_counts; // index w, entry 0 unused
    std::map<long long, std::size_t> value_histogram;
    std::optional<AdsParams> ads_params;
};

AdsReport diff_function(const Support& c);
AdsReport ads_of_sequence(const BinarySequence& a);

std::string classification_label(const SpectrumClassification& c);
std::string classification_json(const BinarySequence& a);
std::string ads_json(const AdsReport& r);

} // namespace optseq
