#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "optseq/constructions.hpp"
#include "optseq/correlation.hpp"

namespace optseq {

/// A discrete unresolved choice inside a closed form (labeling, sign, branch).
struct BranchParam {
    std::string name;
    std::vector<std::string> options;
};

using Assignment = std::map<std::string, std::string>;

/// Piecewise closed-form spectrum, evaluable at every shift for any assignment
/// of its branch parameters. Parameter-free forms have an empty params list.
struct PredictedSpectrum {
    std::size_t period = 0;
    std::string provenance;
    std::vector<BranchParam> params;
    std::function<long long(long long tau, const Assignment&)> eval;
};

struct Mismatch {
    long long tau = 0;
    long long predicted = 0;
    long long computed = 0;
};

struct AssignmentResult {
    Assignment assignment;
    std::size_t mismatch_count = 0;
};

struct VerificationReport {
    std::string description;
    std::size_t total_checked = 0;
    bool verified = false;
    Assignment resolved;                            // assignment with fewest mismatches
    std::vector<Mismatch> mismatches;               // for the resolved assignment
    std::vector<AssignmentResult> assignment_results;
};

/// Compare an already-computed spectrum against a prediction, trying every
/// branch assignment and keeping the one with fewest mismatches.
VerificationReport verify_spectrum(const CorrelationSpectrum& computed, const PredictedSpectrum& pred);
/// Brute-force the autocorrelation of seq, then verify_spectrum.
VerificationReport verify_construction(const BinarySequence& seq, const PredictedSpectrum& pred);

/// Four-column interleave spectrum of I(a, b, L^{(N+1)/2}(~a), L^{(N+1)/2}(b)):
///   tau2=0: 2Ra(t1)+2Rb(t1); tau2 odd: 0; tau2=2: -2Ra(t1+h)+2Rb(t1+h).
PredictedSpectrum predict_v(const CorrelationSpectrum& ra, const CorrelationSpectrum& rb);

/// Spectrum of I(a, L^eta(~a), b, L^eta(b)). Carries a "branch" parameter:
/// "derived" is the column-decomposition form, "statement" the variant whose
/// odd-shift cross terms sit at equal arguments.
PredictedSpectrum predict_w(const CorrelationSpectrum& ra, const CorrelationSpectrum& rb,
                            const CorrelationSpectrum& rab, const CorrelationSpectrum& rba,
                            long long eta);

/// Closed forms for the interleaved pair built from one all-zero column
/// (auto, modified auto, cross). Period 2^{2n}-1, class condition mod 2^n+1.
struct PairSpectrumPredictions {
    PredictedSpectrum auto_plain;
    PredictedSpectrum auto_modified;
    PredictedSpectrum cross;
};
PairSpectrumPredictions predict_gmw_pair(int n);

/// Legendre auto spectrum; for p = 1 mod 4 carries a "labeling" parameter
/// ("display" or "swapped") deciding which variant takes which residue class.
PredictedSpectrum predict_legendre_auto(long long p, LegendreVariant variant);
/// Legendre cross spectrum R_{l l'} (or the reversed order); labeling
/// parameter present for p = 3 mod 4.
PredictedSpectrum predict_legendre_cross(long long p, bool first_to_second);

/// Twin-prime pair spectra; class condition mod p+2.
PairSpectrumPredictions predict_twin_prime_pair(long long p);

enum class PairOrder { Listed, Swapped };

/// Four-column interleave of an ideal pair: {4N; -4 at tau2=0; 0 elsewhere}.
PredictedSpectrum predict_ideal_pair_v(std::size_t base_period);
/// Same for inputs with constant off-phase value 1: {4N; 4 at tau2=0; 0 else}.
PredictedSpectrum predict_one_valued_pair_v(std::size_t base_period);

/// Instantiated four-column forms for the gmw / legendre / twin-prime pairs;
/// each carries a "sign_tau2_2" parameter for the +-8 branch.
PredictedSpectrum predict_v_gmw(int n, PairOrder order);
PredictedSpectrum predict_v_legendre(long long p, PairOrder order);
PredictedSpectrum predict_v_twin_prime(long long p, PairOrder order);

/// Balance-symmetry check for a pair interleaved over T columns that differ
/// exactly in column 0: for every tau, R_{s's}(tau) = R_{ss'}(tau) must hold
/// iff the data columns at indices tau2 and T-tau2 have equal balance.
struct BalanceCheckRow {
    long long tau = 0;
    bool corr_equal = false;
    bool balance_equal = false;
};
struct BalanceCheckReport {
    std::size_t period = 0;
    std::size_t columns = 0;
    std::size_t total_checked = 0;
    bool verified = false;
    std::vector<BalanceCheckRow> violations;
};
BalanceCheckReport check_balance_symmetry(const BinarySequence& s, const BinarySequence& sp,
                                          std::size_t t_columns);

/// Enumerate all assignments of a prediction's branch parameters.
std::vector<Assignment> enumerate_assignments(const std::vector<BranchParam>& params);

} // namespace optseq
