#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "optseq/seq.hpp"

namespace optseq {

enum class SpectrumKind { Auto, Cross };

/// Exact integer periodic correlation values R(0)..R(N-1).
struct CorrelationSpectrum {
    std::size_t period = 0;
    SpectrumKind kind = SpectrumKind::Auto;
    std::vector<long long> values;

    long long at(long long tau) const;
    std::map<long long, std::size_t> histogram() const;
    std::set<long long> offphase_values() const;
};

/// tau = T*tau1 + tau2 with 0 <= tau2 < T.
struct TauDecomposition {
    long long tau = 0;
    long long tau1 = 0;
    long long tau2 = 0;
};
TauDecomposition decompose_tau(long long tau, std::size_t column_count);

/// R_{ab}(tau) = sum_t (-1)^{a(t)+b(t+tau)}, indices mod N.
long long cross_corr(const BinarySequence& a, const BinarySequence& b, long long tau);

CorrelationSpectrum auto_spectrum(const BinarySequence& a);
CorrelationSpectrum cross_spectrum(const BinarySequence& a, const BinarySequence& b);

/// Support-route autocorrelation: N - 4*(k - |(tau+C) cap C|).
long long auto_corr_via_support(const BinarySequence& a, long long tau);

/// Transform-based path. Must agree bit-exactly with auto_spectrum; when the
/// rounding guard trips the naive engine is used instead and the flag is set.
struct FastSpectrumResult {
    CorrelationSpectrum spectrum;
    bool guard_tripped = false;
    double max_residual = 0.0;
};
FastSpectrumResult fast_auto_spectrum(const BinarySequence& a);

/// Autocorrelation of interleave(columns) at a single shift, evaluated through
/// the column decomposition: with tau = T*tau1 + tau2,
///   R(tau) = sum_j R_{c_j, c_{(j+tau2) mod T}}(tau1 + [j+tau2 >= T]).
long long interleaved_corr_decompose(const std::vector<BinarySequence>& columns, long long tau);

std::string spectrum_text(const CorrelationSpectrum& s);
std::string spectrum_csv(const CorrelationSpectrum& s);
std::string spectrum_json(const CorrelationSpectrum& s);

} // namespace optseq
