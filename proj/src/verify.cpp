#include "optseq/verify.hpp"

namespace optseq {

namespace {

long long reduce(long long x, long long n) {
    long long r = x % n;
    return r < 0 ? r + n : r;
}

} // namespace

std::vector<Assignment> enumerate_assignments(const std::vector<BranchParam>& params) {
    std::vector<Assignment> out{Assignment{}};
    for (const auto& p : params) {
        std::vector<Assignment> next;
        next.reserve(out.size() * p.options.size());
        for (const auto& base : out)
            for (const auto& opt : p.options) {
                Assignment a = base;
                a[p.name] = opt;
                next.push_back(std::move(a));
            }
        out = std::move(next);
    }
    return out;
}

VerificationReport verify_spectrum(const CorrelationSpectrum& computed, const PredictedSpectrum& pred) {
    if (computed.period != pred.period)
        fail(Errc::period_mismatch, "verify_spectrum: spectrum period " + std::to_string(computed.period) +
                                        " does not match prediction period " + std::to_string(pred.period));
    VerificationReport report;
    report.description = pred.provenance;
    report.total_checked = computed.period;

    const auto assignments = enumerate_assignments(pred.params);
    std::size_t best_index = 0;
    std::size_t best_count = computed.period + 1;
    for (std::size_t i = 0; i < assignments.size(); ++i) {
        std::size_t count = 0;
        for (std::size_t tau = 0; tau < computed.period; ++tau)
            if (pred.eval(static_cast<long long>(tau), assignments[i]) != computed.values[tau])
                ++count;
        report.assignment_results.push_back({assignments[i], count});
        if (count < best_count) {
            best_count = count;
            best_index = i;
        }
    }
    report.resolved = assignments[best_index];
    for (std::size_t tau = 0; tau < computed.period; ++tau) {
        const long long predicted = pred.eval(static_cast<long long>(tau), report.resolved);
        if (predicted != computed.values[tau])
            report.mismatches.push_back({static_cast<long long>(tau), predicted, computed.values[tau]});
    }
    report.verified = report.mismatches.empty();
    return report;
}

VerificationReport verify_construction(const BinarySequence& seq, const PredictedSpectrum& pred) {
    return verify_spectrum(auto_spectrum(seq), pred);
}

PredictedSpectrum predict_v(const CorrelationSpectrum& ra, const CorrelationSpectrum& rb) {
    if (ra.period != rb.period)
        fail(Errc::period_mismatch, "predict_v: spectra periods differ");
    if (ra.period % 2 == 0)
        fail(Errc::invalid_argument, "predict_v: base period must be odd");
    const long long n = static_cast<long long>(ra.period);
    const long long h = half_shift(ra.period);
    PredictedSpectrum p;
    p.period = 4 * ra.period;
    p.provenance = "interleave4(a,b,half-shifted) spectrum";
    p.eval = [ra, rb, n, h](long long tau, const Assignment&) -> long long {
        const long long t1 = tau / 4;
        const long long t2 = tau % 4;
        if (t2 == 0)
            return 2 * ra.at(t1) + 2 * rb.at(t1);
        if (t2 == 2)
            return -2 * ra.at(reduce(t1 + h, n)) + 2 * rb.at(reduce(t1 + h, n));
        return 0;
    };
    return p;
}

PredictedSpectrum predict_w(const CorrelationSpectrum& ra, const CorrelationSpectrum& rb,
                            const CorrelationSpectrum& rab, const CorrelationSpectrum& rba,
                            long long eta) {
    const std::size_t base = ra.period;
    if (rb.period != base || rab.period != base || rba.period != base)
        fail(Errc::period_mismatch, "predict_w: spectra periods differ");
    PredictedSpectrum p;
    p.period = 4 * base;
    p.provenance = "interleave4(a,eta-shifted ~a,b,eta-shifted b) spectrum";
    p.params = {{"branch", {"derived", "statement"}}};
    const long long n = static_cast<long long>(base);
    p.eval = [ra, rb, rab, rba, eta, n](long long tau, const Assignment& as) -> long long {
        const long long t1 = tau / 4;
        const long long t2 = tau % 4;
        const bool derived = as.at("branch") == "derived";
        if (t2 == 0)
            return 2 * ra.at(t1) + 2 * rb.at(t1);
        if (t2 == 2)
            return 0;
        if (t2 == 1) {
            const long long x = reduce(t1 + eta, n);
            const long long y = reduce(t1 - eta, n);
            const long long y1 = derived ? reduce(t1 + 1 - eta, n) : y;
            return -ra.at(x) + rb.at(x) - rab.at(y) + rba.at(y1);
        }
        const long long z = reduce(t1 + 1 - eta, n);
        const long long u = reduce(t1 + eta, n);
        const long long u1 = derived ? reduce(t1 + 1 + eta, n) : u;
        return -ra.at(z) + rb.at(z) + rab.at(u) - rba.at(u1);
    };
    return p;
}

PairSpectrumPredictions predict_gmw_pair(int n) {
    if (n < 2)
        fail(Errc::invalid_argument, "predict_gmw_pair: n must be >= 2");
    const long long period = (1LL << (2 * n)) - 1;
    const long long t_cols = (1LL << n) + 1;
    const long long cross0 = (1LL << (2 * n)) - (1LL << (n + 1)) + 1;
    const long long cross_class = -(1LL << (n + 1)) + 1;

    PairSpectrumPredictions out;
    out.auto_plain.period = static_cast<std::size_t>(period);
    out.auto_plain.provenance = "gmw auto (ideal two-level)";
    out.auto_plain.eval = [period](long long tau, const Assignment&) -> long long {
        return tau == 0 ? period : -1;
    };
    out.auto_modified.period = static_cast<std::size_t>(period);
    out.auto_modified.provenance = "gmw modified auto";
    out.auto_modified.eval = [period, t_cols](long long tau, const Assignment&) -> long long {
        if (tau == 0)
            return period;
        return tau % t_cols == 0 ? -1 : 3;
    };
    out.cross.period = static_cast<std::size_t>(period);
    out.cross.provenance = "gmw cross";
    out.cross.eval = [cross0, cross_class, t_cols](long long tau, const Assignment&) -> long long {
        if (tau == 0)
            return cross0;
        return tau % t_cols == 0 ? cross_class : 1;
    };
    return out;
}

PredictedSpectrum predict_legendre_auto(long long p, LegendreVariant variant) {
    if (!is_prime(p) || p < 3)
        fail(Errc::invalid_argument, "predict_legendre_auto: p must be an odd prime");
    PredictedSpectrum out;
    out.period = static_cast<std::size_t>(p);
    out.provenance = variant == LegendreVariant::First ? "legendre auto (first)" : "legendre auto (second)";
    if (p % 4 == 3) {
        out.eval = [p](long long tau, const Assignment&) -> long long { return tau == 0 ? p : -1; };
        return out;
    }
    out.params = {{"labeling", {"display", "swapped"}}};
    const bool first = variant == LegendreVariant::First;
    out.eval = [p, first](long long tau, const Assignment& as) -> long long {
        if (tau == 0)
            return p;
        // display: first variant takes 1 on residues; swapped flips the variants.
        bool one_on_qr = first == (as.at("labeling") == "display");
        const bool qr = is_quadratic_residue(tau, p);
        return (qr == one_on_qr) ? 1 : -3;
    };
    return out;
}

PredictedSpectrum predict_legendre_cross(long long p, bool first_to_second) {
    if (!is_prime(p) || p < 3)
        fail(Errc::invalid_argument, "predict_legendre_cross: p must be an odd prime");
    PredictedSpectrum out;
    out.period = static_cast<std::size_t>(p);
    out.provenance = first_to_second ? "legendre cross (l,l')" : "legendre cross (l',l)";
    if (p % 4 == 1) {
        out.eval = [p](long long tau, const Assignment&) -> long long { return tau == 0 ? p - 2 : -1; };
        return out;
    }
    out.params = {{"labeling", {"display", "swapped"}}};
    out.eval = [p, first_to_second](long long tau, const Assignment& as) -> long long {
        if (tau == 0)
            return p - 2;
        bool one_on_qr = first_to_second == (as.at("labeling") == "display");
        const bool qr = is_quadratic_residue(tau, p);
        return (qr == one_on_qr) ? 1 : -3;
    };
    return out;
}

PairSpectrumPredictions predict_twin_prime_pair(long long p) {
    if (!is_prime(p) || !is_prime(p + 2))
        fail(Errc::invalid_argument, "predict_twin_prime_pair: need twin primes");
    const long long period = p * (p + 2);
    const long long t_cols = p + 2;
    PairSpectrumPredictions out;
    out.auto_plain.period = static_cast<std::size_t>(period);
    out.auto_plain.provenance = "twin-prime auto (ideal two-level)";
    out.auto_plain.eval = [period](long long tau, const Assignment&) -> long long {
        return tau == 0 ? period : -1;
    };
    out.auto_modified.period = static_cast<std::size_t>(period);
    out.auto_modified.provenance = "twin-prime modified auto";
    out.auto_modified.eval = [period, t_cols](long long tau, const Assignment&) -> long long {
        if (tau == 0)
            return period;
        return tau % t_cols == 0 ? -1 : 3;
    };
    out.cross.period = static_cast<std::size_t>(period);
    out.cross.provenance = "twin-prime cross";
    out.cross.eval = [p, t_cols](long long tau, const Assignment&) -> long long {
        if (tau == 0)
            return p * p;
        return tau % t_cols == 0 ? -2 * p - 1 : 1;
    };
    return out;
}

PredictedSpectrum predict_ideal_pair_v(std::size_t base_period) {
    PredictedSpectrum out;
    out.period = 4 * base_period;
    out.provenance = "v of an ideal pair";
    const long long total = static_cast<long long>(out.period);
    out.eval = [total](long long tau, const Assignment&) -> long long {
        if (tau == 0)
            return total;
        return tau % 4 == 0 ? -4 : 0;
    };
    return out;
}

PredictedSpectrum predict_one_valued_pair_v(std::size_t base_period) {
    PredictedSpectrum out;
    out.period = 4 * base_period;
    out.provenance = "v of a constant-1 off-phase pair";
    const long long total = static_cast<long long>(out.period);
    out.eval = [total](long long tau, const Assignment&) -> long long {
        if (tau == 0)
            return total;
        return tau % 4 == 0 ? 4 : 0;
    };
    return out;
}

namespace {

PredictedSpectrum v_pair_form(long long period, long long t_cols, long long p_for_qr,
                              std::string provenance) {
    // tau2=0: -4 on the tau1 class, 4 off it (constant -4 when t_cols == 0);
    // tau2=2: 0 on the (tau1 + (N+1)/2) class, +-8 off it, split by residue
    // when p_for_qr is set. Sign carried as a branch parameter.
    PredictedSpectrum out;
    out.period = static_cast<std::size_t>(4 * period);
    out.provenance = std::move(provenance);
    out.params = {{"sign_tau2_2", {"+8", "-8"}}};
    const long long h = (period + 1) / 2;
    out.eval = [period, t_cols, p_for_qr, h](long long tau, const Assignment& as) -> long long {
        const long long t1 = tau / 4;
        const long long t2 = tau % 4;
        const long long sign = as.at("sign_tau2_2") == "+8" ? 1 : -1;
        if (tau == 0)
            return 4 * period;
        if (t2 == 1 || t2 == 3)
            return 0;
        if (t2 == 0) {
            if (t_cols == 0)
                return -4;
            return t1 % t_cols == 0 ? -4 : 4;
        }
        const long long x = reduce(t1 + h, period);
        if (p_for_qr != 0) {
            if (x == 0)
                return 0;
            return is_quadratic_residue(x, p_for_qr) ? 8 * sign : -8 * sign;
        }
        return x % t_cols == 0 ? 0 : 8 * sign;
    };
    return out;
}

} // namespace

PredictedSpectrum predict_v_gmw(int n, PairOrder order) {
    const long long period = (1LL << (2 * n)) - 1;
    return v_pair_form(period, (1LL << n) + 1, 0,
                       std::string("v of the gmw pair, order ") +
                           (order == PairOrder::Listed ? "listed" : "swapped"));
}

PredictedSpectrum predict_v_legendre(long long p, PairOrder order) {
    if (!is_prime(p) || p % 4 != 1)
        fail(Errc::invalid_argument, "predict_v_legendre: p must be a prime with p = 1 mod 4");
    return v_pair_form(p, 0, p,
                       std::string("v of the legendre pair, order ") +
                           (order == PairOrder::Listed ? "listed" : "swapped"));
}

PredictedSpectrum predict_v_twin_prime(long long p, PairOrder order) {
    if (!is_prime(p) || !is_prime(p + 2))
        fail(Errc::invalid_argument, "predict_v_twin_prime: need twin primes");
    return v_pair_form(p * (p + 2), p + 2, 0,
                       std::string("v of the twin-prime pair, order ") +
                           (order == PairOrder::Listed ? "listed" : "swapped"));
}

BalanceCheckReport check_balance_symmetry(const BinarySequence& s, const BinarySequence& sp,
                                          std::size_t t_columns) {
    if (s.period() != sp.period())
        fail(Errc::period_mismatch, "check_balance_symmetry: periods differ");
    if (t_columns == 0 || s.period() % t_columns != 0)
        fail(Errc::invalid_argument, "check_balance_symmetry: column count does not divide the period");

    BalanceCheckReport report;
    report.period = s.period();
    report.columns = t_columns;
    report.total_checked = s.period();

    const auto cols = deinterleave(s, t_columns);
    std::vector<long long> bal(t_columns);
    for (std::size_t j = 0; j < t_columns; ++j)
        bal[j] = balance(cols[j]);

    const auto fwd = cross_spectrum(s, sp);
    const auto rev = cross_spectrum(sp, s);
    for (std::size_t tau = 0; tau < s.period(); ++tau) {
        const std::size_t t2 = tau % t_columns;
        const bool corr_equal = fwd.values[tau] == rev.values[tau];
        const bool balance_equal = bal[(t_columns - t2) % t_columns] == bal[t2];
        if (corr_equal != balance_equal)
            report.violations.push_back({static_cast<long long>(tau), corr_equal, balance_equal});
    }
    report.verified = report.violations.empty();
    return report;
}

} // namespace optseq
