#include "optseq/correlation.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <sstream>

#include "json.hpp"

namespace optseq {

namespace {

std::vector<std::uint64_t> pack_bits(const std::vector<std::uint8_t>& bits, std::size_t copies) {
    const std::size_t n = bits.size() * copies;
    std::vector<std::uint64_t> w((n + 63) / 64, 0);
    for (std::size_t i = 0; i < n; ++i)
        if (bits[i % bits.size()])
            w[i >> 6] |= 1ull << (i & 63);
    return w;
}

// Word-packed disagreement count between a and b shifted left by tau.
// b_dbl holds two periods of b so the window never wraps.
long long packed_diff(const std::vector<std::uint64_t>& a_w,
                      const std::vector<std::uint64_t>& b_dbl,
                      std::size_t n, std::size_t tau) {
    const std::size_t word = tau >> 6;
    const unsigned off = static_cast<unsigned>(tau & 63);
    const std::size_t nw = (n + 63) / 64;
    long long diff = 0;
    for (std::size_t i = 0; i < nw; ++i) {
        std::uint64_t win = b_dbl[word + i] >> off;
        if (off)
            win |= b_dbl[word + i + 1] << (64 - off);
        std::uint64_t x = a_w[i] ^ win;
        if (i == nw - 1 && (n & 63))
            x &= (1ull << (n & 63)) - 1;
        diff += std::popcount(x);
    }
    return diff;
}

CorrelationSpectrum packed_spectrum(const BinarySequence& a, const BinarySequence& b,
                                    SpectrumKind kind) {
    const std::size_t n = a.period();
    auto a_w = pack_bits(a.bits(), 1);
    auto b_dbl = pack_bits(b.bits(), 2);
    b_dbl.push_back(0); // window reads may touch one word past 2N bits
    CorrelationSpectrum s;
    s.period = n;
    s.kind = kind;
    s.values.resize(n);
    for (std::size_t tau = 0; tau < n; ++tau) {
        const long long diff = packed_diff(a_w, b_dbl, n, tau);
        s.values[tau] = static_cast<long long>(n) - 2 * diff;
    }
    return s;
}

void fft(std::vector<std::complex<double>>& v, bool inverse) {
    const std::size_t n = v.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1)
            j ^= bit;
        j ^= bit;
        if (i < j)
            std::swap(v[i], v[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = (inverse ? 2.0 : -2.0) * M_PI / static_cast<double>(len);
        const std::complex<double> step(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const auto u = v[i + k];
                const auto t = v[i + k + len / 2] * w;
                v[i + k] = u + t;
                v[i + k + len / 2] = u - t;
                w *= step;
            }
        }
    }
    if (inverse) {
        const double inv = 1.0 / static_cast<double>(n);
        for (auto& x : v)
            x *= inv;
    }
}

} // namespace

long long CorrelationSpectrum::at(long long tau) const {
    const long long n = static_cast<long long>(period);
    long long r = tau % n;
    if (r < 0)
        r += n;
    return values[static_cast<std::size_t>(r)];
}

std::map<long long, std::size_t> CorrelationSpectrum::histogram() const {
    std::map<long long, std::size_t> h;
    for (auto v : values)
        ++h[v];
    return h;
}

std::set<long long> CorrelationSpectrum::offphase_values() const {
    std::set<long long> s;
    for (std::size_t tau = 1; tau < values.size(); ++tau)
        s.insert(values[tau]);
    return s;
}

TauDecomposition decompose_tau(long long tau, std::size_t column_count) {
    if (tau < 0)
        fail(Errc::invalid_argument, "decompose_tau: tau must be non-negative");
    if (column_count == 0)
        fail(Errc::invalid_argument, "decompose_tau: column count must be positive");
    const long long t = static_cast<long long>(column_count);
    return TauDecomposition{tau, tau / t, tau % t};
}

long long cross_corr(const BinarySequence& a, const BinarySequence& b, long long tau) {
    const std::size_t n = a.period();
    if (b.period() != n)
        fail(Errc::period_mismatch, "cross_corr: periods differ (" + std::to_string(n) + " vs " +
                                        std::to_string(b.period()) + ")");
    long long m = tau % static_cast<long long>(n);
    if (m < 0)
        m += static_cast<long long>(n);
    long long sum = 0;
    for (std::size_t t = 0; t < n; ++t) {
        std::size_t u = t + static_cast<std::size_t>(m);
        if (u >= n)
            u -= n;
        sum += (a.bit(t) == b.bit(u)) ? 1 : -1;
    }
    return sum;
}

CorrelationSpectrum auto_spectrum(const BinarySequence& a) {
    return packed_spectrum(a, a, SpectrumKind::Auto);
}

CorrelationSpectrum cross_spectrum(const BinarySequence& a, const BinarySequence& b) {
    if (b.period() != a.period())
        fail(Errc::period_mismatch, "cross_spectrum: periods differ");
    return packed_spectrum(a, b, SpectrumKind::Cross);
}

long long auto_corr_via_support(const BinarySequence& a, long long tau) {
    const std::size_t n = a.period();
    long long m = tau % static_cast<long long>(n);
    if (m < 0)
        m += static_cast<long long>(n);
    const Support c = support(a);
    const std::size_t k = c.size();
    // |(tau + C) cap C| via membership bitmap
    std::vector<std::uint8_t> in_c(n, 0);
    for (auto p : c.positions)
        in_c[p] = 1;
    std::size_t inter = 0;
    for (auto p : c.positions) {
        std::size_t q = p + static_cast<std::size_t>(m);
        if (q >= n)
            q -= n;
        inter += in_c[q];
    }
    return static_cast<long long>(n) - 4 * (static_cast<long long>(k) - static_cast<long long>(inter));
}

FastSpectrumResult fast_auto_spectrum(const BinarySequence& a) {
    const std::size_t n = a.period();
    if (n < 4)
        return FastSpectrumResult{auto_spectrum(a), false, 0.0};

    std::size_t m = 1;
    while (m < 2 * n)
        m <<= 1;
    std::vector<std::complex<double>> v(m, {0.0, 0.0});
    for (std::size_t i = 0; i < n; ++i)
        v[i] = {a.bit(i) ? -1.0 : 1.0, 0.0};
    fft(v, false);
    for (auto& x : v)
        x = {std::norm(x), 0.0};
    fft(v, true);

    // v[d] now holds the aperiodic lag-d product sum; fold into circular values.
    CorrelationSpectrum s;
    s.period = n;
    s.kind = SpectrumKind::Auto;
    s.values.resize(n);
    s.values[0] = static_cast<long long>(n);
    double max_residual = std::abs(v[0].real() - static_cast<double>(n));
    bool ok = max_residual < 0.25;
    for (std::size_t tau = 1; tau < n && ok; ++tau) {
        const double raw = v[tau].real() + v[n - tau].real();
        const long long r = std::llround(raw);
        const double residual = std::abs(raw - static_cast<double>(r));
        max_residual = std::max(max_residual, residual);
        // residual must stay clear of the 0.5 rounding boundary; parity and
        // range are forced by the definition, so any violation means the
        // transform result cannot be trusted.
        if (residual >= 0.25 || std::llabs(r) > static_cast<long long>(n) ||
            ((r - static_cast<long long>(n)) & 1))
            ok = false;
        else
            s.values[tau] = r;
    }
    if (!ok)
        return FastSpectrumResult{auto_spectrum(a), true, max_residual};
    return FastSpectrumResult{std::move(s), false, max_residual};
}

long long interleaved_corr_decompose(const std::vector<BinarySequence>& columns, long long tau) {
    if (columns.empty())
        fail(Errc::invalid_argument, "interleaved_corr_decompose: need at least one column");
    const std::size_t k = columns[0].period();
    for (const auto& c : columns)
        if (c.period() != k)
            fail(Errc::period_mismatch, "interleaved_corr_decompose: column periods differ");
    const std::size_t t_cols = columns.size();
    const long long total = static_cast<long long>(t_cols * k);
    long long r = tau % total;
    if (r < 0)
        r += total;
    const auto d = decompose_tau(r, t_cols);
    long long sum = 0;
    for (std::size_t j = 0; j < t_cols; ++j) {
        const std::size_t j2 = (j + static_cast<std::size_t>(d.tau2)) % t_cols;
        const long long carry = (j + static_cast<std::size_t>(d.tau2) >= t_cols) ? 1 : 0;
        sum += cross_corr(columns[j], columns[j2], d.tau1 + carry);
    }
    return sum;
}

std::string spectrum_text(const CorrelationSpectrum& s) {
    std::ostringstream os;
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        if (i)
            os << ' ';
        os << s.values[i];
    }
    os << '\n';
    return os.str();
}

std::string spectrum_csv(const CorrelationSpectrum& s) {
    std::ostringstream os;
    os << "tau,R\n";
    for (std::size_t i = 0; i < s.values.size(); ++i)
        os << i << ',' << s.values[i] << '\n';
    return os.str();
}

std::string spectrum_json(const CorrelationSpectrum& s) {
    nlohmann::json j;
    j["schema"] = 1;
    j["kind"] = s.kind == SpectrumKind::Auto ? "auto" : "cross";
    j["period"] = s.period;
    j["values"] = s.values;
    nlohmann::json hist = nlohmann::json::object();
    for (const auto& [value, count] : s.histogram())
        hist[std::to_string(value)] = count;
    j["histogram"] = hist;
    return j.dump();
}

} // namespace optseq
