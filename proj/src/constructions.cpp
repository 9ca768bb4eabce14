#include "optseq/constructions.hpp"

#include <bit>

namespace optseq {

bool is_prime(long long p) {
    if (p < 2)
        return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

bool is_quadratic_residue(long long t, long long p) {
    long long r = t % p;
    if (r < 0)
        r += p;
    if (r == 0)
        return false;
    for (long long x = 1; x <= p / 2; ++x)
        if ((x * x) % p == r)
            return true;
    return false;
}

long long mod_inverse(long long a, long long m) {
    long long r0 = m, r1 = ((a % m) + m) % m;
    long long s0 = 0, s1 = 1;
    while (r1 != 0) {
        const long long q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        s0 -= q * s1;
        std::swap(s0, s1);
    }
    if (r0 != 1)
        fail(Errc::invalid_argument, "mod_inverse: " + std::to_string(a) + " not invertible mod " +
                                         std::to_string(m));
    return ((s0 % m) + m) % m;
}

long long half_shift(std::size_t odd_period) {
    if (odd_period % 2 == 0)
        fail(Errc::invalid_argument, "half_shift: period must be odd");
    return static_cast<long long>((odd_period + 1) / 2);
}

BinarySequence legendre(const LegendreParams& params) {
    const long long p = params.p;
    if (p < 3 || !is_prime(p))
        fail(Errc::invalid_argument, "legendre: p must be an odd prime, got " + std::to_string(p));
    std::vector<std::uint8_t> qr(static_cast<std::size_t>(p), 0);
    for (long long x = 1; x < p; ++x)
        qr[static_cast<std::size_t>((x * x) % p)] = 1;
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(p));
    bits[0] = params.variant == LegendreVariant::First ? 1 : 0;
    for (long long t = 1; t < p; ++t)
        bits[static_cast<std::size_t>(t)] = qr[static_cast<std::size_t>(t)] ? 0 : 1;
    return BinarySequence(std::move(bits));
}

BinarySequence mseq(int degree, std::uint64_t poly) {
    if (degree < 2 || degree > 24)
        fail(Errc::invalid_argument, "mseq: degree must be in 2..24");
    if (poly == 0)
        poly = default_primitive_poly(degree);
    if (!(poly >> degree & 1) || !(poly & 1) || (poly >> (degree + 1)) != 0)
        fail(Errc::invalid_argument, "mseq: polynomial bitmask must have degree exactly " +
                                         std::to_string(degree) + " and constant term 1");
    const std::uint64_t period = (1ull << degree) - 1;
    const std::uint64_t taps = poly & (period); // coefficients of x^0..x^{degree-1}
    std::uint64_t state = 1;                    // canonical fill 100...0
    std::vector<std::uint8_t> out(static_cast<std::size_t>(period));
    for (std::uint64_t i = 0; i < period; ++i) {
        out[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(state & 1);
        const int fb = std::popcount(state & taps) & 1;
        state = (state >> 1) | (static_cast<std::uint64_t>(fb) << (degree - 1));
        if (state == 1 && i + 1 != period)
            fail(Errc::invalid_argument, "mseq: polynomial is not primitive (state cycle length " +
                                             std::to_string(i + 1) + " < " + std::to_string(period) + ")");
    }
    if (state != 1)
        fail(Errc::internal, "mseq: LFSR did not return to the initial state");
    return BinarySequence(std::move(out));
}

std::uint64_t default_primitive_poly(int degree) {
    switch (degree) {
    case 2: return 0x7;        // x^2+x+1
    case 3: return 0xB;        // x^3+x+1
    case 4: return 0x13;       // x^4+x+1
    case 5: return 0x25;       // x^5+x^2+1
    case 6: return 0x43;       // x^6+x+1
    case 7: return 0x89;       // x^7+x^3+1
    case 8: return 0x11D;      // x^8+x^4+x^3+x^2+1
    case 9: return 0x211;      // x^9+x^4+1
    case 10: return 0x409;     // x^10+x^3+1
    case 11: return 0x805;     // x^11+x^2+1
    case 12: return 0x1053;    // x^12+x^6+x^4+x+1
    case 13: return 0x201B;    // x^13+x^4+x^3+x+1
    case 14: return 0x4443;    // x^14+x^10+x^6+x+1
    case 15: return 0x8003;    // x^15+x+1
    case 16: return 0x1100B;   // x^16+x^12+x^3+x+1
    case 17: return 0x20009;   // x^17+x^3+1
    case 18: return 0x40081;   // x^18+x^7+1
    case 19: return 0x80027;   // x^19+x^5+x^2+x+1
    case 20: return 0x100009;  // x^20+x^3+1
    default:
        fail(Errc::invalid_argument, "no table polynomial for degree " + std::to_string(degree));
    }
}

namespace {

BinarySequence gmw_base(const GmwParams& params, bool complement_first_column) {
    if (params.n < 2 || params.n > 10)
        fail(Errc::invalid_argument, "gmw: n must be in 2..10");
    const int degree = 2 * params.n;
    const BinarySequence m = mseq(degree, params.poly ? params.poly : default_primitive_poly(degree));
    const std::size_t t_cols = (static_cast<std::size_t>(1) << params.n) + 1;
    auto cols = deinterleave(m, t_cols);

    std::optional<std::size_t> zero_col;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (weight(cols[j]) == 0) {
            if (zero_col)
                fail(Errc::internal, "gmw: more than one all-zero column");
            zero_col = j;
        }
    }
    if (!zero_col)
        fail(Errc::internal, "gmw: no all-zero column found");

    // Rotate the whole sequence so the zero column lands at column index 0.
    auto rotated = deinterleave(shift(m, static_cast<long long>(*zero_col)), t_cols);
    if (weight(rotated[0]) != 0)
        fail(Errc::internal, "gmw: zero column rotation failed");
    if (complement_first_column)
        rotated[0] = complement(rotated[0]);
    return interleave(rotated);
}

} // namespace

BinarySequence gmw_a(const GmwParams& params) { return gmw_base(params, false); }

BinarySequence gmw_b(const GmwParams& params) { return gmw_base(params, true); }

BinarySequence gmw(const GmwParams& params) { return gmw_base(params, params.modified); }

BinarySequence twin_prime(const TwinPrimeParams& params) {
    const long long p = params.p;
    const long long q = p + 2;
    if (!is_prime(p) || !is_prime(q))
        fail(Errc::invalid_argument, "twin_prime: need twin primes, got p=" + std::to_string(p));
    const BinarySequence l = legendre({p, LegendreVariant::First});
    const BinarySequence lp = legendre({p, LegendreVariant::Second});
    const long long inv = mod_inverse(q, p);

    std::vector<BinarySequence> cols;
    cols.reserve(static_cast<std::size_t>(q));
    cols.push_back(params.modified ? BinarySequence::ones(static_cast<std::size_t>(p))
                                   : BinarySequence::zeros(static_cast<std::size_t>(p)));
    for (long long i = 1; i <= p + 1; ++i) {
        const bool res = is_quadratic_residue(i, q);
        const long long e = (i * inv) % p;
        BinarySequence col = shift(res ? lp : l, e);
        if (res)
            col = complement(col);
        cols.push_back(std::move(col));
    }
    return interleave(cols);
}

namespace {

void require_odd_pair(const BinarySequence& a, const BinarySequence& b, const char* what) {
    if (a.period() != b.period())
        fail(Errc::period_mismatch, std::string(what) + ": input periods differ");
    if (a.period() % 2 == 0)
        fail(Errc::invalid_argument, std::string(what) + ": base period must be odd");
}

} // namespace

BinarySequence construct_v(const BinarySequence& a, const BinarySequence& b) {
    require_odd_pair(a, b, "construct_v");
    const long long h = half_shift(a.period());
    return interleave({a, b, shift(complement(a), h), shift(b, h)});
}

BinarySequence construct_w(const BinarySequence& a, const BinarySequence& b, const WParams& params) {
    require_odd_pair(a, b, "construct_w");
    return interleave({a, shift(complement(a), params.eta), b, shift(b, params.eta)});
}

BinarySequence difference_set_sequence(std::size_t period, const std::vector<std::size_t>& d) {
    std::vector<std::uint8_t> bits(period, 0);
    for (auto e : d) {
        if (e >= period)
            fail(Errc::invalid_argument, "difference_set_sequence: element " + std::to_string(e) +
                                             " out of range for period " + std::to_string(period));
        bits[e] = 1;
    }
    return BinarySequence(std::move(bits));
}

} // namespace optseq
