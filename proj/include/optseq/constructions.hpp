#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "optseq/seq.hpp"

namespace optseq {

enum class LegendreVariant { First, Second };

struct LegendreParams {
    long long p = 0;
    LegendreVariant variant = LegendreVariant::First;
};

struct GmwParams {
    int n = 0;                  // column count 2^n+1, column period 2^n-1
    std::uint64_t poly = 0;     // primitive polynomial bitmask of degree 2n; 0 = table default
    bool modified = false;
};

struct TwinPrimeParams {
    long long p = 0;            // p and p+2 both prime
    bool modified = false;
};

struct WParams {
    long long eta = 0;
};

bool is_prime(long long p);
bool is_quadratic_residue(long long t, long long p);
long long mod_inverse(long long a, long long m);
/// (N+1)/2 for odd N: the modular inverse of 2.
long long half_shift(std::size_t odd_period);

/// Characteristic sequence of quadratic non-residues mod p; the bit at 0 is 1
/// for the first variant and 0 for the second.
BinarySequence legendre(const LegendreParams& params);

/// Maximal-length LFSR sequence of period 2^degree - 1, canonical fill 100...0.
/// Non-primitive polynomials are rejected via the period check.
BinarySequence mseq(int degree, std::uint64_t poly);

/// Table polynomial for degrees 2..20 (bit i = coefficient of x^i).
std::uint64_t default_primitive_poly(int degree);

/// Interleaved sequence of period 2^{2n}-1: one all-zero column followed by
/// shift-equivalent ideal columns, realized by deinterleaving a degree-2n
/// maximal sequence and rotating the unique zero column to index 0.
BinarySequence gmw_a(const GmwParams& params);
/// Same with the zero column complemented (all-one column at index 0).
BinarySequence gmw_b(const GmwParams& params);
/// Dispatches on params.modified.
BinarySequence gmw(const GmwParams& params);

/// Interleaving of period p and p+2 Legendre material over p+2 columns:
/// column 0 constant, column i >= 1 is the e_i-shift of l or l', complemented
/// on quadratic-residue column indices; e_i = i*(p+2)^{-1} mod p.
BinarySequence twin_prime(const TwinPrimeParams& params);

/// I(a, b, L^{(N+1)/2}(~a), L^{(N+1)/2}(b)); period 4N, N odd.
BinarySequence construct_v(const BinarySequence& a, const BinarySequence& b);

/// I(a, L^eta(~a), b, L^eta(b)); period 4N, N odd.
BinarySequence construct_w(const BinarySequence& a, const BinarySequence& b, const WParams& params);

/// Characteristic sequence of a residue set: bit t = 1 iff t is in d.
BinarySequence difference_set_sequence(std::size_t period, const std::vector<std::size_t>& d);

} // namespace optseq
