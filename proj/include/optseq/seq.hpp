#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "optseq/error.hpp"

namespace optseq {

/// Periodic binary sequence over {0,1}. Immutable once constructed; every
/// operator returns a new value, so sequences are safe to share across threads.
class BinarySequence {
public:
    explicit BinarySequence(std::vector<std::uint8_t> bits);

    static BinarySequence zeros(std::size_t period);
    static BinarySequence ones(std::size_t period);

    std::size_t period() const { return bits_.size(); }
    /// Bit at raw index i, 0 <= i < period().
    int bit(std::size_t i) const { return bits_[i]; }
    /// Bit at any integer index, reduced mod the period.
    int bit_at(long long t) const;
    const std::vector<std::uint8_t>& bits() const { return bits_; }
    std::string to_string() const;

    friend bool operator==(const BinarySequence&, const BinarySequence&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// Positions carrying bit 1 within one period, kept sorted.
struct Support {
    std::size_t parent_period = 0;
    std::vector<std::size_t> positions;
    std::size_t size() const { return positions.size(); }
};

/// Per-column complement mask for masked interleaving.
struct InterleaveMask {
    std::vector<std::uint8_t> bits;
    static InterleaveMask parse(std::string_view text);
};

/// Parse a line of '0'/'1' characters; period = character count.
BinarySequence parse_sequence(std::string_view text);

/// Left shift: result(t) = a(t + m mod N). m may be negative or oversized.
BinarySequence shift(const BinarySequence& a, long long m);
BinarySequence complement(const BinarySequence& a);
std::size_t weight(const BinarySequence& a);
/// ones minus zeros over one period.
long long balance(const BinarySequence& a);
Support support(const BinarySequence& a);

/// Row-major read of the K x T array whose columns are the inputs.
/// result(T*i + j) = columns[j](i). All columns must share one period.
BinarySequence interleave(const std::vector<BinarySequence>& columns);
/// Two-column interleave: even positions from a, odd from b.
BinarySequence interleave2(const BinarySequence& a, const BinarySequence& b);
/// Four-column interleave; column j is complemented first iff mask bit j is 1.
BinarySequence interleave4_masked(const BinarySequence& a0, const BinarySequence& a1,
                                  const BinarySequence& a2, const BinarySequence& a3,
                                  const InterleaveMask& mask);
/// Inverse of interleave: column_j(i) = s(T*i + j). T must divide the period.
std::vector<BinarySequence> deinterleave(const BinarySequence& s, std::size_t t_columns);

} // namespace optseq
