#include "optseq/seq.hpp"

#include <algorithm>

namespace optseq {

BinarySequence::BinarySequence(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    if (bits_.empty())
        fail(Errc::invalid_argument, "sequence period must be >= 1");
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] > 1)
            fail(Errc::invalid_argument, "sequence symbol out of {0,1} at index " + std::to_string(i));
}

BinarySequence BinarySequence::zeros(std::size_t period) {
    return BinarySequence(std::vector<std::uint8_t>(period, 0));
}

BinarySequence BinarySequence::ones(std::size_t period) {
    return BinarySequence(std::vector<std::uint8_t>(period, 1));
}

int BinarySequence::bit_at(long long t) const {
    const long long n = static_cast<long long>(bits_.size());
    long long r = t % n;
    if (r < 0)
        r += n;
    return bits_[static_cast<std::size_t>(r)];
}

std::string BinarySequence::to_string() const {
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i)
        s[i] = static_cast<char>('0' + bits_[i]);
    return s;
}

InterleaveMask InterleaveMask::parse(std::string_view text) {
    InterleaveMask m;
    m.bits.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c != '0' && c != '1')
            fail(Errc::parse_error, "mask: illegal character at offset " + std::to_string(i));
        m.bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    if (m.bits.empty())
        fail(Errc::parse_error, "mask: empty input");
    return m;
}

BinarySequence parse_sequence(std::string_view text) {
    if (text.empty())
        fail(Errc::parse_error, "sequence: empty input");
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c != '0' && c != '1')
            fail(Errc::parse_error, "sequence: illegal character at offset " + std::to_string(i));
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return BinarySequence(std::move(bits));
}

BinarySequence shift(const BinarySequence& a, long long m) {
    const std::size_t n = a.period();
    std::vector<std::uint8_t> out(n);
    for (std::size_t t = 0; t < n; ++t)
        out[t] = static_cast<std::uint8_t>(a.bit_at(static_cast<long long>(t) + m));
    return BinarySequence(std::move(out));
}

BinarySequence complement(const BinarySequence& a) {
    std::vector<std::uint8_t> out(a.bits());
    for (auto& b : out)
        b ^= 1u;
    return BinarySequence(std::move(out));
}

std::size_t weight(const BinarySequence& a) {
    std::size_t k = 0;
    for (auto b : a.bits())
        k += b;
    return k;
}

long long balance(const BinarySequence& a) {
    const long long k = static_cast<long long>(weight(a));
    return k - (static_cast<long long>(a.period()) - k);
}

Support support(const BinarySequence& a) {
    Support s;
    s.parent_period = a.period();
    for (std::size_t t = 0; t < a.period(); ++t)
        if (a.bit(t))
            s.positions.push_back(t);
    return s;
}

BinarySequence interleave(const std::vector<BinarySequence>& columns) {
    if (columns.empty())
        fail(Errc::invalid_argument, "interleave: need at least one column");
    const std::size_t k = columns[0].period();
    for (std::size_t j = 1; j < columns.size(); ++j)
        if (columns[j].period() != k)
            fail(Errc::period_mismatch, "interleave: column " + std::to_string(j) +
                                            " has period " + std::to_string(columns[j].period()) +
                                            ", expected " + std::to_string(k));
    const std::size_t t_cols = columns.size();
    std::vector<std::uint8_t> out(k * t_cols);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < t_cols; ++j)
            out[t_cols * i + j] = static_cast<std::uint8_t>(columns[j].bit(i));
    return BinarySequence(std::move(out));
}

BinarySequence interleave2(const BinarySequence& a, const BinarySequence& b) {
    return interleave({a, b});
}

BinarySequence interleave4_masked(const BinarySequence& a0, const BinarySequence& a1,
                                  const BinarySequence& a2, const BinarySequence& a3,
                                  const InterleaveMask& mask) {
    if (mask.bits.size() != 4)
        fail(Errc::invalid_argument, "interleave4: mask must have length 4");
    const BinarySequence* cols[4] = {&a0, &a1, &a2, &a3};
    std::vector<BinarySequence> masked;
    masked.reserve(4);
    for (int j = 0; j < 4; ++j)
        masked.push_back(mask.bits[j] ? complement(*cols[j]) : *cols[j]);
    return interleave(masked);
}

std::vector<BinarySequence> deinterleave(const BinarySequence& s, std::size_t t_columns) {
    if (t_columns == 0 || s.period() % t_columns != 0)
        fail(Errc::invalid_argument, "deinterleave: column count " + std::to_string(t_columns) +
                                         " does not divide period " + std::to_string(s.period()));
    const std::size_t k = s.period() / t_columns;
    std::vector<BinarySequence> out;
    out.reserve(t_columns);
    for (std::size_t j = 0; j < t_columns; ++j) {
        std::vector<std::uint8_t> col(k);
        for (std::size_t i = 0; i < k; ++i)
            col[i] = static_cast<std::uint8_t>(s.bit(t_columns * i + j));
        out.emplace_back(std::move(col));
    }
    return out;
}

} // namespace optseq
