#include "doctest.h"

#include <set>

#include "optseq/constructions.hpp"
#include "optseq/correlation.hpp"
#include "optseq/specstring.hpp"
#include "testutil.hpp"

using namespace optseq;

namespace {

std::set<long long> offphase(const BinarySequence& s) {
    return auto_spectrum(s).offphase_values();
}

} // namespace

TEST_CASE("legendre sequences") {
    CHECK(legendre({7, LegendreVariant::First}).to_string() == "1001011");
    CHECK(legendre({5, LegendreVariant::First}).to_string() == "10110");
    CHECK(legendre({5, LegendreVariant::Second}).to_string() == "00110");

    for (long long p : {3, 5, 7, 11, 13, 17, 19, 23}) {
        const auto first = legendre({p, LegendreVariant::First});
        const auto second = legendre({p, LegendreVariant::Second});
        CHECK(weight(first) == static_cast<std::size_t>((p - 1) / 2 + 1));
        CHECK(weight(second) == static_cast<std::size_t>((p - 1) / 2));
        if (p % 4 == 3) {
            CHECK(offphase(first) == std::set<long long>{-1});
            CHECK(offphase(second) == std::set<long long>{-1});
        } else {
            CHECK(offphase(first) == std::set<long long>{1, -3});
        }
    }
    CHECK_THROWS_AS(legendre({9, LegendreVariant::First}), Error);
    CHECK_THROWS_AS(legendre({2, LegendreVariant::First}), Error);
}

TEST_CASE("maximal-length sequences") {
    const auto m4 = mseq(4, 0x13);
    CHECK(m4.period() == 15);
    CHECK(offphase(m4) == std::set<long long>{-1});

    const auto m2 = mseq(2, 0x7);
    CHECK(m2.period() == 3);
    bool is_shift_of_011 = false;
    for (long long m = 0; m < 3; ++m)
        is_shift_of_011 = is_shift_of_011 || shift(parse_sequence("011"), m) == m2;
    CHECK(is_shift_of_011);

    CHECK(weight(mseq(3, 0xB)) == 4);

    // x^4+x^2+1 and x^4+x^3+x^2+x+1 are not primitive
    CHECK_THROWS_AS(mseq(4, 0x15), Error);
    CHECK_THROWS_AS(mseq(4, 0x1F), Error);
    CHECK_THROWS_AS(mseq(4, 0x3), Error);

    // every table polynomial generates a full-period sequence
    for (int degree = 2; degree <= 20; ++degree) {
        const auto m = mseq(degree, 0);
        CHECK(m.period() == (1ull << degree) - 1);
        CHECK(weight(m) == (1ull << (degree - 1)));
    }
}

TEST_CASE("gmw constructions") {
    const auto s = gmw_a({2, 0, false});
    CHECK(s.to_string() == "000100110101111");
    CHECK(offphase(s) == std::set<long long>{-1});

    for (int n : {2, 3, 4}) {
        const auto sn = gmw_a({n, 0, false});
        const std::size_t t_cols = (static_cast<std::size_t>(1) << n) + 1;
        const auto cols = deinterleave(sn, t_cols);
        std::size_t zero_columns = 0;
        for (const auto& c : cols)
            zero_columns += weight(c) == 0;
        CHECK(zero_columns == 1);
        CHECK(weight(cols[0]) == 0);
        CHECK(offphase(sn) == std::set<long long>{-1});
    }

    const auto sp = gmw_b({2, 0, true});
    for (std::size_t t = 0; t < 15; ++t) {
        const bool flipped = t % 5 == 0;
        CHECK(sp.bit(t) == (s.bit(t) ^ (flipped ? 1 : 0)));
    }
    const auto rsp = auto_spectrum(sp);
    CHECK(rsp.values[5] == -1);
    CHECK(rsp.values[1] == 3);
    const auto cross = cross_spectrum(s, sp);
    CHECK(cross.values[0] == 9);
    CHECK(cross.values[5] == -7);
    CHECK(cross.values[1] == 1);

    CHECK(gmw({2, 0, false}) == s);
    CHECK(gmw({2, 0, true}) == sp);
    CHECK_THROWS_AS(gmw_a({1, 0, false}), Error);
}

TEST_CASE("twin prime constructions") {
    const auto t3 = twin_prime({3, false});
    CHECK(t3.to_string() == "000100110101111");
    CHECK(offphase(t3) == std::set<long long>{-1});

    const auto t3m = twin_prime({3, true});
    for (std::size_t t = 0; t < 15; ++t)
        CHECK(t3m.bit(t) == (t3.bit(t) ^ (t % 5 == 0 ? 1 : 0)));
    const auto rm = auto_spectrum(t3m);
    for (std::size_t tau = 1; tau < 15; ++tau)
        CHECK(rm.values[tau] == (tau % 5 == 0 ? -1 : 3));
    CHECK(cross_spectrum(t3, t3m).values[0] == 9);

    const auto t5 = twin_prime({5, false});
    CHECK(t5.period() == 35);
    CHECK(offphase(t5) == std::set<long long>{-1});

    CHECK_THROWS_AS(twin_prime({7, false}), Error);
    CHECK_THROWS_AS(twin_prime({4, false}), Error);
}

TEST_CASE("v construction") {
    const auto u = construct_v(parse_sequence("01000"), parse_sequence("10000"));
    CHECK(u.to_string() == "01101010001100000010");
    const auto u2 = construct_v(parse_sequence("01000"), parse_sequence("00010"));
    CHECK(u2.to_string() == "00111010001001000010");

    for (const auto& s : {u, u2}) {
        const auto spec = auto_spectrum(s);
        CHECK(spec.values[0] == 20);
        for (std::size_t tau = 1; tau < 20; ++tau)
            CHECK(spec.values[tau] == (tau % 4 == 0 ? 4 : 0));
    }

    CHECK_THROWS_AS(construct_v(parse_sequence("0101"), parse_sequence("0101")), Error);
    CHECK_THROWS_AS(construct_v(parse_sequence("010"), parse_sequence("01010")), Error);
}

TEST_CASE("w construction") {
    const auto a = parse_sequence("10110");
    CHECK(construct_w(a, a, {0}) == interleave({a, complement(a), a, a}));

    // Legendre pair inputs stay within {0, +-4} at every eta
    const auto l7 = legendre({7, LegendreVariant::First});
    const auto l7p = legendre({7, LegendreVariant::Second});
    for (long long eta = 0; eta < 7; ++eta) {
        const auto off = offphase(construct_w(l7, l7p, {eta}));
        for (auto v : off)
            CHECK((v == 0 || v == 4 || v == -4));
    }

    // the gmw pair fed in directly leaves the optimal range; the half-period
    // pre-shift of the second input restores it
    const auto s = gmw_a({2, 0, false});
    const auto sp = gmw_b({2, 0, true});
    const auto direct = auto_spectrum(construct_w(s, sp, {1}));
    std::map<long long, std::size_t> hist;
    for (std::size_t tau = 1; tau < direct.values.size(); ++tau)
        ++hist[direct.values[tau]];
    CHECK(hist == std::map<long long, std::size_t>{{-4, 8}, {0, 21}, {4, 24}, {12, 6}});

    const auto shifted = construct_w(s, shift(sp, half_shift(15)), {1});
    for (auto v : offphase(shifted))
        CHECK((v == 0 || v == 4 || v == -4));

    CHECK_THROWS_AS(construct_w(parse_sequence("0101"), parse_sequence("0101"), {0}), Error);
    CHECK_THROWS_AS(construct_w(parse_sequence("010"), parse_sequence("01100"), {0}), Error);
}

TEST_CASE("difference set sequences") {
    const auto d13 = difference_set_sequence(13, {0, 1, 3, 9});
    CHECK(offphase(d13) == std::set<long long>{1});

    const auto d5 = difference_set_sequence(5, {1});
    CHECK(d5.to_string() == "01000");
    CHECK(offphase(d5) == std::set<long long>{1});

    CHECK(difference_set_sequence(4, {1, 2, 3}).to_string() == "0111");
    CHECK_THROWS_AS(difference_set_sequence(4, {4}), Error);
}

TEST_CASE("quarter-shifted masked interleave of an ideal sequence") {
    // columns (a, L^q(a), L^2q(a), L^3q(a)) with 4q = 1 mod N and mask 0111
    const auto a = legendre({7, LegendreVariant::First});
    const long long q = mod_inverse(4, 7);
    const auto u = interleave4_masked(a, shift(a, q), shift(a, 2 * q), shift(a, 3 * q),
                                      InterleaveMask::parse("0111"));
    const auto spec = auto_spectrum(u);
    CHECK(spec.values[0] == 28);
    for (std::size_t tau = 1; tau < 28; ++tau)
        CHECK(spec.values[tau] == (tau % 4 == 0 ? -4 : 0));
}

TEST_CASE("modular helpers") {
    CHECK(mod_inverse(5, 3) == 2);
    CHECK(mod_inverse(4, 7) == 2);
    CHECK(half_shift(5) == 3);
    CHECK(half_shift(15) == 8);
    CHECK_THROWS_AS(half_shift(4), Error);
    CHECK_THROWS_AS(mod_inverse(2, 4), Error);
    CHECK(is_prime(2));
    CHECK(is_prime(17));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(15));
    CHECK(is_quadratic_residue(2, 7));
    CHECK_FALSE(is_quadratic_residue(3, 7));
    CHECK_FALSE(is_quadratic_residue(0, 7));
}

TEST_CASE("spec strings") {
    CHECK(sequence_from_spec("0111").to_string() == "0111");
    CHECK(sequence_from_spec("legendre(p=7,variant=first)").to_string() == "1001011");
    CHECK(sequence_from_spec("legendre(p=7)").to_string() == "1001011");
    CHECK(sequence_from_spec("mseq(degree=4,poly=0x13)").period() == 15);
    CHECK(sequence_from_spec("gmw(n=2)").to_string() == "000100110101111");
    CHECK(sequence_from_spec("gmw(n=2,modified=1)") == gmw_b({2, 0, true}));
    CHECK(sequence_from_spec("twinprime(p=3)").to_string() == "000100110101111");
    CHECK(sequence_from_spec("diffset(n=5,d=1)").to_string() == "01000");
    CHECK(sequence_from_spec("diffset(n=13,d=0|1|3|9)") ==
          difference_set_sequence(13, {0, 1, 3, 9}));
    CHECK(sequence_from_spec("v(a=01000,b=10000)").to_string() == "01101010001100000010");
    CHECK(sequence_from_spec("w(a=legendre(p=7,variant=first),b=legendre(p=7,variant=second),eta=2)") ==
          construct_w(legendre({7, LegendreVariant::First}), legendre({7, LegendreVariant::Second}),
                      {2}));
    CHECK(sequence_from_spec("interleave4(c0=01000,c1=10000,c2=00010,c3=11101,mask=0010)") ==
          interleave4_masked(parse_sequence("01000"), parse_sequence("10000"),
                             parse_sequence("00010"), parse_sequence("11101"),
                             InterleaveMask::parse("0010")));

    CHECK_THROWS_AS(sequence_from_spec(""), Error);
    CHECK_THROWS_AS(sequence_from_spec("unknown(p=3)"), Error);
    CHECK_THROWS_AS(sequence_from_spec("legendre(q=3)"), Error);
    CHECK_THROWS_AS(sequence_from_spec("legendre(p=x)"), Error);
    CHECK_THROWS_AS(sequence_from_spec("legendre(p=7,variant=third)"), Error);
    CHECK_THROWS_AS(sequence_from_spec("012"), Error);
    CHECK_THROWS_AS(sequence_from_spec("file:/nonexistent/path"), Error);
}

TEST_CASE("spec strings read files") {
    const std::string path = "/tmp/optseq_test_seq.txt";
    {
        std::FILE* f = std::fopen(path.c_str(), "w");
        REQUIRE(f != nullptr);
        std::fputs("01101\n", f);
        std::fclose(f);
    }
    CHECK(sequence_from_spec("file:" + path).to_string() == "01101");
    std::remove(path.c_str());
}
