#include "optseq/specstring.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>

#include "optseq/constructions.hpp"

namespace optseq {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return s.substr(b, e - b);
}

bool is_literal(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
}

// Split on commas at parenthesis depth zero.
std::vector<std::string> split_args(const std::string& s) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(')
            ++depth;
        else if (c == ')')
            --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty() || !out.empty())
        out.push_back(cur);
    return out;
}

struct Args {
    std::map<std::string, std::string> kv;
    std::string family;

    const std::string& require(const std::string& key) const {
        auto it = kv.find(key);
        if (it == kv.end())
            fail(Errc::parse_error, "spec: " + family + " requires key '" + key + "'");
        return it->second;
    }
    std::string get(const std::string& key, const std::string& dflt) const {
        auto it = kv.find(key);
        return it == kv.end() ? dflt : it->second;
    }
    bool has(const std::string& key) const { return kv.count(key) != 0; }
};

long long parse_int(const std::string& family, const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const long long r = std::stoll(v, &pos, 0); // accepts 0x.. for polynomials
        if (pos != v.size())
            throw std::invalid_argument(v);
        return r;
    } catch (const std::exception&) {
        fail(Errc::parse_error, "spec: " + family + "." + key + ": not an integer: '" + v + "'");
    }
}

bool parse_bool(const std::string& family, const std::string& key, const std::string& v) {
    if (v == "1" || v == "true" || v == "yes")
        return true;
    if (v == "0" || v == "false" || v == "no")
        return false;
    fail(Errc::parse_error, "spec: " + family + "." + key + ": not a boolean: '" + v + "'");
}

BinarySequence read_sequence_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        fail(Errc::parse_error, "spec: cannot open file '" + path + "'");
    std::string line;
    std::getline(in, line);
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    return parse_sequence(line);
}

BinarySequence from_family(const std::string& family, const std::string& body) {
    Args args;
    args.family = family;
    for (const auto& piece : split_args(body)) {
        const std::string item = trim(piece);
        if (item.empty())
            fail(Errc::parse_error, "spec: " + family + ": empty argument");
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            fail(Errc::parse_error, "spec: " + family + ": expected key=value, got '" + item + "'");
        args.kv[trim(item.substr(0, eq))] = trim(item.substr(eq + 1));
    }

    if (family == "legendre") {
        LegendreParams p;
        p.p = parse_int(family, "p", args.require("p"));
        const std::string variant = args.get("variant", "first");
        if (variant == "first")
            p.variant = LegendreVariant::First;
        else if (variant == "second")
            p.variant = LegendreVariant::Second;
        else
            fail(Errc::parse_error, "spec: legendre.variant must be first|second");
        return legendre(p);
    }
    if (family == "mseq") {
        const int degree = static_cast<int>(parse_int(family, "degree", args.require("degree")));
        const std::uint64_t poly =
            args.has("poly") ? static_cast<std::uint64_t>(parse_int(family, "poly", args.kv.at("poly"))) : 0;
        return mseq(degree, poly);
    }
    if (family == "gmw") {
        GmwParams p;
        p.n = static_cast<int>(parse_int(family, "n", args.require("n")));
        if (args.has("poly"))
            p.poly = static_cast<std::uint64_t>(parse_int(family, "poly", args.kv.at("poly")));
        p.modified = args.has("modified") && parse_bool(family, "modified", args.kv.at("modified"));
        return gmw(p);
    }
    if (family == "twinprime") {
        TwinPrimeParams p;
        p.p = parse_int(family, "p", args.require("p"));
        p.modified = args.has("modified") && parse_bool(family, "modified", args.kv.at("modified"));
        return twin_prime(p);
    }
    if (family == "v") {
        return construct_v(sequence_from_spec(args.require("a")), sequence_from_spec(args.require("b")));
    }
    if (family == "w") {
        WParams p;
        p.eta = parse_int(family, "eta", args.require("eta"));
        return construct_w(sequence_from_spec(args.require("a")), sequence_from_spec(args.require("b")), p);
    }
    if (family == "diffset") {
        const long long n = parse_int(family, "n", args.require("n"));
        if (n <= 0)
            fail(Errc::parse_error, "spec: diffset.n must be positive");
        std::vector<std::size_t> d;
        const std::string& set = args.require("d");
        std::string cur;
        auto flush = [&] {
            if (!cur.empty()) {
                d.push_back(static_cast<std::size_t>(parse_int(family, "d", cur)));
                cur.clear();
            }
        };
        for (char c : set) {
            if (c == '|')
                flush();
            else
                cur.push_back(c);
        }
        flush();
        return difference_set_sequence(static_cast<std::size_t>(n), d);
    }
    if (family == "interleave4") {
        const BinarySequence c0 = sequence_from_spec(args.require("c0"));
        const BinarySequence c1 = sequence_from_spec(args.require("c1"));
        const BinarySequence c2 = sequence_from_spec(args.require("c2"));
        const BinarySequence c3 = sequence_from_spec(args.require("c3"));
        const InterleaveMask mask = InterleaveMask::parse(args.get("mask", "0000"));
        return interleave4_masked(c0, c1, c2, c3, mask);
    }
    fail(Errc::parse_error, "spec: unknown family '" + family + "'");
}

} // namespace

BinarySequence sequence_from_spec(const std::string& spec) {
    const std::string s = trim(spec);
    if (s.empty())
        fail(Errc::parse_error, "spec: empty input");
    if (is_literal(s))
        return parse_sequence(s);
    if (s.rfind("file:", 0) == 0)
        return read_sequence_file(s.substr(5));
    const auto open = s.find('(');
    if (open == std::string::npos || s.back() != ')')
        fail(Errc::parse_error, "spec: expected literal, file:PATH or family(...), got '" + s + "'");
    return from_family(trim(s.substr(0, open)), s.substr(open + 1, s.size() - open - 2));
}

} // namespace optseq
