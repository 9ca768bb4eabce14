#include "optseq/search.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <set>
#include <thread>

#include "optseq/classify.hpp"
#include "optseq/correlation.hpp"

namespace optseq {

namespace {

// Allowed off-phase value sets for the target; a candidate hits when all its
// off-phase values fall inside one of the alternatives.
std::vector<std::vector<long long>> target_value_sets(const SearchSpec& spec) {
    const int residue = static_cast<int>(spec.period % 4);
    switch (spec.target) {
    case SearchTarget::Perfect:
        return perfect_value_sets(residue);
    case SearchTarget::Optimal:
        return {optimal_value_set(residue)};
    case SearchTarget::Custom:
        if (spec.custom_values.empty())
            fail(Errc::invalid_argument, "search: custom target needs at least one value");
        for (auto v : spec.custom_values)
            if ((v - static_cast<long long>(spec.period)) % 2 != 0)
                fail(Errc::invalid_argument, "search: custom value " + std::to_string(v) +
                                                 " does not have the parity of N");
        return {spec.custom_values};
    }
    fail(Errc::internal, "search: bad target");
}

struct Worker {
    std::size_t n;
    std::vector<std::vector<long long>> allowed_sets;
    std::vector<long long> diff;   // d_C(w), w = 0..N-1 (entry 0 unused)
    std::vector<std::size_t> members;
    std::vector<std::uint8_t> in_c;
    long long k = 0;

    explicit Worker(std::size_t period, std::vector<std::vector<long long>> sets)
        : n(period), allowed_sets(std::move(sets)), diff(period, 0), in_c(period, 0) {}

    void flip(std::size_t x) {
        if (in_c[x]) {
            in_c[x] = 0;
            members.erase(std::find(members.begin(), members.end(), x));
            for (auto y : members) {
                --diff[(x + n - y) % n];
                --diff[(y + n - x) % n];
            }
            --k;
        } else {
            for (auto y : members) {
                ++diff[(x + n - y) % n];
                ++diff[(y + n - x) % n];
            }
            in_c[x] = 1;
            members.push_back(x);
            ++k;
        }
    }

    void load(std::uint64_t mask) {
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1)
                flip(i);
    }

    bool candidate_hits() const {
        const long long nn = static_cast<long long>(n);
        for (const auto& set : allowed_sets) {
            // translate allowed R values into allowed d values at the current k
            long long d0 = LLONG_MIN, d1 = LLONG_MIN;
            for (auto v : set) {
                if ((nn - v) % 4 != 0)
                    continue;
                const long long d = k - (nn - v) / 4;
                if (d0 == LLONG_MIN)
                    d0 = d;
                else
                    d1 = d;
            }
            if (d0 == LLONG_MIN)
                continue;
            bool ok = true;
            for (std::size_t w = 1; w < n && ok; ++w)
                ok = diff[w] == d0 || diff[w] == d1;
            if (ok)
                return true;
        }
        return false;
    }
};

std::uint64_t gray(std::uint64_t i) { return i ^ (i >> 1); }

void scan_range(const SearchSpec& spec, const std::vector<std::vector<long long>>& sets,
                std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t>& hits) {
    Worker w(spec.period, sets);
    if (lo >= hi)
        return;
    std::uint64_t mask = gray(lo);
    w.load(mask);
    for (std::uint64_t i = lo;; ++i) {
        if (w.candidate_hits())
            hits.push_back(mask);
        if (i + 1 >= hi)
            break;
        const unsigned bit = static_cast<unsigned>(std::countr_zero(i + 1));
        mask ^= 1ull << bit;
        w.flip(bit);
    }
}

BinarySequence mask_to_sequence(std::uint64_t mask, std::size_t n) {
    std::vector<std::uint8_t> bits(n);
    for (std::size_t i = 0; i < n; ++i)
        bits[i] = static_cast<std::uint8_t>((mask >> i) & 1);
    return BinarySequence(std::move(bits));
}

bool spectrum_satisfies(const CorrelationSpectrum& s, const std::vector<std::vector<long long>>& sets) {
    const auto off = s.offphase_values();
    for (const auto& set : sets)
        if (std::all_of(off.begin(), off.end(), [&](long long v) {
                return std::find(set.begin(), set.end(), v) != set.end();
            }))
            return true;
    return false;
}

BinarySequence shift_complement_canonical(const BinarySequence& a) {
    BinarySequence best = canonical_form(a);
    const BinarySequence other = canonical_form(complement(a));
    return other.to_string() < best.to_string() ? other : best;
}

} // namespace

BinarySequence canonical_form(const BinarySequence& a) {
    const std::string s = a.to_string();
    std::string best = s;
    const std::string doubled = s + s;
    for (std::size_t m = 1; m < s.size(); ++m) {
        const std::string cand = doubled.substr(m, s.size());
        if (cand < best)
            best = cand;
    }
    return parse_sequence(best);
}

SearchResult exhaustive_search(const SearchSpec& spec) {
    if (spec.period == 0)
        fail(Errc::invalid_argument, "search: period must be >= 1");
    if (spec.period > spec.max_period)
        fail(Errc::invalid_argument, "search: period " + std::to_string(spec.period) +
                                         " exceeds the cap " + std::to_string(spec.max_period));
    if (spec.period > 40)
        fail(Errc::invalid_argument, "search: period too large to enumerate");

    const auto sets = target_value_sets(spec);
    const std::uint64_t total = 1ull << spec.period;
    const unsigned jobs = std::max(1u, std::min(spec.jobs, 64u));

    std::vector<std::vector<std::uint64_t>> partial(jobs);
    if (jobs == 1) {
        scan_range(spec, sets, 0, total, partial[0]);
    } else {
        std::vector<std::thread> threads;
        const std::uint64_t chunk = (total + jobs - 1) / jobs;
        for (unsigned t = 0; t < jobs; ++t) {
            const std::uint64_t lo = std::min<std::uint64_t>(total, t * chunk);
            const std::uint64_t hi = std::min<std::uint64_t>(total, lo + chunk);
            threads.emplace_back(
                [&, lo, hi, t] { scan_range(spec, sets, lo, hi, partial[t]); });
        }
        for (auto& th : threads)
            th.join();
    }

    std::vector<BinarySequence> hits;
    for (const auto& part : partial)
        for (auto mask : part)
            hits.push_back(mask_to_sequence(mask, spec.period));
    std::sort(hits.begin(), hits.end(),
              [](const BinarySequence& a, const BinarySequence& b) { return a.to_string() < b.to_string(); });

    // the optimal label excludes perfect spectra, so drop those hits
    if (spec.target == SearchTarget::Optimal) {
        std::vector<BinarySequence> kept;
        for (auto& h : hits)
            if (classify_spectrum(auto_spectrum(h)).label == SpectrumLabel::Optimal)
                kept.push_back(std::move(h));
        hits = std::move(kept);
    }

    SearchResult result;
    result.candidates = total;
    result.raw_hit_count = hits.size();

    // self-audit: recompute every hit's spectrum through the full engine
    for (const auto& h : hits)
        if (!spectrum_satisfies(auto_spectrum(h), sets))
            fail(Errc::internal, "search: self-audit failed for " + h.to_string());
    result.audited = true;

    std::set<std::string> shift_reps, shift_comp_reps;
    for (const auto& h : hits) {
        shift_reps.insert(canonical_form(h).to_string());
        shift_comp_reps.insert(shift_complement_canonical(h).to_string());
    }
    result.shift_classes = shift_reps.size();
    result.shift_complement_classes = shift_comp_reps.size();

    if (spec.canonicalize) {
        std::vector<BinarySequence> reps;
        for (const auto& h : hits)
            if (canonical_form(h) == h)
                reps.push_back(h);
        hits = std::move(reps);
    }
    result.hits = std::move(hits);
    return result;
}

} // namespace optseq
