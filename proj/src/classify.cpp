#include "optseq/classify.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace optseq {

std::vector<std::vector<long long>> perfect_value_sets(int period_residue) {
    switch (period_residue & 3) {
    case 0: return {{0}};
    case 1: return {{1}};
    case 2: return {{2}, {-2}};
    default: return {{-1}};
    }
}

std::vector<long long> optimal_value_set(int period_residue) {
    switch (period_residue & 3) {
    case 0: return {0, -4};
    case 1: return {1, -3};
    case 2: return {2, -2};
    default: return {-1, 3};
    }
}

SpectrumClassification classify_spectrum(const CorrelationSpectrum& spec) {
    if (spec.kind != SpectrumKind::Auto)
        fail(Errc::invalid_argument, "classify_spectrum: only auto spectra are classifiable");
    SpectrumClassification c;
    c.period_residue = static_cast<int>(spec.period % 4);
    for (std::size_t tau = 1; tau < spec.values.size(); ++tau)
        ++c.offphase_histogram[spec.values[tau]];

    auto values_in = [&](const std::vector<long long>& allowed) {
        return std::all_of(c.offphase_histogram.begin(), c.offphase_histogram.end(),
                           [&](const auto& kv) {
                               return std::find(allowed.begin(), allowed.end(), kv.first) != allowed.end();
                           });
    };

    bool perfect = false;
    for (const auto& set : perfect_value_sets(c.period_residue))
        perfect = perfect || (!c.offphase_histogram.empty() && values_in(set));
    if (perfect) {
        c.label = SpectrumLabel::Perfect;
        c.ideal_two_level = c.period_residue == 3;
        return c;
    }
    // Optimal: within the next-best value set but strictly worse than perfect.
    if (!c.offphase_histogram.empty() && values_in(optimal_value_set(c.period_residue))) {
        c.label = SpectrumLabel::Optimal;
        return c;
    }
    c.label = SpectrumLabel::Other;
    std::ostringstream os;
    os << "off-phase values {";
    bool first = true;
    for (const auto& [value, count] : c.offphase_histogram) {
        if (!first)
            os << ", ";
        os << value << ":" << count;
        first = false;
    }
    os << "}";
    c.description = os.str();
    return c;
}

AdsReport diff_function(const Support& c) {
    AdsReport r;
    r.period = c.parent_period;
    r.k = c.size();
    const std::size_t n = c.parent_period;
    r.diff_counts.assign(n, 0);
    std::vector<std::uint8_t> in_c(n, 0);
    for (auto p : c.positions)
        in_c[p] = 1;
    for (std::size_t w = 1; w < n; ++w) {
        long long d = 0;
        for (auto p : c.positions) {
            std::size_t q = p + w;
            if (q >= n)
                q -= n;
            d += in_c[q];
        }
        r.diff_counts[w] = d;
        ++r.value_histogram[d];
    }
    if (r.value_histogram.size() == 2) {
        const auto lo = r.value_histogram.begin();
        const auto hi = std::next(lo);
        if (hi->first == lo->first + 1)
            r.ads_params = AdsParams{n, r.k, lo->first, lo->second};
    }
    return r;
}

AdsReport ads_of_sequence(const BinarySequence& a) { return diff_function(support(a)); }

std::string classification_label(const SpectrumClassification& c) {
    switch (c.label) {
    case SpectrumLabel::Perfect:
        return c.ideal_two_level ? "perfect/ideal-two-level" : "perfect";
    case SpectrumLabel::Optimal:
        return "optimal";
    default:
        return "other";
    }
}

namespace {

nlohmann::json histogram_json(const std::map<long long, std::size_t>& h) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [value, count] : h)
        j[std::to_string(value)] = count;
    return j;
}

nlohmann::json ads_object(const AdsReport& r) {
    nlohmann::json j;
    j["k"] = r.k;
    j["values"] = histogram_json(r.value_histogram);
    if (r.ads_params)
        j["params"] = {r.ads_params->n, r.ads_params->k, r.ads_params->lambda, r.ads_params->t};
    else
        j["params"] = nullptr;
    return j;
}

} // namespace

std::string classification_json(const BinarySequence& a) {
    const auto spec = auto_spectrum(a);
    const auto c = classify_spectrum(spec);
    const auto ads = ads_of_sequence(a);
    nlohmann::json j;
    j["schema"] = 1;
    j["period"] = a.period();
    j["residue"] = c.period_residue;
    j["histogram"] = histogram_json(c.offphase_histogram);
    j["label"] = classification_label(c);
    if (!c.description.empty())
        j["description"] = c.description;
    j["ads"] = ads_object(ads);
    return j.dump();
}

std::string ads_json(const AdsReport& r) {
    nlohmann::json j;
    j["schema"] = 1;
    j["period"] = r.period;
    j["k"] = r.k;
    j["values"] = histogram_json(r.value_histogram);
    if (r.ads_params)
        j["params"] = {r.ads_params->n, r.ads_params->k, r.ads_params->lambda, r.ads_params->t};
    else
        j["params"] = nullptr;
    nlohmann::json diff = nlohmann::json::object();
    for (std::size_t w = 1; w < r.diff_counts.size(); ++w)
        diff[std::to_string(w)] = r.diff_counts[w];
    j["diff"] = diff;
    return j.dump();
}

} // namespace optseq
