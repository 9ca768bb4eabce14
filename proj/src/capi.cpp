#include "optseq.h"

#include <cstdlib>
#include <cstring>
#include <map>
#include <string>

#include "json.hpp"

#include "optseq/classify.hpp"
#include "optseq/correlation.hpp"
#include "optseq/search.hpp"
#include "optseq/specstring.hpp"
#include "optseq/verify_targets.hpp"

struct optseq_sequence {
    optseq::BinarySequence seq;
};

struct optseq_spectrum {
    optseq::CorrelationSpectrum spectrum;
};

namespace {

thread_local std::string g_last_error;

optseq_status status_from(const optseq::Error& e) {
    g_last_error = e.what();
    switch (e.code()) {
    case optseq::Errc::invalid_argument: return OPTSEQ_ERROR_INVALID_ARGUMENT;
    case optseq::Errc::parse_error: return OPTSEQ_ERROR_PARSE;
    case optseq::Errc::period_mismatch: return OPTSEQ_ERROR_PERIOD_MISMATCH;
    case optseq::Errc::unsupported: return OPTSEQ_ERROR_UNSUPPORTED;
    case optseq::Errc::internal: return OPTSEQ_ERROR_INTERNAL;
    }
    return OPTSEQ_ERROR_INTERNAL;
}

optseq_status fail_arg(const char* msg) {
    g_last_error = msg;
    return OPTSEQ_ERROR_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
optseq_status guarded(Fn&& fn) {
    try {
        fn();
        return OPTSEQ_OK;
    } catch (const optseq::Error& e) {
        return status_from(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return OPTSEQ_ERROR_INTERNAL;
    }
}

std::map<std::string, std::string> parse_params(const char* params) {
    std::map<std::string, std::string> kv;
    if (!params)
        return kv;
    const std::string s(params);
    int depth = 0;
    std::string cur;
    auto flush = [&] {
        if (cur.empty())
            return;
        const auto eq = cur.find('=');
        if (eq == std::string::npos)
            optseq::fail(optseq::Errc::invalid_argument, "params: expected key=value, got '" + cur + "'");
        kv[cur.substr(0, eq)] = cur.substr(eq + 1);
        cur.clear();
    };
    for (char c : s) {
        if (c == '(')
            ++depth;
        else if (c == ')')
            --depth;
        if (c == ',' && depth == 0)
            flush();
        else
            cur.push_back(c);
    }
    flush();
    return kv;
}

} // namespace

extern "C" {

const char* optseq_version(void) { return "1.0.0"; }

const char* optseq_last_error(void) { return g_last_error.c_str(); }

void optseq_string_free(char* s) { std::free(s); }

optseq_status optseq_sequence_parse(const char* text, optseq_sequence** out) {
    if (!text || !out)
        return fail_arg("sequence_parse: null argument");
    return guarded([&] { *out = new optseq_sequence{optseq::parse_sequence(text)}; });
}

optseq_status optseq_sequence_from_spec(const char* spec, optseq_sequence** out) {
    if (!spec || !out)
        return fail_arg("sequence_from_spec: null argument");
    return guarded([&] { *out = new optseq_sequence{optseq::sequence_from_spec(spec)}; });
}

void optseq_sequence_free(optseq_sequence* s) { delete s; }

size_t optseq_sequence_period(const optseq_sequence* s) { return s ? s->seq.period() : 0; }

long long optseq_sequence_weight(const optseq_sequence* s) {
    return s ? static_cast<long long>(optseq::weight(s->seq)) : 0;
}

long long optseq_sequence_balance(const optseq_sequence* s) {
    return s ? optseq::balance(s->seq) : 0;
}

optseq_status optseq_sequence_render(const optseq_sequence* s, char** out) {
    if (!s || !out)
        return fail_arg("sequence_render: null argument");
    return guarded([&] { *out = dup_string(s->seq.to_string()); });
}

optseq_status optseq_sequence_shift(const optseq_sequence* s, long long m, optseq_sequence** out) {
    if (!s || !out)
        return fail_arg("sequence_shift: null argument");
    return guarded([&] { *out = new optseq_sequence{optseq::shift(s->seq, m)}; });
}

optseq_status optseq_sequence_complement(const optseq_sequence* s, optseq_sequence** out) {
    if (!s || !out)
        return fail_arg("sequence_complement: null argument");
    return guarded([&] { *out = new optseq_sequence{optseq::complement(s->seq)}; });
}

optseq_status optseq_sequence_canonical_form(const optseq_sequence* s, optseq_sequence** out) {
    if (!s || !out)
        return fail_arg("sequence_canonical_form: null argument");
    return guarded([&] { *out = new optseq_sequence{optseq::canonical_form(s->seq)}; });
}

optseq_status optseq_interleave_masked(const optseq_sequence* const* columns, size_t column_count,
                                       const char* mask, optseq_sequence** out) {
    if (!columns || !out || column_count == 0)
        return fail_arg("interleave_masked: null argument");
    return guarded([&] {
        std::vector<optseq::BinarySequence> cols;
        cols.reserve(column_count);
        for (size_t j = 0; j < column_count; ++j) {
            if (!columns[j])
                optseq::fail(optseq::Errc::invalid_argument, "interleave_masked: null column");
            cols.push_back(columns[j]->seq);
        }
        if (mask && *mask) {
            const auto m = optseq::InterleaveMask::parse(mask);
            if (m.bits.size() != column_count)
                optseq::fail(optseq::Errc::invalid_argument,
                             "interleave_masked: mask length does not match column count");
            for (size_t j = 0; j < column_count; ++j)
                if (m.bits[j])
                    cols[j] = optseq::complement(cols[j]);
        }
        *out = new optseq_sequence{optseq::interleave(cols)};
    });
}

optseq_status optseq_cross_corr(const optseq_sequence* a, const optseq_sequence* b, long long tau,
                                long long* out) {
    if (!a || !b || !out)
        return fail_arg("cross_corr: null argument");
    return guarded([&] { *out = optseq::cross_corr(a->seq, b->seq, tau); });
}

optseq_status optseq_auto_spectrum(const optseq_sequence* a, int use_fast, optseq_spectrum** out,
                                   int* guard_tripped) {
    if (!a || !out)
        return fail_arg("auto_spectrum: null argument");
    return guarded([&] {
        if (use_fast) {
            auto r = optseq::fast_auto_spectrum(a->seq);
            if (guard_tripped)
                *guard_tripped = r.guard_tripped ? 1 : 0;
            *out = new optseq_spectrum{std::move(r.spectrum)};
        } else {
            if (guard_tripped)
                *guard_tripped = 0;
            *out = new optseq_spectrum{optseq::auto_spectrum(a->seq)};
        }
    });
}

optseq_status optseq_cross_spectrum(const optseq_sequence* a, const optseq_sequence* b,
                                    optseq_spectrum** out) {
    if (!a || !b || !out)
        return fail_arg("cross_spectrum: null argument");
    return guarded([&] { *out = new optseq_spectrum{optseq::cross_spectrum(a->seq, b->seq)}; });
}

void optseq_spectrum_free(optseq_spectrum* s) { delete s; }

size_t optseq_spectrum_period(const optseq_spectrum* s) { return s ? s->spectrum.period : 0; }

optseq_status optseq_spectrum_value(const optseq_spectrum* s, long long tau, long long* out) {
    if (!s || !out)
        return fail_arg("spectrum_value: null argument");
    return guarded([&] { *out = s->spectrum.at(tau); });
}

optseq_status optseq_spectrum_render(const optseq_spectrum* s, const char* format, char** out) {
    if (!s || !format || !out)
        return fail_arg("spectrum_render: null argument");
    return guarded([&] {
        const std::string f(format);
        std::string text;
        if (f == "text")
            text = optseq::spectrum_text(s->spectrum);
        else if (f == "csv")
            text = optseq::spectrum_csv(s->spectrum);
        else if (f == "json")
            text = optseq::spectrum_json(s->spectrum) + "\n";
        else
            optseq::fail(optseq::Errc::invalid_argument, "spectrum_render: unknown format '" + f + "'");
        *out = dup_string(text);
    });
}

optseq_status optseq_classify_json(const optseq_sequence* a, char** out) {
    if (!a || !out)
        return fail_arg("classify_json: null argument");
    return guarded([&] { *out = dup_string(optseq::classification_json(a->seq)); });
}

optseq_status optseq_ads_json(const optseq_sequence* a, char** out) {
    if (!a || !out)
        return fail_arg("ads_json: null argument");
    return guarded([&] { *out = dup_string(optseq::ads_json(optseq::ads_of_sequence(a->seq))); });
}

optseq_status optseq_verify_json(const char* target, const char* params, char** out_json,
                                 int* out_verified) {
    if (!target || !out_json)
        return fail_arg("verify_json: null argument");
    return guarded([&] {
        const auto outcome = optseq::run_verify_target(target, parse_params(params));
        *out_json = dup_string(outcome.report_json);
        if (out_verified)
            *out_verified = outcome.verified ? 1 : 0;
    });
}

optseq_status optseq_search(size_t period, const char* target, int canonicalize, unsigned jobs,
                            long long max_period, optseq_search_hit_fn on_hit, void* user,
                            char** summary_json) {
    if (!target)
        return fail_arg("search: null target");
    return guarded([&] {
        optseq::SearchSpec spec;
        spec.period = period;
        spec.canonicalize = canonicalize != 0;
        spec.jobs = jobs == 0 ? 1 : jobs;
        if (max_period > 0)
            spec.max_period = static_cast<std::size_t>(max_period);
        else if (const char* env = std::getenv("OPTSEQ_MAX_N"))
            spec.max_period = static_cast<std::size_t>(std::strtoull(env, nullptr, 10));

        const std::string t(target);
        if (t == "perfect") {
            spec.target = optseq::SearchTarget::Perfect;
        } else if (t == "optimal") {
            spec.target = optseq::SearchTarget::Optimal;
        } else if (t.rfind("values=", 0) == 0) {
            spec.target = optseq::SearchTarget::Custom;
            std::string cur;
            auto flush = [&] {
                if (!cur.empty()) {
                    spec.custom_values.push_back(std::stoll(cur));
                    cur.clear();
                }
            };
            for (char c : t.substr(7)) {
                if (c == '|' || c == ',')
                    flush();
                else
                    cur.push_back(c);
            }
            flush();
        } else {
            optseq::fail(optseq::Errc::invalid_argument,
                         "search: target must be perfect, optimal or values=...");
        }

        const auto result = optseq::exhaustive_search(spec);
        if (on_hit)
            for (const auto& h : result.hits)
                if (on_hit(h.to_string().c_str(), user) != 0)
                    break;
        if (summary_json) {
            nlohmann::json j;
            j["schema"] = 1;
            j["period"] = period;
            j["target"] = t;
            j["canonical"] = spec.canonicalize;
            j["candidates"] = result.candidates;
            j["hits"] = result.raw_hit_count;
            j["reported"] = result.hits.size();
            j["shift_classes"] = result.shift_classes;
            j["shift_complement_classes"] = result.shift_complement_classes;
            j["audited"] = result.audited;
            *summary_json = dup_string(j.dump());
        }
    });
}

} // extern "C"
