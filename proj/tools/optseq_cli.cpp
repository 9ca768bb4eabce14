// optseq: sequence generation, exact correlation, classification,
// closed-form verification and exhaustive search from one binary.
// Talks to the library exclusively through the C API.

#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "optseq.h"

namespace {

struct SequenceHandle {
    optseq_sequence* ptr = nullptr;
    SequenceHandle() = default;
    explicit SequenceHandle(optseq_sequence* p) : ptr(p) {}
    SequenceHandle(const SequenceHandle&) = delete;
    SequenceHandle& operator=(const SequenceHandle&) = delete;
    SequenceHandle(SequenceHandle&& o) noexcept : ptr(o.ptr) { o.ptr = nullptr; }
    ~SequenceHandle() { optseq_sequence_free(ptr); }
};

[[noreturn]] void die(int code) {
    std::fprintf(stderr, "optseq: %s\n", optseq_last_error());
    std::exit(code);
}

SequenceHandle from_spec(const std::string& spec) {
    optseq_sequence* s = nullptr;
    if (optseq_sequence_from_spec(spec.c_str(), &s) != OPTSEQ_OK)
        die(1);
    return SequenceHandle(s);
}

void print_sequence(const optseq_sequence* s) {
    char* text = nullptr;
    if (optseq_sequence_render(s, &text) != OPTSEQ_OK)
        die(1);
    std::printf("%s\n", text);
    optseq_string_free(text);
}

// split on commas outside parentheses, so spec strings can nest
std::vector<std::string> split_top_level(const std::string& s) {
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
    out.push_back(cur);
    return out;
}

int print_hit(const char* bits, void*) {
    std::printf("%s\n", bits);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"binary sequence toolkit: optimal-autocorrelation constructions, "
                 "exact spectra, classification, verification, search"};
    app.require_subcommand(1);

    // ---- gen ----------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate a sequence and print it");
    gen->require_subcommand(1);

    long long g_p = 0, g_eta = 0;
    int g_n = 0, g_degree = 0;
    std::string g_variant = "first", g_poly, g_a, g_b, g_cols, g_mask = "0000";
    bool g_modified = false;

    auto* gen_leg = gen->add_subcommand("legendre", "Legendre sequence of prime period");
    gen_leg->add_option("--p", g_p, "odd prime period")->required();
    gen_leg->add_option("--variant", g_variant, "first|second (bit at 0 is 1|0)")
        ->check(CLI::IsMember({"first", "second"}));

    auto* gen_mseq = gen->add_subcommand("mseq", "maximal-length LFSR sequence");
    gen_mseq->add_option("--degree", g_degree, "LFSR degree (2..24)")->required();
    gen_mseq->add_option("--poly", g_poly, "primitive polynomial bitmask, e.g. 0x13");

    auto* gen_gmw = gen->add_subcommand("gmw", "interleaved zero-column construction of period 2^2n-1");
    gen_gmw->add_option("--n", g_n, "half-degree n >= 2")->required();
    gen_gmw->add_option("--poly", g_poly, "primitive polynomial bitmask of degree 2n");
    gen_gmw->add_flag("--modified", g_modified, "complement the constant column");

    auto* gen_tp = gen->add_subcommand("twinprime", "twin-prime interleaved sequence of period p(p+2)");
    gen_tp->add_option("--p", g_p, "prime with p+2 also prime")->required();
    gen_tp->add_flag("--modified", g_modified, "complement the constant column");

    auto* gen_v = gen->add_subcommand("v", "I(a, b, L^{(N+1)/2}(~a), L^{(N+1)/2}(b))");
    gen_v->add_option("--a", g_a, "first input (spec string)")->required();
    gen_v->add_option("--b", g_b, "second input (spec string)")->required();

    auto* gen_w = gen->add_subcommand("w", "I(a, L^eta(~a), b, L^eta(b))");
    gen_w->add_option("--a", g_a, "first input (spec string)")->required();
    gen_w->add_option("--b", g_b, "second input (spec string)")->required();
    gen_w->add_option("--eta", g_eta, "column shift eta")->required();

    auto* gen_i4 = gen->add_subcommand("interleave4", "four-column masked interleave");
    gen_i4->add_option("--cols", g_cols, "four comma-separated spec strings")->required();
    gen_i4->add_option("--mask", g_mask, "per-column complement mask, e.g. 0111");

    // ---- corr ----------------------------------------------------------------
    auto* corr = app.add_subcommand("corr", "periodic correlation spectra");
    corr->require_subcommand(1);
    std::string c_a, c_b, c_format = "text";
    bool c_fast = false;

    auto* corr_auto = corr->add_subcommand("auto", "autocorrelation spectrum");
    corr_auto->add_option("spec", c_a, "sequence (spec string)")->required();
    corr_auto->add_option("--format", c_format, "text|csv|json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    corr_auto->add_flag("--fast", c_fast, "transform-based path with exactness guard");

    auto* corr_cross = corr->add_subcommand("cross", "cross-correlation spectrum");
    corr_cross->add_option("a", c_a, "first sequence (spec string)")->required();
    corr_cross->add_option("b", c_b, "second sequence (spec string)")->required();
    corr_cross->add_option("--format", c_format, "text|csv|json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    // ---- classify / ads --------------------------------------------------------
    std::string cl_spec;
    auto* classify = app.add_subcommand("classify", "label a spectrum against the known value tables");
    classify->add_option("spec", cl_spec, "sequence (spec string)")->required();

    std::string ads_spec;
    auto* ads = app.add_subcommand("ads", "difference-function and almost-difference-set report");
    ads->add_option("spec", ads_spec, "sequence (spec string)")->required();

    // ---- verify ----------------------------------------------------------------
    std::string v_target, v_params;
    auto* verify = app.add_subcommand("verify", "machine-check a closed-form spectrum claim");
    verify->add_option("--target", v_target,
                       "lemma3|lemma4|lemma5|lemma6|lemma7|thm1..thm7|wlists")
        ->required();
    verify->add_option("--params", v_params, "comma-separated key=value list");

    // ---- search ----------------------------------------------------------------
    std::size_t s_period = 0;
    std::string s_target = "perfect";
    bool s_canonical = false;
    unsigned s_jobs = 1;
    long long s_max_period = 0;
    auto* search = app.add_subcommand("search", "exhaustive value-set search over all 2^N sequences");
    search->add_option("--period", s_period, "sequence period N")->required();
    search->add_option("--target", s_target, "perfect|optimal|values=v1,v2,...");
    search->add_flag("--canonical", s_canonical, "report shift-canonical representatives only");
    search->add_option("--jobs", s_jobs, "worker threads");
    search->add_option("--max-period", s_max_period,
                       "raise the enumeration cap (default 28, or OPTSEQ_MAX_N)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (gen->parsed()) {
        std::string spec;
        if (gen_leg->parsed()) {
            spec = "legendre(p=" + std::to_string(g_p) + ",variant=" + g_variant + ")";
        } else if (gen_mseq->parsed()) {
            spec = "mseq(degree=" + std::to_string(g_degree) +
                   (g_poly.empty() ? "" : ",poly=" + g_poly) + ")";
        } else if (gen_gmw->parsed()) {
            spec = "gmw(n=" + std::to_string(g_n) + (g_poly.empty() ? "" : ",poly=" + g_poly) +
                   (g_modified ? ",modified=1" : "") + ")";
        } else if (gen_tp->parsed()) {
            spec = "twinprime(p=" + std::to_string(g_p) + (g_modified ? ",modified=1" : "") + ")";
        } else if (gen_v->parsed()) {
            spec = "v(a=" + g_a + ",b=" + g_b + ")";
        } else if (gen_w->parsed()) {
            spec = "w(a=" + g_a + ",b=" + g_b + ",eta=" + std::to_string(g_eta) + ")";
        } else if (gen_i4->parsed()) {
            const auto cols = split_top_level(g_cols);
            if (cols.size() != 4) {
                std::fprintf(stderr, "optseq: --cols needs exactly four spec strings\n");
                return 1;
            }
            std::vector<SequenceHandle> handles;
            std::vector<const optseq_sequence*> raw;
            for (const auto& c : cols) {
                handles.push_back(from_spec(c));
                raw.push_back(handles.back().ptr);
            }
            optseq_sequence* out = nullptr;
            if (optseq_interleave_masked(raw.data(), raw.size(), g_mask.c_str(), &out) != OPTSEQ_OK)
                die(1);
            SequenceHandle h(out);
            print_sequence(h.ptr);
            return 0;
        }
        SequenceHandle h = from_spec(spec);
        print_sequence(h.ptr);
        return 0;
    }

    if (corr->parsed()) {
        optseq_spectrum* spectrum = nullptr;
        int guard_tripped = 0;
        if (corr_auto->parsed()) {
            SequenceHandle a = from_spec(c_a);
            if (optseq_auto_spectrum(a.ptr, c_fast ? 1 : 0, &spectrum, &guard_tripped) != OPTSEQ_OK)
                die(1);
        } else {
            SequenceHandle a = from_spec(c_a);
            SequenceHandle b = from_spec(c_b);
            if (optseq_cross_spectrum(a.ptr, b.ptr, &spectrum) != OPTSEQ_OK)
                die(1);
        }
        char* text = nullptr;
        if (optseq_spectrum_render(spectrum, c_format.c_str(), &text) != OPTSEQ_OK) {
            optseq_spectrum_free(spectrum);
            die(1);
        }
        std::fputs(text, stdout);
        optseq_string_free(text);
        optseq_spectrum_free(spectrum);
        if (guard_tripped) {
            std::fprintf(stderr, "optseq: transform guard tripped, exact fallback used\n");
            return 3;
        }
        return 0;
    }

    if (classify->parsed() || ads->parsed()) {
        SequenceHandle a = from_spec(classify->parsed() ? cl_spec : ads_spec);
        char* text = nullptr;
        const optseq_status rc = classify->parsed() ? optseq_classify_json(a.ptr, &text)
                                                    : optseq_ads_json(a.ptr, &text);
        if (rc != OPTSEQ_OK)
            die(1);
        std::printf("%s\n", text);
        optseq_string_free(text);
        return 0;
    }

    if (verify->parsed()) {
        char* text = nullptr;
        int verified = 0;
        if (optseq_verify_json(v_target.c_str(), v_params.empty() ? nullptr : v_params.c_str(),
                               &text, &verified) != OPTSEQ_OK)
            die(1);
        std::printf("%s\n", text);
        optseq_string_free(text);
        return verified ? 0 : 2;
    }

    if (search->parsed()) {
        if (s_max_period > 28)
            std::fprintf(stderr,
                         "optseq: warning: enumeration cap raised to %lld (2^N candidates)\n",
                         s_max_period);
        char* summary = nullptr;
        if (optseq_search(s_period, s_target.c_str(), s_canonical ? 1 : 0, s_jobs, s_max_period,
                          print_hit, nullptr, &summary) != OPTSEQ_OK)
            die(1);
        std::printf("%s\n", summary);
        optseq_string_free(summary);
        return 0;
    }

    return 1;
}
