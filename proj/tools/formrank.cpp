#include <chrono>
#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "formrank/construct.hpp"
#include "formrank/io.hpp"
#include "formrank/verify.hpp"

namespace {

using namespace formrank;

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::uint64_t default_budget() {
    if (const char* env = std::getenv("FORMRANK_BUDGET_ELEMS")) {
        char* end = nullptr;
        std::uint64_t v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 1ull << 24;
}

void emit(const io::json& j, const std::string& out_path) {
    std::string text = io::canonical_text(j);
    if (out_path.empty())
        std::cout << text;
    else
        io::write_text_file(out_path, text);
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    std::int64_t elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

int run(int argc, char** argv) {
    CLI::App app{"rank-structured subspaces of bilinear forms over finite fields"};
    app.require_subcommand(1);

    // construct
    auto* cmd_construct = app.add_subcommand("construct", "build a form-space family");
    std::string family, out_path;
    std::uint64_t q = 0;
    unsigned m = 0, s = 0, n = 0;
    cmd_construct->add_option("--family", family, "family name")->required();
    cmd_construct->add_option("--q", q, "field size (prime power)")->required();
    cmd_construct->add_option("--m", m, "parameter m");
    cmd_construct->add_option("--s", s, "parameter s");
    cmd_construct->add_option("--n", n, "parameter n");
    cmd_construct->add_option("--out", out_path, "output path (default stdout)");

    // profile
    auto* cmd_profile = app.add_subcommand("profile", "rank distribution and counting identities");
    std::string in_path, prof_out;
    bool flag_z = false, flag_n = false, flag_identities = false, flag_full = false;
    bool flag_timings = false;
    std::uint64_t budget = default_budget(), sample = 0;
    unsigned threads = 1;
    cmd_profile->add_option("input", in_path, "form-space file")->required();
    cmd_profile->add_flag("--zcount", flag_z, "compute |Z(M)| and kernel histograms");
    cmd_profile->add_flag("--ncount", flag_n, "compute |N(M)| with the default hermitian pair");
    cmd_profile->add_flag("--identities", flag_identities, "run the counting-identity checks");
    cmd_profile->add_flag("--full", flag_full, "enumerate the full space instead of projectively");
    cmd_profile->add_option("--sample", sample, "sample size when the budget is exceeded");
    cmd_profile->add_option("--budget-elems", budget, "element budget");
    cmd_profile->add_option("--threads", threads, "worker threads");
    cmd_profile->add_option("--out", prof_out, "report path (default stdout)");
    cmd_profile->add_flag("--timings", flag_timings, "embed wall-clock timings in the report");

    // analyze
    auto* cmd_analyze = app.add_subcommand("analyze", "radical geometry and subspace search");
    std::string an_in, an_out;
    unsigned spread_rank = 0, const_rank = 0, max_dim = 4;
    bool flag_bijection = false, flag_nminus1 = false, flag_isotropic = false,
         flag_decompose = false;
    bool an_timings = false;
    std::uint64_t an_budget = default_budget();
    unsigned an_threads = 1;
    cmd_analyze->add_option("input", an_in, "form-space file")->required();
    auto* opt_spread = cmd_analyze->add_option("--spread", spread_rank, "radical spread for rank r");
    cmd_analyze->add_flag("--bijection", flag_bijection, "rank-(n-2) line/radical correspondence");
    cmd_analyze->add_flag("--nminus1", flag_nminus1, "rank-(n-1) line/point correspondence");
    auto* opt_cr = cmd_analyze->add_option("--const-rank", const_rank, "constant-rank search target");
    cmd_analyze->add_option("--max-dim", max_dim, "search depth cap (with --const-rank)");
    cmd_analyze->add_flag("--isotropic", flag_isotropic, "common isotropic point count");
    cmd_analyze->add_flag("--decompose", flag_decompose, "M = M_u + M_w + M_z decomposition");
    cmd_analyze->add_option("--budget-elems", an_budget, "element budget");
    cmd_analyze->add_option("--threads", an_threads, "worker threads");
    cmd_analyze->add_option("--out", an_out, "report path (default stdout)");
    cmd_analyze->add_flag("--timings", an_timings, "embed wall-clock timings in the report");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "paper";
    std::uint64_t v_budget = default_budget();
    unsigned v_threads = 1;
    cmd_verify->add_option("--suite", suite, "paper or smoke");
    cmd_verify->add_option("--budget-elems", v_budget, "element budget");
    cmd_verify->add_option("--threads", v_threads, "worker threads");

    CLI11_PARSE(app, argc, argv);

    if (cmd_construct->parsed()) {
        std::map<std::string, std::uint64_t> params{{"q", q}};
        if (cmd_construct->count("--m")) params["m"] = m;
        if (cmd_construct->count("--s")) params["s"] = s;
        if (cmd_construct->count("--n")) params["n"] = n;
        auto M = construct::by_family(family, params);
        std::string text = io::write_formspace(M);
        if (out_path.empty())
            std::cout << text;
        else
            io::write_text_file(out_path, text);
        return kExitPass;
    }

    if (cmd_profile->parsed()) {
        Timer timer;
        auto M = io::read_formspace_file(in_path);
        enumerate::EnumOptions opts;
        opts.budget = budget;
        opts.threads = threads;
        opts.projective = !flag_full;
        if (sample > 0) {
            opts.allow_sampling = true;
            opts.sample_size = sample;
        }
        auto prof = enumerate::rank_distribution(M, opts);
        io::json report;
        bool all_pass = true;
        if ((flag_z || flag_identities) && prof.mode != enumerate::EnumMode::sampled)
            enumerate::z_count(M, prof, opts);
        if (flag_n && prof.mode != enumerate::EnumMode::sampled) {
            auto pair = gf::default_hermitian_pair(M.field());
            prof.n_pairs = enumerate::n_count_direct(M, pair.first, pair.second, opts);
            prof.hermitian = pair;
        }
        report = io::profile_to_json(M, prof);
        if (flag_identities) {
            auto cz = enumerate::verify_common_zeros(M, opts);
            report["identities"]["common_zeros"] = io::common_zeros_to_json(cz);
            all_pass = all_pass && cz.pass;
            if (M.kind() != formspace::FormKind::bilinear &&
                (M.kind() != formspace::FormKind::alternating || M.field().characteristic() == 2)) {
                auto hz = enumerate::verify_hermitian_count(M, std::nullopt, opts);
                report["identities"]["hermitian"] = io::hermitian_to_json(hz);
                all_pass = all_pass && hz.pass;
            }
            auto bounds = enumerate::verify_bounds(M, prof, opts);
            report["identities"]["bounds"] = io::bounds_to_json(bounds);
            all_pass = all_pass && bounds.all_pass;
        }
        if (flag_timings) report["elapsed_ms"] = timer.elapsed_ms();
        emit(report, prof_out);
        std::cerr << "profile elapsed_ms=" << timer.elapsed_ms() << "\n";
        return all_pass ? kExitPass : kExitVerificationFailure;
    }

    if (cmd_analyze->parsed()) {
        Timer timer;
        auto M = io::read_formspace_file(an_in);
        analyze::AnalyzeOptions opts;
        opts.enum_opts.budget = an_budget;
        opts.enum_opts.threads = an_threads;
        io::json report;
        report["tool"] = io::tool_info();
        report["input"] = io::input_summary(M);
        bool all_pass = true;
        if (*opt_spread) {
            auto rep = analyze::radical_spread(M, spread_rank, opts);
            report["spread"] = io::spread_to_json(rep);
        }
        if (flag_bijection) {
            auto rep = analyze::radical_bijection(M, opts);
            report["bijection"] = io::bijection_to_json(rep);
            all_pass = all_pass && rep.pass;
        }
        if (flag_nminus1) {
            auto rep = analyze::rank_n_minus_1_correspondence(M, opts);
            report["nminus1"] = io::bijection_to_json(rep);
            all_pass = all_pass && rep.pass;
        }
        if (*opt_cr) {
            auto rep = analyze::constant_rank_search(M, const_rank, max_dim, opts);
            report["const_rank"] = io::const_rank_to_json(rep);
            all_pass = all_pass && rep.certificate_verified && rep.bounds_pass;
        }
        if (flag_isotropic) {
            auto rep = analyze::isotropic_point_count(M, opts);
            report["isotropic"] = io::isotropic_to_json(rep);
            all_pass = all_pass && rep.pass;
        }
        if (flag_decompose) {
            auto pts = analyze::pick_decomposition_points(M, opts);
            auto rep = analyze::mu_decomposition(M, pts[0], pts[1], pts[2], opts);
            report["decomposition"] = io::decomposition_to_json(rep);
            all_pass = all_pass && rep.pass;
        }
        if (an_timings) report["elapsed_ms"] = timer.elapsed_ms();
        emit(report, an_out);
        std::cerr << "analyze elapsed_ms=" << timer.elapsed_ms() << "\n";
        return all_pass ? kExitPass : kExitVerificationFailure;
    }

    if (cmd_verify->parsed()) {
        Timer timer;
        verify::VerifyOptions opts;
        opts.suite = suite;
        opts.budget = v_budget;
        opts.threads = v_threads;
        auto summary = verify::run_suite(opts);
        std::cout << verify::summary_text(summary, opts);
        std::cerr << "verify elapsed_ms=" << timer.elapsed_ms() << "\n";
        return summary.all_pass ? kExitPass : kExitVerificationFailure;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const formrank::enumerate::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
}
