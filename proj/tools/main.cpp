//
// uinorm command line: randomized verification campaigns over the inequality
// catalog, singular value / norm evaluation of matrix files, tightness
// search, and trial replay.
//
// Exit codes: 0 success (no violations), 2 violations found, 3 config error,
// 4 numerical failure.
//

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "uinorm/ensembles.hpp"
#include "uinorm/harness.hpp"
#include "uinorm/matrix_io.hpp"
#include "uinorm/norms.hpp"
#include "uinorm/spectral.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolations = 2;
constexpr int kExitConfig = 3;
constexpr int kExitNumerical = 4;

void print_real(double x) {
    std::printf("%.12g\n", x);
}

struct VerifyArgs {
    std::string config_path;
    std::string cases;
    std::string seed;
    std::string out;
    std::vector<std::size_t> dims;
    std::vector<std::size_t> blocks;
    std::size_t trials = 0;
    double tol_scale = 0.0;
    unsigned threads = 0;
    bool trials_set = false, tol_set = false;
};

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::string::size_type start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const std::string piece = text.substr(start, comma - start);
        if (!piece.empty()) out.push_back(piece);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

int run_verify(const VerifyArgs& args) {
    uinorm::harness::CampaignConfig config;
    if (!args.config_path.empty()) {
        config = uinorm::harness::config_from_json_file(args.config_path);
    }
    if (!args.cases.empty()) config.cases = split_commas(args.cases);
    if (!args.seed.empty()) config.seed = uinorm::ensembles::parse_seed(args.seed);
    if (args.trials_set) config.trials_per_case = args.trials;
    if (!args.dims.empty()) config.dims = args.dims;
    if (!args.blocks.empty()) config.block_counts = args.blocks;
    if (args.tol_set) config.tol_scale = args.tol_scale;
    config.validate();

    const uinorm::harness::CampaignReport report =
        uinorm::harness::run_campaign(config, args.threads);

    for (const auto& cr : report.cases) {
        std::printf("%-10s %-10s trials=%-6zu violations=%-4zu max_ratio=%.9f min_margin=%.3e\n",
                    cr.violations == 0 ? "ok" : "VIOLATION", cr.case_id.c_str(), cr.trials,
                    cr.violations, cr.max_ratio, cr.min_margin);
    }
    std::printf("total: %zu trials, %zu violations, %zu errors, %.1fs\n", report.total_trials,
                report.total_violations, report.total_errors, report.wall_time_seconds);

    if (!args.out.empty()) {
        uinorm::harness::report_to_json_file(report, args.out);
    } else {
        std::cout << uinorm::harness::report_to_json_text(report) << "\n";
    }

    if (report.total_violations > 0) return kExitViolations;
    if (report.total_errors > 0) return kExitNumerical;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"uinorm: unitarily invariant norm inequality verification"};
    app.require_subcommand(1);

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "run a verification campaign");
    verify->add_option("--config", verify_args.config_path, "campaign config JSON file");
    verify->add_option("--cases", verify_args.cases, "comma-separated case ids, or 'all'");
    verify->add_option("--trials", verify_args.trials, "trials per case")
        ->each([&](const std::string&) { verify_args.trials_set = true; });
    verify->add_option("--dims", verify_args.dims, "matrix dimensions")->delimiter(',');
    verify->add_option("--blocks", verify_args.blocks, "block counts for n-ary cases")
        ->delimiter(',');
    verify->add_option("--seed", verify_args.seed, "campaign seed (decimal or 0x-hex)");
    verify->add_option("--tol-scale", verify_args.tol_scale, "comparison tolerance scale")
        ->each([&](const std::string&) { verify_args.tol_set = true; });
    verify->add_option("--threads", verify_args.threads, "worker threads (0 = hardware)");
    verify->add_option("--out", verify_args.out, "report JSON path");

    std::string svd_in;
    CLI::App* svd = app.add_subcommand("svd", "print descending singular values of a matrix file");
    svd->add_option("--in", svd_in, "matrix JSON file")->required();

    std::string norm_in, norm_family;
    CLI::App* norm = app.add_subcommand("norm", "evaluate one norm of a matrix file");
    norm->add_option("--family", norm_family, "op | schatten:<p> | kyfan:<k>")->required();
    norm->add_option("--in", norm_in, "matrix JSON file")->required();

    std::string tight_case, tight_seed, tight_out;
    std::size_t tight_budget = 500, tight_dim = 2;
    double tight_tol = 0.0;
    bool tight_tol_set = false;
    CLI::App* tight = app.add_subcommand("tightness", "hill-climb toward equality witnesses");
    tight->add_option("--case", tight_case, "case id")->required();
    tight->add_option("--budget", tight_budget, "evaluation budget");
    tight->add_option("--dim", tight_dim, "matrix dimension");
    tight->add_option("--seed", tight_seed, "seed (decimal or 0x-hex)");
    tight->add_option("--tol-scale", tight_tol, "comparison tolerance scale")
        ->each([&](const std::string&) { tight_tol_set = true; });
    tight->add_option("--out", tight_out, "result JSON path");

    std::string replay_digest, replay_config;
    CLI::App* replay = app.add_subcommand("replay", "re-run the trial behind a digest");
    replay->add_option("--digest", replay_digest, "trial digest from a report")->required();
    replay->add_option("--config", replay_config, "campaign config JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (verify->parsed()) {
            return run_verify(verify_args);
        }
        if (svd->parsed()) {
            const uinorm::ComplexMatrix m = uinorm::matrix_from_json_file(svd_in);
            for (double v : uinorm::spectral::singular_values(m).values) print_real(v);
            return kExitOk;
        }
        if (norm->parsed()) {
            const uinorm::norms::NormFamily family = uinorm::norms::NormFamily::parse(norm_family);
            const uinorm::ComplexMatrix m = uinorm::matrix_from_json_file(norm_in);
            print_real(uinorm::norms::norm_eval(m, family));
            return kExitOk;
        }
        if (tight->parsed()) {
            uinorm::harness::CampaignConfig config;
            if (!tight_seed.empty()) config.seed = uinorm::ensembles::parse_seed(tight_seed);
            if (tight_tol_set) config.tol_scale = tight_tol;
            const uinorm::harness::SearchResult result =
                uinorm::harness::tightness_search(tight_case, tight_budget, tight_dim, config);
            const std::string text = uinorm::harness::search_result_to_json_text(result);
            if (!tight_out.empty()) {
                std::ofstream out(tight_out);
                if (!out) throw std::invalid_argument("cannot write " + tight_out);
                out << text << "\n";
            }
            std::printf("case=%s dim=%zu evaluations=%zu best_ratio=%.9f holds=%s\n",
                        tight_case.c_str(), tight_dim, result.evaluations, result.best.ratio,
                        result.best.holds ? "true" : "false");
            if (tight_out.empty()) std::cout << text << "\n";
            return result.best.holds ? kExitOk : kExitViolations;
        }
        if (replay->parsed()) {
            const uinorm::harness::CampaignConfig config =
                uinorm::harness::config_from_json_file(replay_config);
            const uinorm::harness::TrialOutcome outcome =
                uinorm::harness::replay(replay_digest, config);
            std::cout << uinorm::harness::outcome_to_json_text(outcome) << "\n";
            if (outcome.error) return kExitNumerical;
            return outcome.holds ? kExitOk : kExitViolations;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitConfig;
}
