#pragma once
//
// Campaign configuration, trial execution, replay, tightness search, and
// report persistence. Campaign output is a pure function of (seed, config):
// each trial owns a generator substream derived from the campaign seed and
// the trial's digest, so trials can run on any number of threads without
// changing the report.
//

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "uinorm/catalog.hpp"
#include "uinorm/matrix.hpp"
#include "uinorm/spectral.hpp"

namespace uinorm::harness {

inline constexpr const char* kToolVersion = "uinorm 0.1.0";

struct CampaignConfig {
    std::uint64_t seed = 42;
    std::size_t trials_per_case = 100;
    std::vector<std::size_t> dims = {2, 3, 4};
    std::vector<std::size_t> block_counts = {1, 2, 3};
    std::vector<double> schatten_ps = {1.0, 1.5, 2.0, 3.0,
                                       std::numeric_limits<double>::infinity()};
    double tol_scale = 1e-8;
    std::vector<std::string> cases;  // empty means every catalog case

    // Case ids in execution order, with "all"/empty expanded.
    std::vector<std::string> resolved_cases() const;
    void validate() const;  // throws std::invalid_argument
};

// Trial identity within a campaign: "<case>/d<dim>/n<blocks>/t<index>".
struct TrialKey {
    std::string case_id;
    std::size_t d = 0;
    std::size_t n = 0;
    std::size_t trial = 0;

    std::string digest() const;
    static TrialKey parse(const std::string& digest);  // throws on malformed input
};

struct TrialOutcome {
    TrialKey key;
    std::string kind;  // "majorization" | "mutual" | "operator"
    bool error = false;
    std::string error_message;
    bool holds = false;
    bool retried = false;  // re-evaluated at 10x tighter Jacobi convergence
    double margin = 0.0;
    std::size_t worst_k = 0;
    double ratio = 0.0;
    double lhs_norm = 0.0;
    double rhs_norm = 0.0;
    double tol = 0.0;
    std::vector<std::string> failed_cross_checks;
};

struct CaseReport {
    std::string case_id;
    std::size_t trials = 0;
    std::size_t violations = 0;
    std::vector<std::string> violation_digests;
    std::size_t errors = 0;
    std::vector<std::string> error_digests;
    std::size_t retried = 0;
    double max_ratio = 0.0;
    std::string max_ratio_digest;
    double min_margin = 0.0;
    std::string min_margin_digest;
};

struct CampaignReport {
    CampaignConfig config;
    std::vector<CaseReport> cases;
    std::size_t total_trials = 0;
    std::size_t total_violations = 0;
    std::size_t total_errors = 0;
    std::string version;
    std::string prng;
    double wall_time_seconds = 0.0;
};

// Runs one trial of a campaign: derive the substream from (seed, digest),
// sample, build, compare. A failed verdict is re-checked once at 10x tighter
// Jacobi convergence before it counts as a violation.
TrialOutcome run_trial(const TrialKey& key, const CampaignConfig& config);

// threads == 0 picks the hardware concurrency.
CampaignReport run_campaign(const CampaignConfig& config, unsigned threads = 0);

// Reconstructs the trial behind a digest and reruns it.
TrialOutcome replay(const std::string& digest, const CampaignConfig& config);

struct SearchResult {
    TrialOutcome best;
    std::vector<ComplexMatrix> best_inputs;
    std::size_t evaluations = 0;
};

// Random-restart hill climbing toward ratio 1: perturb the current best
// inputs entrywise with decaying Gaussian steps, keep improvements, and
// project back onto the case's input class after each step. Deterministic
// given (config.seed, case, dim, budget).
SearchResult tightness_search(const std::string& case_id, std::size_t budget,
                              std::size_t dim, const CampaignConfig& config);

CampaignConfig config_from_json_text(const std::string& text);
CampaignConfig config_from_json_file(const std::string& path);
std::string config_to_json_text(const CampaignConfig& config);

std::string report_to_json_text(const CampaignReport& report);
void report_to_json_file(const CampaignReport& report, const std::string& path);

std::string outcome_to_json_text(const TrialOutcome& outcome);
std::string search_result_to_json_text(const SearchResult& result);

}  // namespace uinorm::harness
