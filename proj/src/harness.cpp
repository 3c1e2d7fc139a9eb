#include "uinorm/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "uinorm/ensembles.hpp"
#include "uinorm/matrix_io.hpp"

namespace uinorm::harness {

namespace {

using json = nlohmann::ordered_json;

json json_number(double x) {
    if (std::isfinite(x)) return x;
    std::ostringstream s;
    s << x;
    return s.str();
}

}  // namespace

std::vector<std::string> CampaignConfig::resolved_cases() const {
    std::vector<std::string> ids;
    if (cases.empty() || (cases.size() == 1 && cases.front() == "all")) {
        for (const catalog::CaseInfo& c : catalog::all_cases()) ids.push_back(c.id);
        return ids;
    }
    for (const std::string& id : cases) {
        if (id == "all") {
            throw std::invalid_argument("config: \"all\" cannot be combined with case ids");
        }
        ids.push_back(id);
    }
    return ids;
}

void CampaignConfig::validate() const {
    if (trials_per_case < 1) {
        throw std::invalid_argument("config: trials_per_case must be >= 1");
    }
    if (dims.empty()) {
        throw std::invalid_argument("config: dims must be non-empty");
    }
    for (std::size_t d : dims) {
        if (d < 1) throw std::invalid_argument("config: dims entries must be >= 1");
    }
    if (block_counts.empty()) {
        throw std::invalid_argument("config: block_counts must be non-empty");
    }
    for (std::size_t n : block_counts) {
        if (n < 1) throw std::invalid_argument("config: block_counts entries must be >= 1");
    }
    for (double p : schatten_ps) {
        if (!(p >= 1.0)) throw std::invalid_argument("config: schatten_ps entries must be >= 1");
    }
    if (!(tol_scale > 0.0)) {
        throw std::invalid_argument("config: tol_scale must be positive");
    }
    for (const std::string& id : resolved_cases()) {
        if (!catalog::case_exists(id)) {
            throw std::invalid_argument("config: unknown case id: " + id);
        }
    }
}

std::string TrialKey::digest() const {
    std::ostringstream s;
    s << case_id << "/d" << d << "/n" << n << "/t" << trial;
    return s.str();
}

TrialKey TrialKey::parse(const std::string& digest) {
    std::vector<std::string> parts;
    std::string::size_type start = 0;
    while (true) {
        const auto slash = digest.find('/', start);
        parts.push_back(digest.substr(start, slash - start));
        if (slash == std::string::npos) break;
        start = slash + 1;
    }
    auto field = [&](const std::string& part, char tag) -> std::size_t {
        if (part.size() < 2 || part[0] != tag) {
            throw std::invalid_argument("malformed digest: " + digest);
        }
        const std::string tail = part.substr(1);
        std::size_t used = 0;
        unsigned long long value = 0;
        try {
            value = std::stoull(tail, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed digest: " + digest);
        }
        if (used != tail.size()) {
            throw std::invalid_argument("malformed digest: " + digest);
        }
        return static_cast<std::size_t>(value);
    };
    if (parts.size() != 4 || parts[0].empty()) {
        throw std::invalid_argument("malformed digest: " + digest);
    }
    TrialKey key;
    key.case_id = parts[0];
    key.d = field(parts[1], 'd');
    key.n = field(parts[2], 'n');
    key.trial = field(parts[3], 't');
    return key;
}

namespace {

std::string mode_name(catalog::CompareMode mode) {
    switch (mode) {
        case catalog::CompareMode::AllUINorms:
            return "majorization";
        case catalog::CompareMode::AllUINormsMutual:
            return "mutual";
        case catalog::CompareMode::OperatorNormOnly:
            return "operator";
    }
    return "?";
}

void fill_outcome(TrialOutcome& out, const catalog::TrialEvaluation& ev) {
    out.holds = ev.holds;
    out.margin = ev.margin;
    out.worst_k = ev.worst_k;
    out.ratio = ev.ratio;
    out.lhs_norm = ev.lhs_norm;
    out.rhs_norm = ev.rhs_norm;
    out.tol = ev.tol;
    out.failed_cross_checks = ev.failed_cross_checks;
}

}  // namespace

TrialOutcome run_trial(const TrialKey& key, const CampaignConfig& config) {
    const catalog::CaseInfo& info = catalog::case_info(key.case_id);
    TrialOutcome out;
    out.key = key;
    out.kind = mode_name(info.mode);
    try {
        ensembles::RngStream rng = ensembles::substream(config.seed, key.digest());
        const catalog::CaseInputs inputs = catalog::sample(key.case_id, key.d, key.n, rng);
        const spectral::JacobiOptions opts;
        catalog::TrialEvaluation ev =
            catalog::evaluate(key.case_id, inputs, config.tol_scale, config.schatten_ps, opts);
        if (!ev.holds) {
            // A failed verdict gets one re-check at 10x tighter convergence to
            // separate roundoff artifacts from genuine counterexamples.
            ev = catalog::evaluate(key.case_id, inputs, config.tol_scale, config.schatten_ps,
                                   opts.tightened(0.1));
            out.retried = true;
        }
        fill_outcome(out, ev);
    } catch (const std::runtime_error& e) {
        out.error = true;
        out.error_message = e.what();
    } catch (const std::domain_error& e) {
        out.error = true;
        out.error_message = e.what();
    }
    return out;
}

namespace {

std::vector<TrialKey> enumerate_trials(const CampaignConfig& config) {
    std::vector<TrialKey> keys;
    for (const std::string& id : config.resolved_cases()) {
        const catalog::CaseInfo& info = catalog::case_info(id);
        std::vector<std::size_t> blocks;
        if (info.iterates_blocks) {
            for (std::size_t n : config.block_counts) {
                if (n >= info.min_blocks) blocks.push_back(n);
            }
        } else {
            blocks.push_back(info.fixed_blocks);
        }
        for (std::size_t d : config.dims) {
            for (std::size_t n : blocks) {
                for (std::size_t t = 0; t < config.trials_per_case; ++t) {
                    keys.push_back(TrialKey{id, d, n, t});
                }
            }
        }
    }
    return keys;
}

}  // namespace

CampaignReport run_campaign(const CampaignConfig& config, unsigned threads) {
    config.validate();
    const auto started = std::chrono::steady_clock::now();

    const std::vector<TrialKey> keys = enumerate_trials(config);
    std::vector<TrialOutcome> outcomes(keys.size());

    unsigned n_threads = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    n_threads = std::min<unsigned>(n_threads, std::max<std::size_t>(keys.size(), 1));

    std::atomic<std::size_t> cursor{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= keys.size()) return;
            outcomes[i] = run_trial(keys[i], config);
        }
    };
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    CampaignReport report;
    report.config = config;
    report.version = kToolVersion;
    report.prng = ensembles::kGeneratorName;

    for (const std::string& id : config.resolved_cases()) {
        CaseReport cr;
        cr.case_id = id;
        bool any = false;
        for (std::size_t i = 0; i < keys.size(); ++i) {
            if (keys[i].case_id != id) continue;
            const TrialOutcome& out = outcomes[i];
            ++cr.trials;
            if (out.error) {
                ++cr.errors;
                cr.error_digests.push_back(out.key.digest());
                continue;
            }
            if (out.retried) ++cr.retried;
            if (!out.holds) {
                ++cr.violations;
                cr.violation_digests.push_back(out.key.digest());
            }
            if (!any || out.ratio > cr.max_ratio) {
                cr.max_ratio = out.ratio;
                cr.max_ratio_digest = out.key.digest();
            }
            if (!any || out.margin < cr.min_margin) {
                cr.min_margin = out.margin;
                cr.min_margin_digest = out.key.digest();
            }
            any = true;
        }
        report.total_trials += cr.trials;
        report.total_violations += cr.violations;
        report.total_errors += cr.errors;
        report.cases.push_back(std::move(cr));
    }

    report.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

TrialOutcome replay(const std::string& digest, const CampaignConfig& config) {
    const TrialKey key = TrialKey::parse(digest);
    if (!catalog::case_exists(key.case_id)) {
        throw std::invalid_argument("digest names unknown case: " + key.case_id);
    }
    const catalog::CaseInfo& info = catalog::case_info(key.case_id);
    if (key.d < 1) {
        throw std::invalid_argument("digest has dimension 0: " + digest);
    }
    if (info.iterates_blocks ? key.n < info.min_blocks : key.n != info.fixed_blocks) {
        throw std::invalid_argument("digest block count is not admissible for case " +
                                    key.case_id + ": " + digest);
    }
    return run_trial(key, config);
}

namespace {

ComplexMatrix nilpotent_shift(std::size_t d) {
    ComplexMatrix m(d, d);
    std::vector<cplx> e(d * d, cplx(0.0, 0.0));
    for (std::size_t i = 0; i + 1 < d; ++i) e[i * d + i + 1] = cplx(1.0, 0.0);
    return ComplexMatrix(d, d, std::move(e));
}

ComplexMatrix project_to_class(const ComplexMatrix& m, catalog::InputClass cls) {
    switch (cls) {
        case catalog::InputClass::General:
            return m;
        case catalog::InputClass::Positive: {
            const spectral::HermitianEig eig = spectral::hermitian_eig(hermitian_part(m));
            std::vector<double> vals(eig.eigenvalues);
            for (double& v : vals) v = std::max(v, 0.0);
            return spectral::reconstruct_hermitian(eig.eigenvectors, vals);
        }
        case catalog::InputClass::Projection: {
            const spectral::HermitianEig eig = spectral::hermitian_eig(hermitian_part(m));
            std::vector<double> vals(eig.eigenvalues);
            for (double& v : vals) v = (v >= 0.5) ? 1.0 : 0.0;
            return spectral::reconstruct_hermitian(eig.eigenvectors, vals);
        }
        case catalog::InputClass::Normal: {
            // Diagonal of m in the eigenbasis of its Hermitian part; exact
            // on normal inputs, a usable projection nearby.
            const spectral::HermitianEig eig = spectral::hermitian_eig(hermitian_part(m));
            const ComplexMatrix& v = eig.eigenvectors;
            const ComplexMatrix t = multiply(multiply(adjoint(v), m), v);
            std::vector<cplx> diag(t.rows());
            for (std::size_t i = 0; i < t.rows(); ++i) diag[i] = t(i, i);
            return multiply(multiply(v, ComplexMatrix::diagonal(diag)), adjoint(v));
        }
    }
    throw std::logic_error("unreachable input class");
}

}  // namespace

SearchResult tightness_search(const std::string& case_id, std::size_t budget,
                              std::size_t dim, const CampaignConfig& config) {
    if (budget < 1) {
        throw std::invalid_argument("tightness_search: budget must be >= 1");
    }
    if (dim < 1) {
        throw std::invalid_argument("tightness_search: dim must be >= 1");
    }
    const catalog::CaseInfo& info = catalog::case_info(case_id);
    const std::size_t n = info.iterates_blocks ? info.min_blocks : info.fixed_blocks;
    const std::vector<catalog::InputClass> classes = catalog::input_classes(case_id, n);

    std::ostringstream path;
    path << "tightness/" << case_id << "/d" << dim;
    ensembles::RngStream rng = ensembles::substream(config.seed, path.str());

    SearchResult result;
    std::size_t evals = 0;

    auto evaluate_inputs =
        [&](const std::vector<ComplexMatrix>& mats) -> catalog::TrialEvaluation {
        catalog::CaseInputs in;
        in.d = dim;
        in.n = n;
        in.matrices = mats;
        ++evals;
        return catalog::evaluate(case_id, in, config.tol_scale, config.schatten_ps);
    };

    std::vector<ComplexMatrix> current;
    catalog::TrialEvaluation current_ev;
    bool have_current = false;

    auto consider = [&](const std::vector<ComplexMatrix>& mats) {
        const catalog::TrialEvaluation ev = evaluate_inputs(mats);
        if (!have_current || ev.ratio > current_ev.ratio) {
            current = mats;
            current_ev = ev;
            have_current = true;
        }
        if (result.best_inputs.empty() || ev.ratio > result.best.ratio) {
            result.best_inputs = mats;
            result.best.holds = ev.holds;
            result.best.margin = ev.margin;
            result.best.worst_k = ev.worst_k;
            result.best.ratio = ev.ratio;
            result.best.lhs_norm = ev.lhs_norm;
            result.best.rhs_norm = ev.rhs_norm;
            result.best.tol = ev.tol;
            result.best.failed_cross_checks = ev.failed_cross_checks;
        }
    };

    // Canonical starts: known equality witnesses are reachable from these.
    std::vector<ComplexMatrix> identity_start(classes.size(), ComplexMatrix::identity(dim));
    consider(identity_start);
    const bool all_general = std::all_of(classes.begin(), classes.end(), [](auto c) {
        return c == catalog::InputClass::General;
    });
    if (evals < budget && all_general && dim >= 2) {
        consider(std::vector<ComplexMatrix>(classes.size(), nilpotent_shift(dim)));
    }

    double sigma = 0.4;
    std::size_t stall = 0;
    while (evals < budget) {
        if (stall >= 40 || sigma < 1e-4) {
            consider(catalog::sample(case_id, dim, n, rng).matrices);
            sigma = 0.4;
            stall = 0;
            continue;
        }
        std::vector<ComplexMatrix> candidate;
        candidate.reserve(current.size());
        for (std::size_t m = 0; m < current.size(); ++m) {
            const ComplexMatrix& base = current[m];
            const double step =
                sigma * std::max(1.0, frobenius_norm(base) / static_cast<double>(dim));
            std::vector<cplx> e(base.entries());
            for (cplx& z : e) z += step * rng.complex_gaussian();
            candidate.push_back(project_to_class(ComplexMatrix(dim, dim, std::move(e)),
                                                 classes[m]));
        }
        const double before = current_ev.ratio;
        consider(candidate);
        if (current_ev.ratio > before) {
            stall = 0;
        } else {
            ++stall;
        }
        sigma *= 0.97;
    }

    result.evaluations = evals;
    result.best.key = TrialKey{case_id, dim, n, 0};
    result.best.kind = mode_name(info.mode);
    return result;
}

namespace {

json schatten_ps_to_json(const std::vector<double>& ps) {
    json arr = json::array();
    for (double p : ps) {
        if (std::isinf(p)) {
            arr.push_back("inf");
        } else {
            arr.push_back(p);
        }
    }
    return arr;
}

json config_to_json(const CampaignConfig& config) {
    json j;
    j["seed"] = config.seed;
    j["trials_per_case"] = config.trials_per_case;
    j["dims"] = config.dims;
    j["block_counts"] = config.block_counts;
    j["schatten_ps"] = schatten_ps_to_json(config.schatten_ps);
    j["tol_scale"] = config.tol_scale;
    j["cases"] = config.cases.empty() ? json::array({"all"}) : json(config.cases);
    return j;
}

}  // namespace

CampaignConfig config_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("config: ") + e.what());
    }
    if (!j.is_object()) {
        throw std::invalid_argument("config: expected a JSON object");
    }
    static const std::vector<std::string> known = {
        "seed", "trials_per_case", "dims", "block_counts", "schatten_ps",
        "tol_scale", "cases"};
    for (const auto& item : j.items()) {
        if (std::find(known.begin(), known.end(), item.key()) == known.end()) {
            throw std::invalid_argument("config: unknown key: " + item.key());
        }
    }
    CampaignConfig config;
    if (j.contains("seed")) {
        const json& s = j["seed"];
        if (s.is_string()) {
            config.seed = ensembles::parse_seed(s.get<std::string>());
        } else if (s.is_number_unsigned()) {
            config.seed = s.get<std::uint64_t>();
        } else {
            throw std::invalid_argument("config: seed must be unsigned or a string");
        }
    }
    if (j.contains("trials_per_case")) {
        if (!j["trials_per_case"].is_number_unsigned()) {
            throw std::invalid_argument("config: trials_per_case must be a positive integer");
        }
        config.trials_per_case = j["trials_per_case"].get<std::size_t>();
    }
    auto read_sizes = [&](const char* key, std::vector<std::size_t>& out) {
        if (!j.contains(key)) return;
        if (!j[key].is_array()) {
            throw std::invalid_argument(std::string("config: ") + key + " must be an array");
        }
        out.clear();
        for (const json& v : j[key]) {
            if (!v.is_number_unsigned()) {
                throw std::invalid_argument(std::string("config: ") + key +
                                            " entries must be positive integers");
            }
            out.push_back(v.get<std::size_t>());
        }
    };
    read_sizes("dims", config.dims);
    read_sizes("block_counts", config.block_counts);
    if (j.contains("schatten_ps")) {
        if (!j["schatten_ps"].is_array()) {
            throw std::invalid_argument("config: schatten_ps must be an array");
        }
        config.schatten_ps.clear();
        for (const json& v : j["schatten_ps"]) {
            if (v.is_string()) {
                const std::string s = v.get<std::string>();
                if (s != "inf" && s != "Infinity") {
                    throw std::invalid_argument("config: bad schatten exponent: " + s);
                }
                config.schatten_ps.push_back(std::numeric_limits<double>::infinity());
            } else if (v.is_number()) {
                config.schatten_ps.push_back(v.get<double>());
            } else {
                throw std::invalid_argument("config: schatten_ps entries must be numbers or \"inf\"");
            }
        }
    }
    if (j.contains("tol_scale")) {
        if (!j["tol_scale"].is_number()) {
            throw std::invalid_argument("config: tol_scale must be a number");
        }
        config.tol_scale = j["tol_scale"].get<double>();
    }
    if (j.contains("cases")) {
        if (j["cases"].is_string()) {
            config.cases = {j["cases"].get<std::string>()};
        } else if (j["cases"].is_array()) {
            config.cases.clear();
            for (const json& v : j["cases"]) {
                if (!v.is_string()) {
                    throw std::invalid_argument("config: cases entries must be strings");
                }
                config.cases.push_back(v.get<std::string>());
            }
        } else {
            throw std::invalid_argument("config: cases must be a string or array");
        }
    }
    config.validate();
    return config;
}

CampaignConfig config_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open config file: " + path);
    }
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return config_from_json_text(text);
}

std::string config_to_json_text(const CampaignConfig& config) {
    return config_to_json(config).dump(2);
}

namespace {

json outcome_to_json(const TrialOutcome& out) {
    json j;
    j["digest"] = out.key.digest();
    j["case"] = out.key.case_id;
    j["dim"] = out.key.d;
    j["blocks"] = out.key.n;
    j["trial"] = out.key.trial;
    j["kind"] = out.kind;
    j["error"] = out.error;
    if (out.error) {
        j["error_message"] = out.error_message;
        return j;
    }
    j["holds"] = out.holds;
    j["retried"] = out.retried;
    j["margin"] = json_number(out.margin);
    j["worst_k"] = out.worst_k;
    j["ratio"] = json_number(out.ratio);
    j["lhs_norm"] = json_number(out.lhs_norm);
    j["rhs_norm"] = json_number(out.rhs_norm);
    j["tol"] = json_number(out.tol);
    j["failed_cross_checks"] = out.failed_cross_checks;
    return j;
}

}  // namespace

std::string report_to_json_text(const CampaignReport& report) {
    json j;
    j["config"] = config_to_json(report.config);
    j["environment"] = {{"version", report.version}, {"prng", report.prng}};
    json cases = json::array();
    for (const CaseReport& cr : report.cases) {
        json c;
        c["case"] = cr.case_id;
        c["trials"] = cr.trials;
        c["violations"] = {{"count", cr.violations}, {"digests", cr.violation_digests}};
        c["errors"] = {{"count", cr.errors}, {"digests", cr.error_digests}};
        c["retried"] = cr.retried;
        c["max_ratio"] = json_number(cr.max_ratio);
        c["max_ratio_digest"] = cr.max_ratio_digest;
        c["min_margin"] = json_number(cr.min_margin);
        c["min_margin_digest"] = cr.min_margin_digest;
        cases.push_back(std::move(c));
    }
    j["cases"] = std::move(cases);
    j["totals"] = {{"trials", report.total_trials},
                   {"violations", report.total_violations},
                   {"errors", report.total_errors}};
    j["wall_time_seconds"] = report.wall_time_seconds;
    return j.dump(2);
}

void report_to_json_file(const CampaignReport& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::invalid_argument("cannot write report file: " + path);
    }
    out << report_to_json_text(report) << "\n";
}

std::string outcome_to_json_text(const TrialOutcome& outcome) {
    return outcome_to_json(outcome).dump(2);
}

std::string search_result_to_json_text(const SearchResult& result) {
    json j;
    json best = outcome_to_json(result.best);
    // Search outcomes replay by re-running the search, not via campaign
    // digests; the inputs below are the witness itself.
    best["digest"] = "tightness/" + result.best.key.case_id + "/d" +
                     std::to_string(result.best.key.d);
    best.erase("trial");
    j["outcome"] = std::move(best);
    j["evaluations"] = result.evaluations;
    json inputs = json::array();
    for (const ComplexMatrix& m : result.best_inputs) {
        inputs.push_back(json::parse(matrix_to_json_text(m)));
    }
    j["inputs"] = std::move(inputs);
    return j.dump(2);
}

}  // namespace uinorm::harness
