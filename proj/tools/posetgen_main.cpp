// Command-line front end: almost-uniform labelled poset generation plus the
// small-n enumeration, validation and convergence tooling around it.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "posetgen/chain.hpp"
#include "posetgen/io.hpp"
#include "posetgen/oracle.hpp"
#include "posetgen/sampling.hpp"
#include "posetgen/stats.hpp"

namespace {

using namespace posetgen;

constexpr int kExitValidationFailure = 1;
constexpr int kExitUsage = 2;

std::uint64_t entropy_seed() {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

std::string render_poset(const PosetKey& key, const std::string& format) {
    if (format == "json") {
        return poset_to_json(key, /*include_covers=*/true).dump() + "\n";
    }
    if (format == "dot-hasse") {
        return poset_to_dot_hasse(key);
    }
    return to_edge_list(key);
}

struct GenerateOptions {
    int n = 0;
    std::optional<long long> steps;
    std::optional<std::uint64_t> seed;
    long long count = 1;
    std::string format = "edge-list";
    int jobs = 1;
    bool ordered = false;
};

int run_generate(const GenerateOptions& opt) {
    const long long steps = opt.steps.value_or(ChainConfig::default_steps(opt.n));
    const std::uint64_t seed = opt.seed.value_or(entropy_seed());
    std::cerr << "seed: " << seed << "\n";

    const bool separate_blocks = opt.format != "json"; // NDJSON needs no separator
    bool first = true;
    std::mutex io_mutex;
    for_each_sample(opt.n, steps, seed, opt.count, opt.jobs, opt.ordered,
                    [&](long long, const PosetKey& key) {
                        std::string text = render_poset(key, opt.format);
                        std::lock_guard lock(io_mutex);
                        if (separate_blocks && !first) std::cout << "\n";
                        first = false;
                        std::cout << text << std::flush;
                    });
    return 0;
}

struct EnumerateOptions {
    int n = 0;
    int guard = kEnumerationGuard;
    bool dump_keys = false;
    std::string space_file;
    std::string matrix_file;
};

int run_enumerate(const EnumerateOptions& opt) {
    StateSpace space = enumerate_state_space(opt.n, opt.guard);
    std::cout << "dags: " << space.dag_count() << ", posets: " << space.poset_count() << "\n";
    if (opt.dump_keys) {
        for (const PosetKey& key : space.posets) std::cout << key_to_hex(key) << "\n";
    }
    if (!opt.space_file.empty()) {
        std::ofstream out(opt.space_file);
        if (!out) throw std::runtime_error("cannot open " + opt.space_file);
        write_state_space(out, space);
    }
    if (!opt.matrix_file.empty()) {
        std::ofstream out(opt.matrix_file);
        if (!out) throw std::runtime_error("cannot open " + opt.matrix_file);
        if (opt.n <= 3) {
            write_matrix_csv(out, build_mcstar_matrix<Rational>(space));
        } else {
            write_matrix_csv(out, build_mcstar_matrix<double>(space));
        }
    }
    return 0;
}

struct ValidateOptions {
    int n = 0;
    int guard = kMatrixGuard;
    bool inject_error = false; // test hook: corrupt the matrix, expect FAIL
};

class CheckReporter {
public:
    void report(const std::string& name, bool ok, const std::string& detail = "") {
        std::cout << name << ": " << (ok ? "PASS" : "FAIL");
        if (!detail.empty()) std::cout << " (" << detail << ")";
        std::cout << "\n";
        failed_ = failed_ || !ok;
    }
    bool any_failed() const { return failed_; }

private:
    bool failed_ = false;
};

// Exact checks in rationals for n <= 3; doubles against 1e-12 for n = 4.
int run_validate(const ValidateOptions& opt) {
    StateSpace space = enumerate_state_space(opt.n, std::max(opt.guard, kEnumerationGuard));
    CheckReporter checks;

    bool lemma2 = true;
    for (std::size_t g = 0; g < space.dag_count(); ++g) {
        std::uint64_t by_formula = std::uint64_t{1} << space.exponents[g];
        if (by_formula != class_size_bruteforce(space.dags[g], space)) {
            lemma2 = false;
            break;
        }
    }
    checks.report("class-cardinality formula vs brute force", lemma2,
                  std::to_string(space.dag_count()) + " dags");

    if (opt.n <= 3) {
        auto matrix = build_mcstar_matrix<Rational>(space, opt.guard);
        if (opt.inject_error) matrix.at(0, 0) += Rational(1, 1000); // deliberate corruption
        auto pi = stationary_target<Rational>(space);

        checks.report("row sums equal 1 (exact)", max_row_sum_error(matrix) == 0);
        checks.report("detailed balance (exact)", max_detailed_balance_error(matrix, pi) == 0);
        checks.report("stationarity pi P = pi (exact)", max_stationarity_error(matrix, pi) == 0);
        checks.report("uniform-chain matrix symmetric (exact)", is_symmetric(build_mc_matrix<Rational>(space, opt.guard)));

        bool domination = true;
        auto uniform = uniform_distribution<Rational>(space.poset_count());
        std::vector<Rational> mu(space.dag_count());
        mu[0] = 1;
        for (int m = 0; m <= 50; ++m) {
            Rational dag_tv = tv_distance_raw(mu, pi);
            Rational poset_tv = tv_distance_raw(project_to_posets(mu, space), uniform);
            if (poset_tv > dag_tv) {
                domination = false;
                break;
            }
            mu = multiply_left(mu, matrix);
        }
        checks.report("poset TV dominated by DAG TV, m <= 50 (exact)", domination);
    } else {
        auto matrix = build_mcstar_matrix<double>(space, opt.guard);
        if (opt.inject_error) matrix.at(0, 0) += 1e-3;
        auto pi = stationary_target<double>(space);

        checks.report("row sums within 1e-12", max_row_sum_error(matrix) < 1e-12,
                      "err=" + format_double(max_row_sum_error(matrix)));
        checks.report("detailed balance within 1e-12", max_detailed_balance_error(matrix, pi) < 1e-12);
        checks.report("stationarity within 1e-12", max_stationarity_error(matrix, pi) < 1e-12,
                      "err=" + format_double(max_stationarity_error(matrix, pi)));
    }

    return checks.any_failed() ? kExitValidationFailure : 0;
}

struct ConvergenceOptions {
    int n = 0;
    std::vector<long long> steps_list;
    long long samples = 0;
    bool exact = false;
    std::optional<std::uint64_t> seed;
    int jobs = 1;
    int guard = kEnumerationGuard;
};

int run_convergence(const ConvergenceOptions& opt) {
    std::vector<long long> ms = opt.steps_list;
    if (ms.empty()) ms.push_back(ChainConfig::default_steps(opt.n));

    std::cout << "m,tv\n";
    if (opt.exact) {
        if (opt.n > 3) {
            throw CLI::ValidationError("--exact", "exact mode is limited to n <= 3 (matrix powers)");
        }
        StateSpace space = enumerate_state_space(opt.n);
        auto matrix = build_mcstar_matrix<Rational>(space, 3);
        auto uniform = uniform_distribution<Rational>(space.poset_count());
        std::vector<long long> sorted = ms;
        std::sort(sorted.begin(), sorted.end());
        std::vector<Rational> mu(space.dag_count());
        mu[0] = 1;
        long long at = 0;
        std::vector<std::pair<long long, double>> rows;
        for (long long m : sorted) {
            for (; at < m; ++at) mu = multiply_left(mu, matrix);
            Rational tv = tv_distance_raw(project_to_posets(mu, space), uniform);
            rows.emplace_back(m, tv.get_d());
        }
        for (auto [m, tv] : rows) std::cout << m << "," << format_double(tv) << "\n";
        return 0;
    }

    if (opt.samples < 1) {
        throw CLI::ValidationError("--samples", "empirical mode needs at least one sample");
    }
    const std::uint64_t seed = opt.seed.value_or(entropy_seed());
    std::cerr << "seed: " << seed << "\n";
    StateSpace space = enumerate_state_space(opt.n, opt.guard); // supplies M
    for (std::size_t idx = 0; idx < ms.size(); ++idx) {
        const long long m = ms[idx];
        SampleHistogram hist = sample_posets(opt.n, m, derive_stream_seed(seed, idx), opt.samples, opt.jobs);
        std::cout << m << "," << format_double(empirical_tv(hist, space.poset_count())) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Almost-uniform labelled poset generator (Metropolis chain over DAGs)"};
    app.require_subcommand(1);

    GenerateOptions gen;
    auto* cmd_gen = app.add_subcommand("generate", "Sample posets via the m-step Metropolis chain");
    cmd_gen->add_option("-n,--size", gen.n, "Poset size")->required()->check(CLI::PositiveNumber);
    cmd_gen->add_option("-m,--steps", gen.steps, "Chain steps (default n^2)")
        ->check(CLI::NonNegativeNumber);
    cmd_gen->add_option("--seed", gen.seed, "Base RNG seed (default: entropy; always printed to stderr)");
    cmd_gen->add_option("--count", gen.count, "Number of independent samples")->check(CLI::PositiveNumber);
    cmd_gen->add_option("--format", gen.format, "Output format")
        ->check(CLI::IsMember({"edge-list", "json", "dot-hasse"}))
        ->capture_default_str();
    cmd_gen->add_option("--jobs", gen.jobs, "Worker threads")->check(CLI::PositiveNumber);
    cmd_gen->add_flag("--ordered", gen.ordered, "Emit samples in index order even with --jobs > 1");

    EnumerateOptions enu;
    auto* cmd_enum = app.add_subcommand("enumerate", "Exhaustively enumerate labelled DAGs and posets");
    cmd_enum->add_option("-n,--size", enu.n, "Element count")->required()->check(CLI::PositiveNumber);
    cmd_enum->add_option("--guard", enu.guard, "Enumeration size guard")->capture_default_str();
    cmd_enum->add_flag("--keys", enu.dump_keys, "Also dump every poset key as hex");
    cmd_enum->add_option("--space", enu.space_file, "Write index,edge-bitstring,poset-index records");
    cmd_enum->add_option("--matrix", enu.matrix_file, "Write the Metropolis transition matrix as CSV");

    ValidateOptions val;
    auto* cmd_val = app.add_subcommand("validate", "Run the exact small-n oracle checks");
    cmd_val->add_option("-n,--size", val.n, "Element count (exact rationals for n <= 3, doubles at 4)")
        ->required()
        ->check(CLI::Range(1, 4));
    cmd_val->add_option("--guard", val.guard, "Matrix size guard")->capture_default_str();
    cmd_val->add_flag("--inject-error", val.inject_error)->group(""); // test hook, hidden

    ConvergenceOptions conv;
    auto* cmd_conv = app.add_subcommand("convergence", "Tabulate TV distance to uniform versus m");
    cmd_conv->add_option("-n,--size", conv.n, "Poset size")->required()->check(CLI::PositiveNumber);
    cmd_conv->add_option("-m,--steps", conv.steps_list, "Step budgets to evaluate (repeatable)");
    cmd_conv->add_option("--samples", conv.samples, "Samples per m (empirical mode)");
    cmd_conv->add_flag("--exact", conv.exact, "Exact matrix-power mode (n <= 3)");
    cmd_conv->add_option("--seed", conv.seed, "Base RNG seed (empirical mode)");
    cmd_conv->add_option("--jobs", conv.jobs, "Worker threads (empirical mode)")->check(CLI::PositiveNumber);
    cmd_conv->add_option("--guard", conv.guard, "Enumeration guard for the M lookup")->capture_default_str();

    try {
        app.parse(argc, argv);
        if (*cmd_gen) return run_generate(gen);
        if (*cmd_enum) return run_enumerate(enu);
        if (*cmd_val) return run_validate(val);
        return run_convergence(conv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidationFailure;
    }
}
