// Command-line front end: analyze matrices, export graphs, raise powers,
// enumerate walks, and run seeded simulations. All mathematics lives in the
// library; this file only parses arguments and renders results.

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <string>

#include "evochain/csv.hpp"
#include "evochain/dot.hpp"
#include "evochain/errors.hpp"
#include "evochain/matrix.hpp"
#include "evochain/montecarlo.hpp"
#include "evochain/report.hpp"
#include "evochain/structure.hpp"
#include "evochain/triad.hpp"
#include "evochain/walks.hpp"

namespace {

using evochain::format_weight;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitSuccess = 0;
constexpr int kExitCheckFailed = 1;   // verify-walks found a violated theorem
constexpr int kExitInputError = 2;    // parse/validation problems
constexpr int kExitGuardExceeded = 3; // dimension/length caps

struct CommonOptions {
    std::string input;
    double tol = evochain::kDefaultTol;
    double zero_tol = 0.0;
    std::string format = "text";
};

void add_common(CLI::App* cmd, CommonOptions& o, bool with_format = true) {
    cmd->add_option("-i,--input", o.input, "CSV matrix file")->required();
    cmd->add_option("--tol", o.tol, "stochasticity/comparison tolerance")
        ->capture_default_str();
    cmd->add_option("--zero-tol", o.zero_tol,
                    "entries with |value| <= zero-tol are treated as absent edges")
        ->capture_default_str();
    if (with_format) {
        cmd->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"text", "structured"}))
            ->capture_default_str();
    }
}

// The graph every subcommand analyzes: zero-tol suppression everywhere and,
// for Markov input, negative entries within tol treated as noise.
evochain::WeightedDigraph build_graph(const evochain::StructureMatrix& m,
                                      const CommonOptions& o) {
    evochain::EvolutionAlgebra algebra{m};
    double noise = evochain::is_markov(algebra, o.tol) ? o.tol : 0.0;
    return evochain::graph_from_algebra(algebra, o.zero_tol, noise);
}

// States may be given by label ("e2") or as a 1-based index ("2"). Labels
// win when both readings are possible.
int resolve_state(const evochain::StructureMatrix& m, const std::string& name) {
    for (int i = 0; i < m.dim(); ++i) {
        if (m.labels()[i] == name)
            return i;
    }
    bool digits = !name.empty();
    for (char c : name)
        digits = digits && c >= '0' && c <= '9';
    if (digits) {
        int index = std::stoi(name) - 1;
        if (index < 0 || index >= m.dim())
            throw evochain::IndexOutOfRangeError("state " + name + " out of range 1.." +
                                                 std::to_string(m.dim()));
        return index;
    }
    throw evochain::InvalidLabelError("unknown state \"" + name + "\"");
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw evochain::IoError("cannot open \"" + path + "\" for writing");
    out << content;
    if (!out)
        throw evochain::IoError("error while writing \"" + path + "\"");
}

int run_analyze(const CommonOptions& o, int closed_sets_cap, int verify_walks) {
    evochain::AnalysisOptions options;
    options.tol = o.tol;
    options.zero_tol = o.zero_tol;
    options.closed_sets_cap = closed_sets_cap;
    options.verify_walks_max_length = verify_walks;
    evochain::AnalysisReport report =
        evochain::analyze(evochain::load_matrix_csv(o.input), options);
    std::cout << (o.format == "structured" ? evochain::render_structured(report)
                                           : evochain::render_text(report));
    return kExitSuccess;
}

int run_dot(const CommonOptions& o, const std::string& output) {
    evochain::StructureMatrix m = evochain::load_matrix_csv(o.input);
    write_output(output, evochain::to_dot(build_graph(m, o)));
    return kExitSuccess;
}

int run_power(const CommonOptions& o, std::uint64_t n) {
    evochain::StructureMatrix m = evochain::load_matrix_csv(o.input);
    evochain::PowerResult power = evochain::matrix_power(m, n);
    if (o.format == "structured") {
        ordered_json j;
        j["schema"] = "evochain.power/1";
        j["exponent"] = power.exponent;
        j["labels"] = power.matrix.labels();
        j["rows"] = ordered_json::array();
        for (int i = 0; i < power.matrix.dim(); ++i)
            j["rows"].push_back(power.matrix.row(i));
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << evochain::render_matrix_csv(power.matrix);
    }
    return kExitSuccess;
}

int run_walks(const CommonOptions& o, const std::string& from, const std::string& to,
              int length) {
    evochain::StructureMatrix m = evochain::load_matrix_csv(o.input);
    evochain::WeightedDigraph g = build_graph(m, o);
    int i = resolve_state(m, from);
    int j = resolve_state(m, to);
    std::vector<evochain::Walk> walks = evochain::enumerate_walks(g, i, j, length);
    double weight_sum = evochain::walk_weight_sum(g, i, j, length);

    if (o.format == "structured") {
        ordered_json out;
        out["schema"] = "evochain.walks/1";
        out["from"] = m.labels()[i];
        out["to"] = m.labels()[j];
        out["length"] = length;
        out["walks"] = ordered_json::array();
        for (const evochain::Walk& w : walks) {
            ordered_json entry;
            entry["vertices"] = ordered_json::array();
            for (int v : w.vertices)
                entry["vertices"].push_back(m.labels()[v]);
            entry["weight"] = evochain::markov_weight(g, w);
            out["walks"].push_back(std::move(entry));
        }
        out["count"] = walks.size();
        out["weight_sum"] = weight_sum;
        std::cout << out.dump(2) << "\n";
    } else {
        for (const evochain::Walk& w : walks) {
            for (size_t t = 0; t < w.vertices.size(); ++t)
                std::cout << (t ? " -> " : "") << m.labels()[w.vertices[t]];
            std::cout << "  weight " << format_weight(evochain::markov_weight(g, w)) << "\n";
        }
        std::cout << "total walks: " << walks.size() << "\n";
        std::cout << "weight sum: " << format_weight(weight_sum) << "\n";
    }
    return kExitSuccess;
}

int run_verify_walks(const CommonOptions& o, int max_length) {
    evochain::StructureMatrix m = evochain::load_matrix_csv(o.input);
    evochain::WeightedDigraph g = build_graph(m, o);
    std::vector<evochain::WalkReport> reports =
        evochain::verify_walk_theorem(g, max_length, o.tol);

    int failed = 0;
    double max_abs_error = 0.0;
    std::vector<int> length_reports(max_length + 1, 0);
    std::vector<int> length_failed(max_length + 1, 0);
    std::vector<double> length_error(max_length + 1, 0.0);
    for (const evochain::WalkReport& r : reports) {
        ++length_reports[r.length];
        if (!r.passed) {
            ++failed;
            ++length_failed[r.length];
        }
        max_abs_error = std::max(max_abs_error, r.abs_error);
        length_error[r.length] = std::max(length_error[r.length], r.abs_error);
    }

    if (o.format == "structured") {
        ordered_json j;
        j["schema"] = "evochain.verify/1";
        j["max_length"] = max_length;
        j["tol"] = o.tol;
        j["reports"] = reports.size();
        j["failed"] = failed;
        j["max_abs_error"] = max_abs_error;
        j["passed"] = failed == 0;
        j["lengths"] = ordered_json::array();
        for (int n = 1; n <= max_length; ++n) {
            ordered_json entry;
            entry["length"] = n;
            entry["reports"] = length_reports[n];
            entry["failed"] = length_failed[n];
            entry["max_abs_error"] = length_error[n];
            j["lengths"].push_back(std::move(entry));
        }
        std::cout << j.dump(2) << "\n";
    } else {
        for (int n = 1; n <= max_length; ++n) {
            std::cout << "length " << n << ": " << length_reports[n] << " pairs, "
                      << length_failed[n] << " failed, max |error| "
                      << format_weight(length_error[n]) << "\n";
        }
        std::cout << "result: " << (failed == 0 ? "PASS" : "FAIL") << " (" << reports.size()
                  << " reports, tol " << format_weight(o.tol) << ")\n";
    }
    return failed == 0 ? kExitSuccess : kExitCheckFailed;
}

int run_simulate(const CommonOptions& o, const std::string& start, int steps,
                 std::uint64_t seed) {
    evochain::StructureMatrix m = evochain::load_matrix_csv(o.input);
    evochain::MarkovChain chain(m, o.tol);
    int s = resolve_state(m, start);
    evochain::Trajectory traj = evochain::simulate(chain, s, steps, seed);

    if (o.format == "structured") {
        ordered_json j;
        j["schema"] = "evochain.simulate/1";
        j["seed"] = traj.seed;
        j["start"] = m.labels()[traj.start];
        j["steps"] = steps;
        j["states"] = ordered_json::array();
        for (int v : traj.states)
            j["states"].push_back(m.labels()[v]);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "seed: " << traj.seed << "\n";
        std::cout << "start: " << m.labels()[traj.start] << "\n";
        std::cout << "steps: " << steps << "\n";
        std::cout << "trajectory:";
        for (int v : traj.states)
            std::cout << " " << m.labels()[v];
        std::cout << "\n";
    }
    return kExitSuccess;
}

int run_estimate_transition(const CommonOptions& o, int steps, long trials,
                            std::uint64_t seed) {
    evochain::StructureMatrix m = evochain::load_matrix_csv(o.input);
    evochain::MarkovChain chain(m, o.tol);
    auto estimates = evochain::empirical_transition(chain, steps, trials, seed);

    if (o.format == "structured") {
        ordered_json j;
        j["schema"] = "evochain.estimate/1";
        j["mode"] = "transition";
        j["steps"] = steps;
        j["trials"] = trials;
        j["seed"] = seed;
        j["labels"] = m.labels();
        j["values"] = ordered_json::array();
        j["std_errors"] = ordered_json::array();
        for (int i = 0; i < m.dim(); ++i) {
            ordered_json values = ordered_json::array();
            ordered_json errors = ordered_json::array();
            for (int k = 0; k < m.dim(); ++k) {
                values.push_back(estimates[i][k].value);
                errors.push_back(estimates[i][k].std_error);
            }
            j["values"].push_back(std::move(values));
            j["std_errors"].push_back(std::move(errors));
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "estimate mode: transition\n";
        std::cout << "steps: " << steps << "\n";
        std::cout << "trials: " << trials << "\n";
        std::cout << "seed: " << seed << "\n";
        for (int i = 0; i < m.dim(); ++i) {
            for (int k = 0; k < m.dim(); ++k) {
                std::cout << "p[" << m.labels()[i] << "][" << m.labels()[k]
                          << "] = " << format_weight(estimates[i][k].value) << " (stderr "
                          << format_weight(estimates[i][k].std_error) << ")\n";
            }
        }
    }
    return kExitSuccess;
}

int run_estimate_return(const CommonOptions& o, const std::string& state, int horizon,
                        long trials, std::uint64_t seed) {
    evochain::StructureMatrix m = evochain::load_matrix_csv(o.input);
    evochain::MarkovChain chain(m, o.tol);
    int j = resolve_state(m, state);
    evochain::EmpiricalEstimate est =
        evochain::estimate_return_frequency(chain, j, horizon, trials, seed);

    if (o.format == "structured") {
        ordered_json out;
        out["schema"] = "evochain.estimate/1";
        out["mode"] = "return";
        out["state"] = m.labels()[j];
        out["horizon"] = horizon;
        out["trials"] = trials;
        out["seed"] = seed;
        out["value"] = est.value;
        out["std_error"] = est.std_error;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "estimate mode: return\n";
        std::cout << "state: " << m.labels()[j] << "\n";
        std::cout << "horizon: " << horizon << "\n";
        std::cout << "trials: " << trials << "\n";
        std::cout << "seed: " << seed << "\n";
        std::cout << "return frequency: " << format_weight(est.value) << " (stderr "
                  << format_weight(est.std_error) << ")\n";
    }
    return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Analyzer for finite Markov chains, their evolution algebras, "
                 "and their weighted digraphs"};
    app.require_subcommand(1);

    CommonOptions analyze_opts;
    int closed_sets_cap = 20;
    int analyze_verify_walks = 0;
    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "full structural analysis of a matrix");
    add_common(analyze_cmd, analyze_opts);
    analyze_cmd->add_option("--closed-sets-cap", closed_sets_cap,
                            "skip closed-set enumeration above this dimension")
        ->capture_default_str();
    analyze_cmd->add_option("--verify-walks", analyze_verify_walks,
                            "also check the walk-sum theorem up to this length");

    CommonOptions dot_opts;
    std::string dot_output;
    CLI::App* dot_cmd = app.add_subcommand("dot", "export the graph in DOT format");
    add_common(dot_cmd, dot_opts, /*with_format=*/false);
    dot_cmd->add_option("-o,--output", dot_output, "output file (default: stdout)");

    CommonOptions power_opts;
    std::uint64_t power_n = 1;
    CLI::App* power_cmd = app.add_subcommand("power", "raise the matrix to a power");
    add_common(power_cmd, power_opts);
    power_cmd->add_option("-n,--n", power_n, "exponent")->required();

    CommonOptions walks_opts;
    std::string walks_from;
    std::string walks_to;
    int walks_length = 0;
    CLI::App* walks_cmd =
        app.add_subcommand("walks", "enumerate fixed-length walks and their weights");
    add_common(walks_cmd, walks_opts);
    walks_cmd->add_option("--from", walks_from, "start state (label or 1-based index)")
        ->required();
    walks_cmd->add_option("--to", walks_to, "end state (label or 1-based index)")->required();
    walks_cmd->add_option("--length", walks_length, "number of edges")->required();

    CommonOptions verify_opts;
    int verify_max_length = 4;
    CLI::App* verify_cmd = app.add_subcommand(
        "verify-walks", "check that walk weight sums match matrix power entries");
    add_common(verify_cmd, verify_opts);
    verify_cmd->add_option("--max-length", verify_max_length, "largest walk length checked")
        ->capture_default_str();

    CommonOptions simulate_opts;
    std::string simulate_start;
    int simulate_steps = 0;
    std::uint64_t simulate_seed = 0;
    CLI::App* simulate_cmd =
        app.add_subcommand("simulate", "sample one seeded trajectory of the chain");
    add_common(simulate_cmd, simulate_opts);
    simulate_cmd->add_option("--start", simulate_start, "start state (label or 1-based index)")
        ->required();
    simulate_cmd->add_option("--steps", simulate_steps, "number of transitions")->required();
    simulate_cmd->add_option("--seed", simulate_seed, "64-bit seed")->capture_default_str();

    CommonOptions estimate_opts;
    std::string estimate_mode;
    std::string estimate_state;
    int estimate_steps = 1;
    int estimate_horizon = 100;
    long estimate_trials = 10000;
    std::uint64_t estimate_seed = 0;
    CLI::App* estimate_cmd = app.add_subcommand(
        "estimate", "Monte Carlo estimates of transition or return probabilities");
    add_common(estimate_cmd, estimate_opts);
    estimate_cmd->add_option("--mode", estimate_mode, "transition or return")
        ->check(CLI::IsMember({"transition", "return"}))
        ->required();
    estimate_cmd->add_option("--steps", estimate_steps, "steps for --mode transition")
        ->capture_default_str();
    estimate_cmd->add_option("--state", estimate_state, "state for --mode return");
    estimate_cmd->add_option("--horizon", estimate_horizon, "horizon for --mode return")
        ->capture_default_str();
    estimate_cmd->add_option("--trials", estimate_trials, "trials per estimate")
        ->capture_default_str();
    estimate_cmd->add_option("--seed", estimate_seed, "64-bit seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitSuccess : kExitInputError;
    }

    try {
        if (*analyze_cmd)
            return run_analyze(analyze_opts, closed_sets_cap, analyze_verify_walks);
        if (*dot_cmd)
            return run_dot(dot_opts, dot_output);
        if (*power_cmd)
            return run_power(power_opts, power_n);
        if (*walks_cmd)
            return run_walks(walks_opts, walks_from, walks_to, walks_length);
        if (*verify_cmd)
            return run_verify_walks(verify_opts, verify_max_length);
        if (*simulate_cmd)
            return run_simulate(simulate_opts, simulate_start, simulate_steps, simulate_seed);
        if (*estimate_cmd) {
            if (estimate_mode == "transition")
                return run_estimate_transition(estimate_opts, estimate_steps, estimate_trials,
                                               estimate_seed);
            if (estimate_state.empty())
                throw evochain::InvalidLabelError("--mode return requires --state");
            return run_estimate_return(estimate_opts, estimate_state, estimate_horizon,
                                       estimate_trials, estimate_seed);
        }
    } catch (const evochain::ParseError& e) {
        std::cerr << "error: line " << e.line << ", column " << e.column << ": " << e.what()
                  << "\n";
        return kExitInputError;
    } catch (const evochain::TooLargeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGuardExceeded;
    } catch (const evochain::DimensionTooLargeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGuardExceeded;
    } catch (const evochain::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
