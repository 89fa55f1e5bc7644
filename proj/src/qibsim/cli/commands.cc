// Copyright 2026 The qibsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "qibsim/cli/commands.h"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "qibsim/metrics/born.h"
#include "qibsim/metrics/estimators.h"
#include "qibsim/montecarlo/rng.h"
#include "qibsim/protocols/cluster.h"
#include "qibsim/protocols/cphase.h"
#include "qibsim/protocols/ghz.h"
#include "qibsim/protocols/hom.h"
#include "qibsim/protocols/result.h"
#include "qibsim/util/format.h"

using namespace qibsim;
using nlohmann::json;

namespace {

std::string num(double v) {
    return format_double(v);
}

std::string num(std::uint64_t v) {
    return std::to_string(v);
}

std::string num(int v) {
    return std::to_string(v);
}

/// Evaluates `f`, or nan where the quantity is undefined at this point.
template <typename F>
double or_nan(F f) {
    try {
        return f();
    } catch (const std::invalid_argument &) {
        return std::nan("");
    } catch (const std::domain_error &) {
        return std::nan("");
    }
}

const std::vector<std::string> MONTE_CARLO_COLUMNS{
    "p",
    "eta",
    "M",
    "N",
    "trials",
    "seed",
    "p_n",
    "p_n_sigma",
    "p_n_lower",
    "p_n_upper",
    "analytic_p_n",
    "p_n_conditional",
    "p_n_conditional_sigma",
    "first_wait",
    "first_wait_sigma",
    "analytic_first_wait",
    "pair_wait",
    "pair_wait_sigma",
    "analytic_pair_wait",
    "attempt_length",
    "attempt_length_sigma",
    "analytic_attempt_length",
    "rate",
    "rate_sigma",
    "analytic_rate",
};

std::vector<std::string> monte_carlo_row(const TrialConfig &c, const MonteCarloSummary &s) {
    return {
        num(c.params.p),
        num(c.params.eta),
        num(c.params.M),
        num(c.params.N),
        num(c.n_trials),
        num(c.rng_seed),
        num(s.p_n.value),
        num(s.p_n.sigma),
        num(s.p_n.lower),
        num(s.p_n.upper),
        num(s.analytic_p_n),
        num(s.p_n_conditional.value),
        num(s.p_n_conditional.sigma),
        num(s.first_wait.value),
        num(s.first_wait.sigma),
        num(s.analytic_first_wait),
        num(s.pair_wait.value),
        num(s.pair_wait.sigma),
        num(s.analytic_pair_wait),
        num(s.attempt_length.value),
        num(s.attempt_length.sigma),
        num(s.analytic_attempt_length),
        num(s.rate.value),
        num(s.rate.sigma),
        num(s.analytic_rate),
    };
}

std::array<Amplitude, 2> cardinal(char letter) {
    static const std::string order = "HVDARL";
    return cardinal_states()[order.find(letter)];
}

}  // namespace

CommandOutput qibsim::cmd_rates(const ExperimentConfig &config) {
    CommandOutput o;
    o.table.header = {
        "p",         "eta",        "M",      "N",      "f",        "p2_lossless",   "pN_lossless",
        "pN_lossy",  "pN_rate_lossy", "effective_sources", "enhancement", "eta_threshold", "p1", "mean_wait",
        "t_tm",      "t_qib",      "rate_spatial", "rate_tm", "rate_qib", "rate_qib_lossless", "renewal_rate_qib",
        "optimal_M", "optimal_rate_qib",
    };
    for (const RateParams &pt : config.rates.points()) {
        OptimizedDepth best = optimize_M(pt.p, pt.eta, pt.N, pt.f);
        o.table.add_row({
            num(pt.p),
            num(pt.eta),
            num(pt.M),
            num(pt.N),
            num(pt.f),
            num(p2_lossless(pt.p, pt.M)),
            num(pN_lossless(pt.p, pt.M, pt.N)),
            num(pN_lossy(pt.p, pt.eta, pt.M, pt.N)),
            num(pN_rate_lossy(pt.p, pt.eta, pt.M, pt.N)),
            num(effective_sources(pt.p, pt.eta, pt.M)),
            num(or_nan([&] { return multiplexing_enhancement(pt.p, pt.eta, pt.M, pt.N); })),
            num(eta_threshold(pt.p)),
            num(p1(pt.p, pt.M)),
            num(or_nan([&] { return mean_wait(pt.p, pt.M); })),
            num(t_tm(pt.p, pt.N)),
            num(t_qib(pt.p, pt.M, pt.N)),
            num(rate_spatial(pt.f, pt.p, pt.N)),
            num(rate_tm(pt.f, pt.p, pt.eta, pt.N)),
            num(rate_qib(pt)),
            num(rate_qib_lossless(pt)),
            num(renewal_rate_qib(pt)),
            num(best.M),
            num(best.rate),
        });
    }
    return o;
}

CommandOutput qibsim::cmd_simulate(const ExperimentConfig &config) {
    CommandOutput o;
    o.table.header = MONTE_CARLO_COLUMNS;
    TrialConfig c = config.montecarlo.trial_config(config.montecarlo.params, config.montecarlo.seed);
    o.table.add_row(monte_carlo_row(c, run_trials(c)));
    return o;
}

CommandOutput qibsim::cmd_sweep(const ExperimentConfig &config) {
    CommandOutput o;
    o.table.header = MONTE_CARLO_COLUMNS;
    auto points = config.sweep.points();
    for (std::size_t i = 0; i < points.size(); i++) {
        std::uint64_t seed = splitmix_finalize(config.montecarlo.seed ^ splitmix_finalize(i + 1));
        TrialConfig c = config.montecarlo.trial_config(points[i], seed);
        o.table.add_row(monte_carlo_row(c, run_trials(c)));
    }
    return o;
}

CommandOutput qibsim::cmd_ghz(const ExperimentConfig &config) {
    const auto &pc = config.protocol;
    ProtocolResult r = pc.gaps.empty() ? build_ghz(pc.n, config.source, config.qib)
                                       : build_ghz(pc.n, config.source, config.qib, pc.gaps);
    if (!(r.success_probability > 0)) {
        throw std::domain_error("GHZ post-selection never succeeds at this configuration");
    }
    GhzOverlap overlap = ghz_overlap(r.final_state, r.qubit_modes);
    const int photons = static_cast<int>(r.qubit_modes.size());
    Estimate population = ghz_population(born_hv_table(r.final_state, r.qubit_modes), photons);
    Estimate coherence = ghz_coherence(born_coherence_tables(r.final_state, r.qubit_modes));
    CommandOutput o;
    o.table.header = {
        "n_pairs", "photons", "success_probability", "fidelity", "phase", "population", "coherence",
        "population_coherence_fidelity"};
    o.table.add_row({
        num(pc.n),
        num(photons),
        num(r.success_probability),
        num(overlap.fidelity),
        num(overlap.phase),
        num(population.value),
        num(coherence.value),
        num(ghz_fidelity(population.value, coherence.value)),
    });
    o.state = result_to_json(r);
    return o;
}

CommandOutput qibsim::cmd_cluster(const ExperimentConfig &config) {
    const auto &pc = config.protocol;
    ProtocolResult r;
    if (pc.cluster_variant == "static") {
        std::vector<bool> pattern = pc.herald_pattern;
        if (pattern.empty()) {
            pattern.assign(pc.n, true);
        }
        r = build_cluster_static(pc.n, config.source, config.qib, pattern);
    } else {
        r = pc.gaps.empty() ? build_cluster_dynamic(pc.n, config.source, config.qib)
                            : build_cluster_dynamic(pc.n, config.source, config.qib, pc.gaps);
    }
    if (!(r.success_probability > 0)) {
        throw std::domain_error("cluster post-selection never succeeds at this configuration");
    }
    CommandOutput o;
    o.table.header = {"n_photons", "variant", "success_probability"};
    std::vector<std::string> row{num(pc.n), pc.cluster_variant, num(r.success_probability)};
    auto stabilizers = linear_cluster_stabilizers(pc.n);
    for (std::size_t i = 0; i < stabilizers.size(); i++) {
        o.table.header.push_back("K" + std::to_string(i + 1) + "_" + stabilizers[i]);
        row.push_back(num(pauli_expectation(r.final_state, r.qubit_modes, stabilizers[i])));
    }
    o.table.add_row(row);
    o.state = result_to_json(r);
    return o;
}

CommandOutput qibsim::cmd_cphase(const ExperimentConfig &config) {
    const std::string &letters = config.protocol.cphase_input;
    const SpatialMode control{0, Port::From};
    const SpatialMode target{0, Port::In};
    auto a = cardinal(letters[0]);
    auto b = cardinal(letters[1]);
    const Pol pols[2] = {Pol::H, Pol::V};
    SparseState input;
    SparseState ideal;
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) {
            Occupation occ{{0, Port::From, pols[i]}, {0, Port::In, pols[j]}};
            input.accumulate(occ, a[i] * b[j]);
            ideal.accumulate(occ, (i && j ? -1.0 : 1.0) * a[i] * b[j]);
        }
    }
    PostSelection kept = cphase(input, control, target);
    if (!kept.succeeded()) {
        throw std::domain_error("CPHASE post-selection never succeeds");
    }
    CommandOutput o;
    o.table.header = {"input", "success_probability", "fidelity"};
    o.table.add_row({letters, num(kept.probability), num(traced_fidelity(kept.state, ideal))});
    o.state = state_to_json(kept.state);
    return o;
}

CommandOutput qibsim::cmd_hom(const ExperimentConfig &config) {
    SourceModel source = config.source;
    if (config.hom.calibrate_visibility.has_value()) {
        source.mode_overlap = calibrate_hom_overlap(source, config.qib, *config.hom.calibrate_visibility);
    }
    std::vector<double> delays = config.hom.delays.empty() ? default_hom_delays() : config.hom.delays;
    CommandOutput o;
    o.table.header = {"storage_roundtrips", "mode_overlap", "delay", "coincidence", "visibility"};
    for (int t : config.hom.storage_roundtrips) {
        HomResult r = hom_experiment(source, config.qib, t, delays);
        for (std::size_t i = 0; i < r.delays.size(); i++) {
            o.table.add_row({num(t), num(source.mode_overlap), num(r.delays[i]), num(r.coincidences[i]),
                             num(r.visibility)});
        }
    }
    return o;
}

CommandOutput qibsim::cmd_fit(const ExperimentConfig &config, const std::vector<DecayPoint> &points) {
    FitResult r = fit_exponential_decay(points, config.fit.fixed_prefactor);
    CommandOutput o;
    o.table.header = {"eta_fit", "eta_stderr", "prefactor", "prefactor_fixed", "residual_norm", "points"};
    o.table.add_row({num(r.eta_fit), num(r.eta_stderr), num(r.prefactor), r.prefactor_was_fixed ? "true" : "false",
                     num(r.residual_norm), num(static_cast<std::uint64_t>(points.size()))});
    return o;
}

json qibsim::table_to_json(const CsvTable &table) {
    json rows = json::array();
    for (const auto &row : table.rows) {
        json obj = json::object();
        for (std::size_t i = 0; i < row.size(); i++) {
            try {
                double v = parse_double(row[i]);
                obj[table.header[i]] = std::isfinite(v) ? json(v) : json(row[i]);
            } catch (const std::invalid_argument &) {
                obj[table.header[i]] = row[i];
            }
        }
        rows.push_back(obj);
    }
    return rows;
}

namespace {

struct Flags {
    std::string config_path;
    std::string out_path;
    std::string state_out_path;
    std::string data_path;
    std::string format = "csv";
    std::optional<std::uint64_t> seed;
};

void write_text(const std::string &path, const std::string &text, std::ostream &fallback) {
    if (path.empty()) {
        fallback << text;
        return;
    }
    std::ofstream f(path);
    if (!f) {
        throw std::invalid_argument("cannot write '" + path + "'");
    }
    f << text;
}

int execute(const std::string &command, const Flags &flags, std::ostream &out) {
    ExperimentConfig config = flags.config_path.empty() ? ExperimentConfig{} : load_config_file(flags.config_path);
    if (flags.seed.has_value()) {
        config.montecarlo.seed = *flags.seed;
    }
    config.validate();

    CommandOutput result;
    if (command == "rates") {
        result = cmd_rates(config);
    } else if (command == "simulate") {
        result = cmd_simulate(config);
    } else if (command == "sweep") {
        result = cmd_sweep(config);
    } else if (command == "ghz") {
        result = cmd_ghz(config);
    } else if (command == "cluster") {
        result = cmd_cluster(config);
    } else if (command == "cphase") {
        result = cmd_cphase(config);
    } else if (command == "hom") {
        result = cmd_hom(config);
    } else if (command == "fit") {
        if (flags.data_path.empty()) {
            throw std::invalid_argument("fit needs --data <csv>");
        }
        std::ifstream data(flags.data_path);
        if (!data) {
            throw std::invalid_argument("cannot open data file '" + flags.data_path + "'");
        }
        result = cmd_fit(config, read_decay_csv(data));
    }

    std::ostringstream text;
    if (flags.format == "json") {
        json doc{{"command", command}, {"rows", table_to_json(result.table)}};
        if (result.state.has_value()) {
            doc["state"] = *result.state;
        }
        text << doc.dump(2) << '\n';
    } else {
        write_csv(text, result.table);
    }
    write_text(flags.out_path, text.str(), out);
    if (!flags.state_out_path.empty()) {
        if (!result.state.has_value()) {
            throw std::invalid_argument("--state-out applies only to ghz, cluster and cphase");
        }
        write_text(flags.state_out_path, result.state->dump(2) + "\n", out);
    }
    return EXIT_SUCCESS_CODE;
}

}  // namespace

int qibsim::run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Time-multiplexed multi-photon state simulator"};
    app.require_subcommand(1);
    Flags flags;
    const std::vector<std::pair<std::string, std::string>> commands{
        {"rates", "Closed-form probabilities, waiting times and rates over a grid"},
        {"simulate", "Monte Carlo of the multiplexed source against the formulas"},
        {"sweep", "Monte Carlo over a parameter grid"},
        {"ghz", "Build a GHZ state in the buffer"},
        {"cluster", "Build a linear cluster state in the buffer"},
        {"cphase", "Post-selected controlled phase on two photons"},
        {"hom", "Two-photon interference after storage"},
        {"fit", "Fit storage efficiency against roundtrips"},
    };
    for (const auto &[name, help] : commands) {
        CLI::App *sub = app.add_subcommand(name, help);
        sub->add_option("--config", flags.config_path, "JSON experiment config");
        sub->add_option("--out", flags.out_path, "Write the table here instead of stdout");
        sub->add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--seed", flags.seed, "Overrides montecarlo.seed");
        if (name == "ghz" || name == "cluster" || name == "cphase") {
            sub->add_option("--state-out", flags.state_out_path, "Write the final state as JSON");
        }
        if (name == "fit") {
            sub->add_option("--data", flags.data_path, "CSV with roundtrips, efficiency, stderr")->required();
        }
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return EXIT_SUCCESS_CODE;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return EXIT_CONFIG_ERROR;
    }

    std::string command = app.get_subcommands().front()->get_name();
    try {
        return execute(command, flags, out);
    } catch (const std::invalid_argument &e) {
        err << "config error: " << e.what() << '\n';
        return EXIT_CONFIG_ERROR;
    } catch (const json::exception &e) {
        err << "config error: " << e.what() << '\n';
        return EXIT_CONFIG_ERROR;
    } catch (const std::exception &e) {
        err << "numerical failure: " << e.what() << '\n';
        return EXIT_NUMERICAL_FAILURE;
    }
}
