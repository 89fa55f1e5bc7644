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


#include "qibsim/cli/config.h"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

using namespace qibsim;
using nlohmann::json;

namespace {

/// Reads the fields of one JSON object and rejects any it was not asked for.
class Section {
   public:
    Section(json j, std::string path) : j_(std::move(j)), path_(std::move(path)) {
        if (!j_.is_object()) {
            fail("", "must be an object");
        }
    }

    template <typename T>
    void read(const std::string &key, T &out) {
        seen_.insert(key);
        auto it = j_.find(key);
        if (it != j_.end()) {
            out = convert<T>(*it, key);
        }
    }

    /// The sub-object at `key`, or an empty object when absent.
    json child(const std::string &key) {
        seen_.insert(key);
        auto it = j_.find(key);
        return it == j_.end() ? json::object() : *it;
    }

    std::string path(const std::string &key) const {
        return path_ + "." + key;
    }

    void finish() const {
        for (auto it = j_.begin(); it != j_.end(); ++it) {
            if (!seen_.count(it.key())) {
                fail(it.key(), "is not a known field");
            }
        }
    }

   private:
    [[noreturn]] void fail(const std::string &key, const std::string &what) const {
        throw std::invalid_argument("config " + (key.empty() ? path_ : path(key)) + " " + what);
    }

    template <typename T>
    T convert(const json &v, const std::string &key) const {
        if constexpr (std::is_same_v<T, bool>) {
            if (!v.is_boolean()) {
                fail(key, "must be a boolean");
            }
            return v.get<bool>();
        } else if constexpr (std::is_same_v<T, int>) {
            if (!v.is_number_integer() || v.get<long long>() < INT32_MIN || v.get<long long>() > INT32_MAX) {
                fail(key, "must be an integer");
            }
            return v.get<int>();
        } else if constexpr (std::is_same_v<T, std::uint64_t>) {
            if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
                fail(key, "must be a non-negative integer");
            }
            return v.get<std::uint64_t>();
        } else if constexpr (std::is_same_v<T, double>) {
            if (!v.is_number()) {
                fail(key, "must be a number");
            }
            return v.get<double>();
        } else if constexpr (std::is_same_v<T, std::string>) {
            if (!v.is_string()) {
                fail(key, "must be a string");
            }
            return v.get<std::string>();
        } else if constexpr (std::is_same_v<T, std::optional<double>>) {
            if (v.is_null()) {
                return std::nullopt;
            }
            return convert<double>(v, key);
        } else {
            if (!v.is_array()) {
                fail(key, "must be an array");
            }
            T out;
            for (const auto &e : v) {
                out.push_back(convert<typename T::value_type>(e, key));
            }
            return out;
        }
    }

    json j_;
    std::string path_;
    std::set<std::string> seen_;
};

json optional_number(const std::optional<double> &v) {
    return v.has_value() ? json(*v) : json(nullptr);
}

void read_grid(Section &&s, RateGrid &g) {
    s.read("p", g.p);
    s.read("eta", g.eta);
    s.read("M", g.M);
    s.read("N", g.N);
    s.read("f", g.f);
    s.finish();
}

json grid_to_json(const RateGrid &g) {
    return {{"p", g.p}, {"eta", g.eta}, {"M", g.M}, {"N", g.N}, {"f", g.f}};
}

void check_cardinal(const std::string &text) {
    if (text.size() != 2 || text.find_first_not_of("HVDARL") != std::string::npos) {
        throw std::invalid_argument("config protocol.cphase_input must be two of H, V, D, A, R, L");
    }
}

}  // namespace

std::vector<RateParams> RateGrid::points() const {
    std::vector<RateParams> out;
    for (int n : N) {
        for (int m : M) {
            for (double e : eta) {
                for (double x : p) {
                    out.push_back(RateParams{x, e, m, n, f});
                }
            }
        }
    }
    return out;
}

void RateGrid::validate() const {
    if (p.empty() || eta.empty() || M.empty() || N.empty()) {
        throw std::invalid_argument("config grid axes must be non-empty");
    }
    for (const auto &point : points()) {
        point.validate();
    }
}

TrialConfig MonteCarloSection::trial_config(const RateParams &point, std::uint64_t seed_for_point) const {
    TrialConfig c;
    c.params = point;
    c.rng_seed = seed_for_point;
    c.n_trials = n_trials;
    c.max_switch_rate = max_switch_rate;
    c.relative_multiplexing = relative_multiplexing;
    c.per_pair_restart = per_pair_restart;
    c.dark_count_probability = dark_count_probability;
    c.sample_postselection = sample_postselection;
    c.detector_efficiency = detector_efficiency;
    return c;
}

void ExperimentConfig::validate() const {
    if (schema_version != CONFIG_SCHEMA_VERSION) {
        throw std::invalid_argument(
            "config schema_version must be " + std::to_string(CONFIG_SCHEMA_VERSION));
    }
    source.validate();
    qib.validate();
    rates.validate();
    sweep.validate();
    montecarlo.trial_config(montecarlo.params, montecarlo.seed).validate();
    if (protocol.n < 2) {
        throw std::invalid_argument("config protocol.n must be >= 2");
    }
    if (protocol.cluster_variant != "dynamic" && protocol.cluster_variant != "static") {
        throw std::invalid_argument("config protocol.cluster_variant must be 'dynamic' or 'static'");
    }
    check_cardinal(protocol.cphase_input);
    for (int t : hom.storage_roundtrips) {
        if (t < 1) {
            throw std::invalid_argument("config hom.storage_roundtrips must be >= 1");
        }
    }
    if (hom.storage_roundtrips.empty()) {
        throw std::invalid_argument("config hom.storage_roundtrips must be non-empty");
    }
    if (hom.calibrate_visibility.has_value() && !(*hom.calibrate_visibility >= 0 && *hom.calibrate_visibility <= 1)) {
        throw std::invalid_argument("config hom.calibrate_visibility must lie in [0, 1]");
    }
    if (fit.fixed_prefactor.has_value() && !(*fit.fixed_prefactor > 0)) {
        throw std::invalid_argument("config fit.fixed_prefactor must be > 0");
    }
}

ExperimentConfig qibsim::config_from_json(const json &j) {
    ExperimentConfig c;
    Section root(j, "config");
    if (!j.contains("schema_version")) {
        throw std::invalid_argument("config schema_version is required");
    }
    root.read("schema_version", c.schema_version);
    if (c.schema_version != CONFIG_SCHEMA_VERSION) {
        throw std::invalid_argument("config schema_version must be " + std::to_string(CONFIG_SCHEMA_VERSION));
    }

    {
        Section s(root.child("source"), "source");
        s.read("pair_probability", c.source.pair_probability);
        std::string multipair(multipair_name(c.source.multipair));
        s.read("multipair", multipair);
        c.source.multipair = parse_multipair(multipair);
        s.read("max_pairs", c.source.max_pairs);
        s.read("herald_efficiency", c.source.herald_efficiency);
        s.read("mode_overlap", c.source.mode_overlap);
        s.read("bell_phase", c.source.bell_phase);
        s.finish();
    }
    {
        Section s(root.child("qib"), "qib");
        s.read("roundtrip_transmission", c.qib.roundtrip_transmission);
        s.read("qwp_angle_error", c.qib.qwp_angle_error);
        // Null stands for an ideal modulator, since JSON has no infinity.
        std::optional<double> extinction;
        if (std::isfinite(c.qib.eom_extinction)) {
            extinction = c.qib.eom_extinction;
        }
        s.read("eom_extinction", extinction);
        c.qib.eom_extinction = extinction.value_or(std::numeric_limits<double>::infinity());
        s.read("roundtrip_time", c.qib.roundtrip_time);
        s.finish();
    }
    read_grid(Section(root.child("rates"), "rates"), c.rates);
    read_grid(Section(root.child("sweep"), "sweep"), c.sweep);
    {
        Section s(root.child("montecarlo"), "montecarlo");
        s.read("p", c.montecarlo.params.p);
        s.read("eta", c.montecarlo.params.eta);
        s.read("M", c.montecarlo.params.M);
        s.read("N", c.montecarlo.params.N);
        s.read("f", c.montecarlo.params.f);
        s.read("n_trials", c.montecarlo.n_trials);
        s.read("seed", c.montecarlo.seed);
        s.read("max_switch_rate", c.montecarlo.max_switch_rate);
        s.read("relative_multiplexing", c.montecarlo.relative_multiplexing);
        s.read("per_pair_restart", c.montecarlo.per_pair_restart);
        s.read("dark_count_probability", c.montecarlo.dark_count_probability);
        s.read("sample_postselection", c.montecarlo.sample_postselection);
        s.read("detector_efficiency", c.montecarlo.detector_efficiency);
        s.finish();
    }
    {
        Section s(root.child("protocol"), "protocol");
        s.read("n", c.protocol.n);
        s.read("gaps", c.protocol.gaps);
        s.read("cluster_variant", c.protocol.cluster_variant);
        s.read("herald_pattern", c.protocol.herald_pattern);
        s.read("cphase_input", c.protocol.cphase_input);
        s.finish();
    }
    {
        Section s(root.child("hom"), "hom");
        s.read("storage_roundtrips", c.hom.storage_roundtrips);
        s.read("delays", c.hom.delays);
        s.read("calibrate_visibility", c.hom.calibrate_visibility);
        s.finish();
    }
    {
        Section s(root.child("fit"), "fit");
        s.read("fixed_prefactor", c.fit.fixed_prefactor);
        s.finish();
    }
    root.finish();
    c.validate();
    return c;
}

json qibsim::config_to_json(const ExperimentConfig &c) {
    json j;
    j["schema_version"] = c.schema_version;
    j["source"] = {
        {"pair_probability", c.source.pair_probability},
        {"multipair", std::string(multipair_name(c.source.multipair))},
        {"max_pairs", c.source.max_pairs},
        {"herald_efficiency", c.source.herald_efficiency},
        {"mode_overlap", c.source.mode_overlap},
        {"bell_phase", c.source.bell_phase},
    };
    j["qib"] = {
        {"roundtrip_transmission", c.qib.roundtrip_transmission},
        {"qwp_angle_error", c.qib.qwp_angle_error},
        {"eom_extinction", std::isfinite(c.qib.eom_extinction) ? json(c.qib.eom_extinction) : json(nullptr)},
        {"roundtrip_time", c.qib.roundtrip_time},
    };
    j["rates"] = grid_to_json(c.rates);
    j["sweep"] = grid_to_json(c.sweep);
    const auto &mc = c.montecarlo;
    j["montecarlo"] = {
        {"p", mc.params.p},
        {"eta", mc.params.eta},
        {"M", mc.params.M},
        {"N", mc.params.N},
        {"f", mc.params.f},
        {"n_trials", mc.n_trials},
        {"seed", mc.seed},
        {"max_switch_rate", optional_number(mc.max_switch_rate)},
        {"relative_multiplexing", mc.relative_multiplexing},
        {"per_pair_restart", mc.per_pair_restart},
        {"dark_count_probability", mc.dark_count_probability},
        {"sample_postselection", mc.sample_postselection},
        {"detector_efficiency", mc.detector_efficiency},
    };
    j["protocol"] = {
        {"n", c.protocol.n},
        {"gaps", c.protocol.gaps},
        {"cluster_variant", c.protocol.cluster_variant},
        {"herald_pattern", c.protocol.herald_pattern},
        {"cphase_input", c.protocol.cphase_input},
    };
    j["hom"] = {
        {"storage_roundtrips", c.hom.storage_roundtrips},
        {"delays", c.hom.delays},
        {"calibrate_visibility", optional_number(c.hom.calibrate_visibility)},
    };
    j["fit"] = {{"fixed_prefactor", optional_number(c.fit.fixed_prefactor)}};
    return j;
}

ExperimentConfig qibsim::load_config_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open config file '" + path + "'");
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error &e) {
        throw std::invalid_argument("config file '" + path + "' is not valid JSON: " + e.what());
    }
    return config_from_json(j);
}

bool qibsim::operator==(const ExperimentConfig &a, const ExperimentConfig &b) {
    return config_to_json(a) == config_to_json(b);
}
