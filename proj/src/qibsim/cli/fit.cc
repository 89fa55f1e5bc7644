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


#include "qibsim/cli/fit.h"

#include <cmath>
#include <stdexcept>

#include "qibsim/cli/csv.h"
#include "qibsim/util/format.h"

using namespace qibsim;

FitResult qibsim::fit_exponential_decay(const std::vector<DecayPoint> &points, std::optional<double> fixed_prefactor) {
    if (points.size() < 3) {
        throw std::invalid_argument("fit needs at least 3 points");
    }
    if (fixed_prefactor.has_value() && !(*fixed_prefactor > 0)) {
        throw std::invalid_argument("fixed prefactor must be > 0");
    }
    double sw = 0, swn = 0, swnn = 0, swy = 0, swny = 0;
    for (const auto &pt : points) {
        if (!(pt.efficiency > 0) || !(pt.standard_error > 0) || !std::isfinite(pt.roundtrips)) {
            throw std::invalid_argument("fit needs positive efficiencies and errors");
        }
        double w = (pt.efficiency / pt.standard_error) * (pt.efficiency / pt.standard_error);
        double y = std::log(pt.efficiency);
        sw += w;
        swn += w * pt.roundtrips;
        swnn += w * pt.roundtrips * pt.roundtrips;
        swy += w * y;
        swny += w * pt.roundtrips * y;
    }

    FitResult r;
    double intercept = 0;
    double slope = 0;
    double slope_sigma = 0;
    if (fixed_prefactor.has_value()) {
        if (!(swnn > 0)) {
            throw std::domain_error("fit is singular: every point is at zero roundtrips");
        }
        intercept = std::log(*fixed_prefactor);
        slope = (swny - intercept * swn) / swnn;
        slope_sigma = 1 / std::sqrt(swnn);
        r.prefactor_was_fixed = true;
    } else {
        double det = sw * swnn - swn * swn;
        if (!(det > 1e-12 * sw * swnn)) {
            throw std::domain_error("fit is singular: all points share one roundtrip count");
        }
        slope = (sw * swny - swn * swy) / det;
        intercept = (swy - slope * swn) / sw;
        slope_sigma = std::sqrt(sw / det);
    }
    r.eta_fit = std::exp(slope);
    r.eta_stderr = r.eta_fit * slope_sigma;
    r.prefactor = std::exp(intercept);
    double chi2 = 0;
    for (const auto &pt : points) {
        double w = (pt.efficiency / pt.standard_error) * (pt.efficiency / pt.standard_error);
        double resid = std::log(pt.efficiency) - intercept - slope * pt.roundtrips;
        chi2 += w * resid * resid;
    }
    r.residual_norm = std::sqrt(chi2);
    if (!(r.eta_fit > 0 && r.eta_fit <= 1)) {
        throw std::domain_error("fitted eta " + format_double(r.eta_fit) + " lies outside (0, 1]");
    }
    return r;
}

std::vector<DecayPoint> qibsim::read_decay_csv(std::istream &in) {
    CsvTable t = read_csv(in);
    std::size_t cn = t.column("roundtrips");
    std::size_t ce = t.column("efficiency");
    std::size_t cs = t.column("stderr");
    std::vector<DecayPoint> out;
    for (const auto &row : t.rows) {
        out.push_back({parse_double(row[cn]), parse_double(row[ce]), parse_double(row[cs])});
    }
    return out;
}
