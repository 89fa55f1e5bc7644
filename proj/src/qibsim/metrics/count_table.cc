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


#include "qibsim/metrics/count_table.h"

#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "qibsim/util/format.h"

using namespace qibsim;

void CountTable::add(const std::string &outcome, double weight) {
    if (!(weight >= 0) || !std::isfinite(weight)) {
        throw std::invalid_argument("count for '" + outcome + "' must be finite and non-negative");
    }
    counts_[outcome] += weight;
}

double CountTable::get(const std::string &outcome) const {
    auto it = counts_.find(outcome);
    return it == counts_.end() ? 0.0 : it->second;
}

double CountTable::total() const {
    double t = 0;
    for (const auto &e : counts_) {
        t += e.second;
    }
    return t;
}

std::size_t CountTable::outcome_length() const {
    if (counts_.empty()) {
        throw std::invalid_argument("count table is empty");
    }
    std::size_t n = counts_.begin()->first.size();
    for (const auto &e : counts_) {
        if (e.first.size() != n) {
            throw std::invalid_argument("count table mixes outcome lengths");
        }
    }
    return n;
}

void CountTable::write_csv(std::ostream &out) const {
    out << "outcome,count\n";
    for (const auto &[outcome, weight] : counts_) {
        out << outcome << "," << format_double(weight) << "\n";
    }
}

CountTable CountTable::read_csv(std::istream &in) {
    CountTable table;
    std::string line;
    if (!std::getline(in, line)) {
        throw std::invalid_argument("count table CSV is empty");
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    if (line != "outcome,count") {
        throw std::invalid_argument("count table CSV must start with header 'outcome,count'");
    }
    int line_number = 1;
    while (std::getline(in, line)) {
        line_number++;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        auto comma = line.find(',');
        if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
            throw std::invalid_argument("line " + std::to_string(line_number) + ": expected two columns");
        }
        std::string outcome = line.substr(0, comma);
        if (outcome.empty()) {
            throw std::invalid_argument("line " + std::to_string(line_number) + ": empty outcome");
        }
        table.add(outcome, parse_double(std::string_view(line).substr(comma + 1)));
    }
    return table;
}
