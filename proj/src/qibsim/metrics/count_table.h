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


#ifndef _QIBSIM_METRICS_COUNT_TABLE_H
#define _QIBSIM_METRICS_COUNT_TABLE_H

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>

namespace qibsim {

/// Event weights keyed by an outcome string such as "HVVH" or "+-+-".
///
/// Weights are raw counts for measured data or Born probabilities for exact evaluation.
/// They are never negative.
class CountTable {
   public:
    CountTable() = default;

    /// Throws std::invalid_argument on a negative or non-finite weight.
    void add(const std::string &outcome, double weight);
    double get(const std::string &outcome) const;
    double total() const;
    /// Length shared by all outcome strings. Throws if the table is empty or mixes lengths.
    std::size_t outcome_length() const;

    const std::map<std::string, double> &entries() const {
        return counts_;
    }
    bool operator==(const CountTable &) const = default;

    /// Two columns, "outcome,count", with a header row.
    void write_csv(std::ostream &out) const;
    /// Throws std::invalid_argument on malformed input.
    static CountTable read_csv(std::istream &in);

   private:
    std::map<std::string, double> counts_;
};

}  // namespace qibsim

#endif
