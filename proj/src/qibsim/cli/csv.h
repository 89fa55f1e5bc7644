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


#ifndef _QIBSIM_CLI_CSV_H
#define _QIBSIM_CLI_CSV_H

#include <iosfwd>
#include <string>
#include <vector>

namespace qibsim {

/// Header plus rows of equal width. Cells are written as given, so callers format numbers with
/// format_double.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    /// Throws std::invalid_argument when the row width differs from the header.
    void add_row(std::vector<std::string> row);
    /// Index of a header column. Throws std::invalid_argument when absent.
    std::size_t column(const std::string &name) const;
};

void write_csv(std::ostream &out, const CsvTable &table);

/// Comma-separated cells without quoting; the first non-empty line is the header. Throws
/// std::invalid_argument on ragged rows.
CsvTable read_csv(std::istream &in);

}  // namespace qibsim

#endif
