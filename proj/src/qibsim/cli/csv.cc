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


#include "qibsim/cli/csv.h"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

using namespace qibsim;

namespace {

std::vector<std::string> split_line(const std::string &line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream s(line);
    while (std::getline(s, cell, ',')) {
        if (!cell.empty() && cell.back() == '\r') {
            cell.pop_back();
        }
        cells.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') {
        cells.emplace_back();
    }
    return cells;
}

}  // namespace

void CsvTable::add_row(std::vector<std::string> row) {
    if (row.size() != header.size()) {
        throw std::invalid_argument(
            "csv row has " + std::to_string(row.size()) + " cells, header has " + std::to_string(header.size()));
    }
    rows.push_back(std::move(row));
}

std::size_t CsvTable::column(const std::string &name) const {
    for (std::size_t i = 0; i < header.size(); i++) {
        if (header[i] == name) {
            return i;
        }
    }
    throw std::invalid_argument("csv has no column '" + name + "'");
}

void qibsim::write_csv(std::ostream &out, const CsvTable &table) {
    auto write_row = [&](const std::vector<std::string> &cells) {
        for (std::size_t i = 0; i < cells.size(); i++) {
            if (i) {
                out << ',';
            }
            out << cells[i];
        }
        out << '\n';
    };
    write_row(table.header);
    for (const auto &r : table.rows) {
        write_row(r);
    }
}

CsvTable qibsim::read_csv(std::istream &in) {
    CsvTable table;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (!have_header) {
            table.header = split_line(line);
            have_header = true;
        } else {
            table.add_row(split_line(line));
        }
    }
    if (!have_header) {
        throw std::invalid_argument("csv is empty");
    }
    return table;
}
