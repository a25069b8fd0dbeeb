// Copyright 2026 The zpf Authors
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

#ifndef ZPF_REPORT_FORMAT_H
#define ZPF_REPORT_FORMAT_H

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace zpf {

/// Fixed report formatting: 12 significant digits with trailing zeros dropped,
/// scientific notation when |v| < 1e-4 or |v| > 1e6, "0" for both zeros.
/// Locale independent; the decimal separator is always '.'.
std::string format_number(double v);

/// Serializes JSON with numbers rendered by format_number and a stable
/// two-space layout. Non-finite numbers become null. Byte-stable for equal input.
std::string dump_report_json(const nlohmann::ordered_json &doc);

/// Flattens a JSON document into "field,value" CSV rows with dotted paths
/// (e.g. summary.total_relative_energy, items.0.lambda_outcome).
std::string dump_report_csv(const nlohmann::ordered_json &doc);

/// Column-oriented numeric table.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

std::string table_to_csv(const Table &table);
/// {"columns": [...], "rows": [[...], ...]} with report number formatting.
std::string table_to_json(const Table &table);

}  // namespace zpf

#endif
